#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cookie/dist_table.hpp"
#include "cookie/env.hpp"
#include "cookie/tail_fit.hpp"
#include "cookie/transition_rows.hpp"
#include "cookie/walk.hpp"

namespace cookie {

struct SolverConfig {
  std::size_t cap = 8192;
  double tol = 1e-12;
  /// Budget for the bounded-support power iteration.
  std::size_t max_iterations = 1'000'000;
  double prune = kDefaultPruneRelative;
  /// Tail fit window as fractions of cap.
  double fit_lo_fraction = 0.125;
  double fit_hi_fraction = 0.5;
  std::size_t tail_terms = 4;
  double critical_band = kDefaultCriticalBand;
};

/// Power-law fit of the stationary atoms, normalised to the solved law.
struct TailFit {
  PowerTailModel model;
  /// Fitted exponent of P{Z > n}, i.e. model.beta.
  double exponent = 0.0;
  /// Leading coefficient of the atom tail, c in pi_k ~ c k^{-1-exponent}.
  double c = 0.0;
};

/// Stationary law of the migration chain on {0, .., cap}.
///
/// For unbounded chains the law comes from Grassmann-Taksar-Heyman
/// elimination of the truncated kernel; atoms above trusted_cap are replaced
/// by the fitted tail, and residual is the fitted mass beyond cap.
struct StationarySolve {
  DistTable pi;
  /// Eliminated states, or power iterations for a bounded chain.
  std::size_t iterations = 0;
  /// Half L1 norm of (pi P - pi) over states 0..trusted_cap.
  double tv_gap = 0.0;
  std::optional<TailFit> tail_fit;
  /// Atoms at or below this index come from the solve itself.
  std::size_t trusted_cap = 0;
  /// The chain started at 0 never leaves {0, .., M-1}.
  bool bounded = false;
  double alpha = 0.0;
  std::size_t cookies = 0;
};

/// Z_0 = z0, then Z_{k+1} ~ A_{Z_k}; returns Z_0..Z_steps.
std::vector<std::uint64_t> simulate_chain(const CookieEnv& env, std::size_t steps,
                                          std::uint64_t seed, std::uint64_t z0 = 0);

/// Law of Z_n from Z_0 = z0 on {0, .., cap}; mass leaving the cap is residual.
DistTable distribution_after_n_steps(const CookieEnv& env, std::size_t n, std::size_t cap,
                                     std::size_t z0 = 0);

/// Laws of Z_1..Z_n from z0 on {0, .., cap}, reusing one set of rows.
std::vector<DistTable> distributions_up_to(const CookieEnv& env, std::size_t n,
                                           std::size_t cap, std::size_t z0 = 0);

/// Stationary law. Throws NotPositiveRecurrent when alpha <= 0 and the chain
/// is unbounded, NoConvergence when a bounded power iteration stalls.
StationarySolve stationary_distribution(const CookieEnv& env, const SolverConfig& config = {});

/// Half L1 norm of (pi P - pi) over states 0..upto using exact kernel rows.
double stationarity_defect(const CookieEnv& env, const DistTable& pi, std::size_t upto);

/// E[Z_inf]: +infinity unless alpha > 1 or the chain is bounded. Also
/// returns the partial sum over the atoms as the second member.
std::pair<double, double> expected_z_inf(const StationarySolve& solve);

struct TailExponent {
  double exponent = 0.0;
  double r2 = 0.0;
  bool log_model = false;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
};

/// Least-squares slope of log P{Z > n} against log n over [lo, hi]. The
/// model with an extra ln ln n term is also fitted and kept when its AIC is
/// lower. Throws InsufficientTail when the window carries too little mass.
TailExponent tail_exponent(const StationarySolve& solve, std::size_t lo, std::size_t hi,
                           double tol = 1e-12);

struct MomentDiagnostic {
  std::vector<std::size_t> cutoffs;
  std::vector<double> partial_sums;
  std::vector<double> increments;
  /// Increment ratios between consecutive doublings of the cutoff.
  std::vector<double> ratios;
  /// Moment order minus the tail exponent implied by the last ratio.
  double implied_growth = 0.0;
  bool bounded_support = false;
  /// Last increment is not negligible against the running sum.
  bool diverging = false;
};

/// Partial sums sum_{i <= N} i^order pi_i over the given cutoffs.
MomentDiagnostic moment_divergence_diagnostic(const StationarySolve& solve, int order,
                                              const std::vector<std::size_t>& cutoffs);

struct SpeedReport {
  double alpha = 0.0;
  PhaseLabel label;
  std::optional<double> v_route_a;
  std::optional<double> v_route_b;
  std::optional<McEstimate> v_mc;
  std::optional<double> e_z_inf;
  std::optional<double> b2_at_1;
  std::optional<double> g0;
  std::vector<std::string> warnings;
};

/// Speed through 1 / (1 + 2 E[Z_inf]). Reuses `solve` when given.
SpeedReport speed_route_a(const CookieEnv& env, const SolverConfig& config = {},
                          const StationarySolve* solve = nullptr);

}  // namespace cookie
