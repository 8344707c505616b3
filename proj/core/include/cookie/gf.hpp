#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cookie/chain.hpp"
#include "cookie/env.hpp"
#include "cookie/kernel.hpp"
#include "cookie/taylor.hpp"

namespace cookie {

/// G(s) = E[s^{Z_inf}] on [0, 1] from the solved atoms.
double g_eval(const StationarySolve& solve, double s);

/// The coefficient functions of
///   1 - G(1/(2-s)) = a(s) (1 - G(s)) + b(s),
/// with a(s) = 1 / ((2-s)^{M-1} E[s^{A_{M-1}}]) and
/// b(s) = 1 - a(s) + sum_{k <= M-2} pi_k (E[s^{A_k}] a(s) - (2-s)^{-k}).
/// pi_k are the stationary atoms P{Z_inf = k}.
struct AbPair {
  std::size_t cookies = 0;
  /// forms[k] is the closed form of E[s^{A_k}], k = 0..M-1.
  std::vector<PgfClosedForm> forms;
  /// pi_0..pi_{M-2}.
  std::vector<double> atoms_used;

  double a(double s) const;
  double b(double s) const;
  Series5 a_series() const;
  Series5 b_series() const;
};

AbPair build_ab(const CookieEnv& env, const StationarySolve& solve);

/// Same pair with caller-chosen atoms, for sensitivity studies.
AbPair build_ab(const CookieEnv& env, std::vector<double> atoms);

/// max over the grid of |1 - G(1/(2-s)) - a(s)(1 - G(s)) - b(s)|.
double functional_equation_residual(const CookieEnv& env, const StationarySolve& solve,
                                    const std::vector<double>& s_grid);

/// Residual with an explicit pair, e.g. one built from perturbed atoms.
double functional_equation_residual(const AbPair& pair, const StationarySolve& solve,
                                    const std::vector<double>& s_grid);

struct TaylorAt1 {
  double a1 = 0.0;
  double a2 = 0.0;
  double b0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
};

/// Derivatives at s = 1 by exact series arithmetic.
TaylorAt1 derivatives_at_1(const AbPair& pair);

/// v = (alpha - 1) / (alpha - 1 + b''(1)). RegimeError unless alpha > 1.
double speed_route_b(const CookieEnv& env, const StationarySolve& solve);

/// pi_0 for M = 2 from b'(1) = 0, which is linear in the single atom.
double solve_g0_m2(const CookieEnv& env);

/// p.g.f. of the returns to the origin, R = U_0 + U_1:
///   H(s) = G(s/(2-s)) / a(s) + sum_{k <= M-2} pi_k s^k (E[s^{A_k}] - 1/(a(s)(2-s)^k)).
double returns_pgf(const CookieEnv& env, const StationarySolve& solve, double s);

struct ScanRow {
  double p = 0.0;
  double alpha = 0.0;
  Phase phase = Phase::Recurrent;
  double v = 0.0;
  /// v / (alpha - 1) when alpha > 1.
  std::optional<double> ratio;
  std::optional<double> b2;
  bool refinement = false;
  std::string error;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  double step = 0.0;
  double max_jump = 0.0;
  double max_ratio = 0.0;
  bool monotone = true;
  /// Ratios at the two supercritical points closest to the threshold.
  std::optional<double> finest_ratio;
  std::optional<double> next_ratio;
};

/// Uniform grid from..to with spacing step, the threshold p_c = 1/M + 1/2
/// and points p_c + step 2^{-h}, h = 1..halvings; sorted.
std::vector<std::pair<double, bool>> critical_grid(long long m, double from, double to,
                                                   double step, int halvings = 3);

/// Route-B speed along uniform environments [p]_M. Errors are recorded per
/// row and the scan continues.
ScanResult critical_scan(long long m, const std::vector<std::pair<double, bool>>& grid,
                         double step, const SolverConfig& config);

}  // namespace cookie
