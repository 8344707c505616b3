#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cookie/dist_table.hpp"
#include "cookie/env.hpp"
#include "cookie/rng.hpp"

namespace cookie {

inline constexpr std::uint64_t kDefaultStepCap = 100'000'000;
inline constexpr std::size_t kDefaultNeverHitLevel = 10'000;

/// Summary of one walk run from 0 until it first hits level n.
struct WalkRecord {
  std::size_t n = 0;
  /// First hitting time of n.
  std::uint64_t hitting_time = 0;
  /// U[i] = left jumps from site i before the hitting time, i = 0..n.
  std::vector<std::uint64_t> left_jumps;
  /// Steps taken from sites < 0.
  std::uint64_t negative_time = 0;
  /// Arrivals at 0 after time 0.
  std::uint64_t returns_to_origin = 0;
  bool hit_minus_one = false;
  /// Set when the run stopped at the first visit to -1 instead of at n.
  bool stopped_at_minus_one = false;

  /// T_n - (K_n - U_0 + n + 2 sum U_k); zero for every complete record.
  std::int64_t identity_defect() const noexcept;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
};

struct WalkOptions {
  std::uint64_t step_cap = kDefaultStepCap;
  /// Stop as soon as -1 is visited; left_jumps is then partial.
  bool stop_at_minus_one = false;
  /// Worker threads for replicate loops; 0 uses hardware concurrency.
  unsigned threads = 0;
};

/// Right-step probability for a visit that finds `visits_so_far` earlier
/// visits at the current site.
double step_rule(const CookieEnv& env, std::uint64_t visits_so_far) noexcept;

/// Runs one walk with the given stream. Throws StepCapExceeded when the
/// step budget runs out first.
WalkRecord simulate_to_level(const CookieEnv& env, std::size_t n, SplitMix64& rng,
                             const WalkOptions& options = {});

/// Runs replicate 0 of `seed`.
WalkRecord simulate_to_level(const CookieEnv& env, std::size_t n, std::uint64_t seed,
                             const WalkOptions& options = {});

/// Mean of n / T_n over `reps` replicates; replicate r uses stream (seed, r).
McEstimate estimate_speed_mc(const CookieEnv& env, std::size_t n, std::size_t reps,
                             std::uint64_t seed, const WalkOptions& options = {});

/// Fraction of replicates that reach `level` before visiting -1. Biased
/// upward; the bias shrinks as level grows.
McEstimate estimate_never_hit_minus_one(const CookieEnv& env, std::size_t level,
                                        std::size_t reps, std::uint64_t seed,
                                        const WalkOptions& options = {});

/// Empirical law of U_0^n over `reps` replicates. Rejected when alpha <= 0.
DistTable sample_u0_distribution(const CookieEnv& env, std::size_t n, std::size_t reps,
                                 std::uint64_t seed, const WalkOptions& options = {});

/// U_0^L + U_1^L of replicate 0 of `seed`.
std::uint64_t count_returns_to_origin(const CookieEnv& env, std::size_t level,
                                      std::uint64_t seed, const WalkOptions& options = {});

/// Empirical E[s^R] with R = returns to the origin before `level`.
McEstimate estimate_returns_pgf(const CookieEnv& env, std::size_t level, double s,
                                std::size_t reps, std::uint64_t seed,
                                const WalkOptions& options = {});

/// Runs f(r) for r in [0, reps) on a fixed partition of worker threads and
/// returns the values in replicate order. Output does not depend on the
/// thread count.
std::vector<double> run_replicates(std::size_t reps, unsigned threads,
                                   const std::function<double(std::size_t)>& f);

/// Mean and sample standard deviation / sqrt(n) of `values`.
McEstimate summarize(const std::vector<double>& values, std::uint64_t seed);

}  // namespace cookie
