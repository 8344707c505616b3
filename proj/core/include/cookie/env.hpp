#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cookie {

/// A spatially uniform cookie environment: M cookies per site with strengths
/// p_1..p_M. Visits beyond the M-th behave as a fair coin.
///
/// Instances are only created through validate_environment(), so every
/// CookieEnv in circulation satisfies 1/2 <= p_i <= 1.
class CookieEnv {
 public:
  /// Number of cookies per site (M).
  std::size_t cookies() const noexcept { return strengths_.size(); }

  /// Strengths p_1..p_M.
  std::span<const double> strengths() const noexcept { return strengths_; }

  /// Right-step probability on the i-th visit (1-based); 1/2 once i > M.
  double strength(std::size_t i) const noexcept {
    return (i >= 1 && i <= strengths_.size()) ? strengths_[i - 1] : 0.5;
  }

  /// True when some p_i equals 1.
  bool degenerate() const noexcept { return degenerate_; }

  std::string describe() const;

  friend bool operator==(const CookieEnv&, const CookieEnv&) = default;

 private:
  friend CookieEnv validate_environment(long long, std::vector<double>);
  CookieEnv(std::vector<double> p, bool degenerate)
      : strengths_(std::move(p)), degenerate_(degenerate) {}

  std::vector<double> strengths_;
  bool degenerate_ = false;
};

/// Builds a CookieEnv, throwing LengthMismatch or OutOfRange on bad input.
CookieEnv validate_environment(long long m, std::vector<double> p);

/// Uniform environment [p]_M.
CookieEnv uniform_environment(long long m, double p);

/// alpha = sum_i (2 p_i - 1) - 1; it decides recurrence (<= 0) and
/// positive speed (> 1).
double alpha(const CookieEnv& env) noexcept;

enum class Phase { Recurrent, TransientZeroSpeed, Critical, TransientPositiveSpeed };

std::string_view to_string(Phase phase) noexcept;

inline constexpr double kDefaultCriticalBand = 1e-9;

struct PhaseLabel {
  Phase phase = Phase::Recurrent;
  double alpha = 0.0;
  /// |alpha - 1| < band.
  bool near_critical = false;
  /// alpha == 1 in floating point.
  bool exactly_critical = false;
};

/// Labels the phase from alpha alone. Points with |alpha - 1| < band are
/// labelled Critical; exact equality is reported separately.
PhaseLabel classify(const CookieEnv& env, double critical_band = kDefaultCriticalBand) noexcept;

/// True iff #{j <= i : p_j = 1} <= i/2 for every i <= M, i.e. the migration
/// chain started from 0 is unbounded. When false the chain never leaves
/// {0, .., M-1}.
bool z_unbounded_condition(const CookieEnv& env) noexcept;

/// Parses "0.9,0.9,0.9" into strengths.
std::vector<double> parse_strength_list(std::string_view text);

/// Reads flat key=value lines; '#' starts a comment.
std::map<std::string, std::string> parse_key_value(std::string_view text);
std::map<std::string, std::string> read_key_value_file(const std::string& path);

/// Builds an environment from the keys `m` and `p` of a parsed config.
CookieEnv environment_from_config(const std::map<std::string, std::string>& config);

}  // namespace cookie
