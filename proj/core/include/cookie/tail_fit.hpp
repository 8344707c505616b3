#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cookie {

/// Asymptotic model for atoms of a power-law tail:
///   x_k ~ k^{-1-beta} * sum_m (c_m + d_m ln k) k^{-m},
/// with d_m = 0 unless the logarithmic variant was selected.
struct PowerTailModel {
  double beta = 0.0;
  std::vector<double> coefs;
  std::vector<double> log_coefs;
  /// RMS relative misfit over the window.
  double rms = 0.0;
  double aic = 0.0;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;

  bool has_log_terms() const noexcept { return !log_coefs.empty(); }
  double operator()(double k) const noexcept;

  /// sum_{k >= from} k^power * model(k) via Euler-Maclaurin. Requires the
  /// sum to converge (beta > power).
  double tail_sum(std::size_t from, int power = 0) const;

  /// Same model with every coefficient multiplied by `factor`.
  PowerTailModel scaled(double factor) const;
};

/// Least-squares fit of `x` on [lo, hi] with `terms` correction orders.
/// beta is chosen by Brent minimisation of the RMS relative residual on
/// [beta_min, beta_max]; coefficients come from a QR solve at each beta.
/// With `try_log` the logarithmic variant is also fitted and the lower-AIC
/// model is returned. Throws InsufficientTail when the window holds
/// non-positive entries or fewer points than parameters.
PowerTailModel fit_power_tail(std::span<const double> x, std::size_t lo, std::size_t hi,
                              std::size_t terms, double beta_min, double beta_max,
                              bool try_log = false);

/// Hurwitz-type sum sum_{k >= n} k^{-s} (ln k)^q for q in {0, 1}, s > 1, n >= 1.
double power_log_tail_sum(double s, int q, std::size_t n);

/// Ordinary least squares of y on the columns of `design` (row-major,
/// `cols` columns). Returns the coefficients and writes the residual sum of
/// squares to `rss` when given.
std::vector<double> least_squares(const std::vector<double>& design, std::size_t cols,
                                  std::span<const double> y, double* rss = nullptr);

}  // namespace cookie
