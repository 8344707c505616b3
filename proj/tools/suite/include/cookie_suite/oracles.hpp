#pragma once

#include <cstddef>
#include <vector>

#include "cookie/env.hpp"

namespace cookie::oracle {

/// P{A_j = i} for i = 0..max_len-j-1 by depth-first enumeration of every
/// Bernoulli string of length <= max_len, stopping at the (j+1)-th success.
std::vector<double> enumerate_a_distribution(const CookieEnv& env, std::size_t j,
                                             std::size_t max_len);

/// NegBinomial(r, 1/2) failures pmf on 0..cap via Boost.Math.
std::vector<double> negative_binomial_pmf(std::size_t r, std::size_t cap);

/// Plain truncated convolution.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b,
                             std::size_t cap);

struct ChiSquare {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

/// Pearson test of observed counts against expected probabilities. Cells
/// with expected count below `min_expected` are pooled into the right tail.
ChiSquare chi_square(const std::vector<double>& observed_freq, const std::vector<double>& expected,
                     std::size_t reps, double min_expected = 5.0);

/// Central-difference derivative of f at x with Richardson extrapolation
/// over steps h and h/2.
template <class F>
double richardson_derivative(F&& f, double x, double h, int order) {
  auto central = [&](double step) {
    if (order == 1) return (f(x + step) - f(x - step)) / (2.0 * step);
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace cookie::oracle
