#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cookie/dist_table.hpp"
#include "cookie/env.hpp"
#include "cookie/taylor.hpp"

namespace cookie {

inline constexpr std::size_t kDefaultKernelCap = 4096;

/// P{B_i = 1}: p_i for i <= M, 1/2 afterwards. Throws InvalidArgument for i = 0.
double bernoulli_prob(const CookieEnv& env, std::size_t i);

/// Law of A_j, the number of failures before the (j+1)-th success in the
/// Bernoulli sequence (p_1, .., p_M, 1/2, 1/2, ...). This is row j of the
/// migration chain's transition matrix.
///
/// The first M trials are handled by a DP over (successes, failures); states
/// still alive after trial M finish with a NegBinomial(j + 1 - u, 1/2) number
/// of failures appended by exact convolution. Mass beyond `cap` goes to the
/// residual and `truncated` is set when it exceeds `tol`.
DistTable a_distribution(const CookieEnv& env, std::size_t j, std::size_t cap,
                         double tol = kDefaultResidualTolerance);

/// pmf of the number of failures before r successes of a fair coin on
/// {0, .., cap}. r = 0 is a point mass at 0.
std::vector<double> negative_binomial_half_pmf(std::size_t r, std::size_t cap);

/// P{NegBinomial(r, 1/2) > cap}.
double negative_binomial_half_tail(std::size_t r, std::size_t cap);

/// One term coef * s^f * (2 - s)^(-r).
struct PgfTerm {
  double coef = 0.0;
  std::size_t s_power = 0;
  std::size_t nb_order = 0;

  friend bool operator==(const PgfTerm&, const PgfTerm&) = default;
};

/// E[s^{A_j}] as a finite sum of PgfTerm. Each term is one end state of the
/// first-M-trials DP: absorbed states carry r = 0, surviving states carry the
/// number r of fair-coin successes still needed.
struct PgfClosedForm {
  std::vector<PgfTerm> terms;

  /// Expansion in x = s - 1 up to x^5.
  Series5 series_at_1() const;
  double coefficient_sum() const noexcept;
};

PgfClosedForm a_pgf_form(const CookieEnv& env, std::size_t j);

/// Evaluates the closed form at s in (0, 2); DomainError otherwise.
double a_pgf_eval(const PgfClosedForm& form, double s);

/// Derivatives of orders 0..order at s = 1 (index = order), by exact
/// series arithmetic. order must be at most 4.
std::vector<double> a_pgf_derivatives_at_1(const PgfClosedForm& form, int order);

/// E[A_{M-1}] = 2 sum_i (1 - p_i).
double mean_a_closed_form(const CookieEnv& env) noexcept;

/// Law of L, the number of failures among the first M trials.
std::vector<double> failure_count_distribution(const CookieEnv& env);

/// P{A_{M-1} = j} for j >= 1 via sum_l P{L = l} C(j-1, l-1) 2^{-j}. Used as an
/// independent check of a_distribution(env, M-1).
double a_m1_distribution_identity(const CookieEnv& env, std::size_t j);

/// C(n, k): exact integer arithmetic for n < 60, floating point otherwise.
double binomial_coefficient(std::uint64_t n, std::uint64_t k);

/// C(n, k) * 2^{-e}, evaluated in log space when the parts would over/underflow.
double binomial_times_half_power(std::uint64_t n, std::uint64_t k, std::uint64_t e);

}  // namespace cookie
