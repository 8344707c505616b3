#include <doctest.h>

#include <cmath>

#include "cookie/errors.hpp"
#include "cookie/kernel.hpp"
#include "cookie_suite/oracles.hpp"

using namespace cookie;

TEST_CASE("bernoulli_prob") {
  const CookieEnv env = validate_environment(2, {0.9, 0.6});
  CHECK(bernoulli_prob(env, 1) == 0.9);
  CHECK(bernoulli_prob(env, 2) == 0.6);
  CHECK(bernoulli_prob(env, 3) == 0.5);
  CHECK_THROWS_AS(bernoulli_prob(env, 0), InvalidArgument);
}

TEST_CASE("a_distribution hand cases") {
  const DistTable a0 = a_distribution(validate_environment(1, {0.9}), 0, 200);
  CHECK(a0.at(0) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(a0.at(2) == doctest::Approx(0.025).epsilon(1e-15));
  CHECK(a0.at(7) == doctest::Approx(0.1 * std::ldexp(1.0, -7)).epsilon(1e-14));
  CHECK(a0.total_mass() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(a0.truncated);

  const DistTable a1 = a_distribution(validate_environment(1, {0.5}), 1, 200);
  CHECK(a1.at(1) == doctest::Approx(0.25).epsilon(1e-15));
  for (std::size_t i = 0; i < 30; ++i) {
    CHECK(a1.at(i) == doctest::Approx((i + 1) * std::ldexp(1.0, -static_cast<int>(i) - 2))
                          .epsilon(1e-14));
  }
}

TEST_CASE("a_distribution matches string enumeration") {
  const CookieEnv env = validate_environment(3, {0.9, 0.8, 0.7});
  const std::size_t j = 4;
  const auto brute = oracle::enumerate_a_distribution(env, j, 16);
  const DistTable dp = a_distribution(env, j, 64);
  REQUIRE(brute.size() >= 11);
  for (std::size_t i = 0; i <= 10; ++i) CHECK(std::abs(dp.at(i) - brute[i]) < 1e-12);
}

TEST_CASE("a_distribution is a convolution with NegBinomial for j >= M") {
  const CookieEnv env = validate_environment(2, {0.95, 0.7});
  const std::size_t cap = 256;
  const DistTable base = a_distribution(env, 1, cap);
  for (std::size_t j : {2u, 5u}) {
    const auto nb = oracle::negative_binomial_pmf(j - 1, cap);
    const auto expect = oracle::convolve(base.atoms, nb, cap);
    const DistTable row = a_distribution(env, j, cap);
    for (std::size_t i = 0; i <= cap; ++i) CHECK(std::abs(row.at(i) - expect[i]) < 1e-12);
  }
}

TEST_CASE("small cap sets the truncated flag but still returns the table") {
  const DistTable t = a_distribution(validate_environment(3, {0.9, 0.9, 0.9}), 40, 8);
  CHECK(t.truncated);
  CHECK(t.support_cap() == 8);
  CHECK(t.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("negative binomial helpers") {
  const auto oracle_pmf = oracle::negative_binomial_pmf(7, 60);
  const auto pmf = negative_binomial_half_pmf(7, 60);
  for (std::size_t i = 0; i <= 60; ++i) CHECK(std::abs(pmf[i] - oracle_pmf[i]) < 1e-15);
  double head = 0.0;
  for (double v : pmf) head += v;
  CHECK(negative_binomial_half_tail(7, 60) == doctest::Approx(1.0 - head).epsilon(1e-9));

  const auto zero = negative_binomial_half_pmf(0, 5);
  CHECK(zero[0] == 1.0);
  CHECK(zero[3] == 0.0);

  // Large orders start from the mode instead of underflowing.
  const auto big = negative_binomial_half_pmf(3000, 4000);
  double total = 0.0;
  for (double v : big) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("closed-form p.g.f.") {
  const CookieEnv one = validate_environment(1, {0.9});
  const PgfClosedForm form = a_pgf_form(one, 0);
  REQUIRE(form.terms.size() == 2);
  CHECK(form.terms[0] == PgfTerm{0.9, 0, 0});
  CHECK(form.terms[1].coef == doctest::Approx(0.1));
  CHECK(form.terms[1].s_power == 1);
  CHECK(form.terms[1].nb_order == 1);
  CHECK(a_pgf_eval(form, 0.5) == doctest::Approx(0.9 + 0.1 * (0.5 / 1.5)).epsilon(1e-15));
  CHECK(a_pgf_eval(form, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(a_pgf_eval(form, 2.0), DomainError);
  CHECK_THROWS_AS(a_pgf_eval(form, -0.1), DomainError);
  CHECK_THROWS_AS(a_pgf_eval(form, 0.0), DomainError);

  const PgfClosedForm constant{{PgfTerm{1.0, 0, 0}}};
  const auto d = a_pgf_derivatives_at_1(constant, 4);
  CHECK(d[0] == 1.0);
  for (int k = 1; k <= 4; ++k) CHECK(d[k] == 0.0);
}

TEST_CASE("p.g.f. agrees with the tabulated law") {
  const CookieEnv env = validate_environment(3, {0.9, 0.8, 0.7});
  for (std::size_t j : {0u, 2u, 4u}) {
    const PgfClosedForm form = a_pgf_form(env, j);
    CHECK(form.coefficient_sum() == doctest::Approx(1.0).epsilon(1e-14));
    const DistTable t = a_distribution(env, j, 2000);
    for (double s : {0.1, 0.5, 0.9, 1.0}) {
      double direct = 0.0;
      for (std::size_t i = t.support_cap() + 1; i-- > 0;) direct = direct * s + t.at(i);
      CHECK(std::abs(a_pgf_eval(form, s) - direct) < 1e-12);
    }
    const auto d = a_pgf_derivatives_at_1(form, 1);
    CHECK(d[1] == doctest::Approx(t.mean()).epsilon(1e-10));
  }
}

TEST_CASE("mean of A_{M-1}") {
  CHECK(mean_a_closed_form(validate_environment(3, {0.9, 0.8, 0.7})) ==
        doctest::Approx(1.2).epsilon(1e-15));
  CHECK(mean_a_closed_form(validate_environment(2, {1.0, 1.0})) == 0.0);
  CHECK(mean_a_closed_form(validate_environment(2, {0.5, 0.5})) == doctest::Approx(2.0));
  for (const auto& p : {std::vector<double>{0.9, 0.8, 0.7}, std::vector<double>{0.6, 0.99}}) {
    const CookieEnv env = validate_environment(static_cast<long long>(p.size()), p);
    const auto d = a_pgf_derivatives_at_1(a_pgf_form(env, env.cookies() - 1), 1);
    CHECK(std::abs(d[1] - mean_a_closed_form(env)) < 1e-12);
  }
}

TEST_CASE("distribution identity for A_{M-1}") {
  CHECK(a_m1_distribution_identity(validate_environment(1, {0.9}), 2) ==
        doctest::Approx(0.025).epsilon(1e-15));
  CHECK(a_m1_distribution_identity(validate_environment(2, {0.5, 0.5}), 1) ==
        doctest::Approx(0.25).epsilon(1e-15));
  const CookieEnv env = validate_environment(3, {0.9, 0.8, 0.7});
  const DistTable t = a_distribution(env, 2, 64);
  for (std::size_t j = 1; j <= 20; ++j) CHECK(std::abs(a_m1_distribution_identity(env, j) - t.at(j)) < 1e-12);

  const auto l = failure_count_distribution(env);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == doctest::Approx(0.9 * 0.8 * 0.7));
  CHECK(l[3] == doctest::Approx(0.1 * 0.2 * 0.3));
}

TEST_CASE("binomial helpers") {
  CHECK(binomial_coefficient(10, 3) == 120.0);
  CHECK(binomial_coefficient(5, 7) == 0.0);
  CHECK(binomial_coefficient(100, 50) == doctest::Approx(1.0089134454556419e29).epsilon(1e-12));
  CHECK(binomial_times_half_power(10, 3, 10) == doctest::Approx(120.0 / 1024.0));
  CHECK(binomial_times_half_power(2000, 1000, 2000) ==
        doctest::Approx(0.017839011969296).epsilon(1e-9));
}

TEST_CASE("negative binomial tail terminates when the first term is subnormal") {
  // Around cap 1024 the first tail term lands in the subnormal range.
  for (std::size_t cap : {1000u, 1024u, 1060u, 1100u}) {
    double worst = 0.0;
    for (std::size_t r = 1; r <= 8; ++r) worst = std::max(worst, negative_binomial_half_tail(r, cap));
    CHECK(worst < 1e-280);
  }
}
