#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cookie/errors.hpp"
#include "cookie/tail_fit.hpp"

using namespace cookie;

namespace {

// sum_{k >= n} k^{-s} (ln k)^q by brute force to `upto`, plus the integral
// remainder, which is accurate to O(upto^{-s}).
double brute_tail(double s, int q, std::size_t n, std::size_t upto) {
  double sum = 0.0;
  for (std::size_t k = upto; k >= n; --k) {
    const double kd = static_cast<double>(k);
    sum += std::pow(kd, -s) * (q == 1 ? std::log(kd) : 1.0);
  }
  const double u = static_cast<double>(upto) + 0.5;
  const double rest = q == 0 ? std::pow(u, 1.0 - s) / (s - 1.0)
                             : std::pow(u, 1.0 - s) * (std::log(u) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
  return sum + rest;
}

}  // namespace

TEST_CASE("least squares recovers an exact line") {
  std::vector<double> design, y;
  for (int i = 0; i < 10; ++i) {
    design.insert(design.end(), {1.0, static_cast<double>(i)});
    y.push_back(2.0 - 0.5 * i);
  }
  double rss = -1.0;
  const auto c = least_squares(design, 2, y, &rss);
  CHECK(c[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(c[1] == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(rss < 1e-24);
}

TEST_CASE("Hurwitz-type sums") {
  CHECK(power_log_tail_sum(2.0, 0, 1) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-13));
  for (double s : {1.2, 1.8, 2.4}) {
    for (int q : {0, 1}) {
      for (std::size_t n : {1u, 50u, 300u}) {
        const double got = power_log_tail_sum(s, q, n);
        CHECK(got == doctest::Approx(brute_tail(s, q, n, 400'000)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("power tail fit recovers a synthetic tail") {
  std::vector<double> x(4097, 0.0);
  for (std::size_t k = 1; k < x.size(); ++k) {
    const double kd = static_cast<double>(k);
    x[k] = 3.0 * std::pow(kd, -1.7) * (1.0 + 2.0 / kd - 1.5 / (kd * kd));
  }
  const PowerTailModel m = fit_power_tail(x, 512, 2048, 4, 0.2, 1.2);
  CHECK(m.beta == doctest::Approx(0.7).epsilon(1e-6));
  CHECK(m.coefs[0] == doctest::Approx(3.0).epsilon(1e-5));
  CHECK(m(3000.0) == doctest::Approx(x[3000]).epsilon(1e-8));
  CHECK(m.rms < 1e-9);

  double direct = 0.0;
  for (std::size_t k = 2049; k < x.size(); ++k) direct += x[k];
  const double model_part = m.tail_sum(2049) - m.tail_sum(4097);
  CHECK(model_part == doctest::Approx(direct).epsilon(1e-8));
  CHECK(m.scaled(2.0)(1000.0) == doctest::Approx(2.0 * m(1000.0)));
}

TEST_CASE("logarithmic variant is chosen when the data carry a log") {
  std::vector<double> x(4097, 0.0);
  for (std::size_t k = 1; k < x.size(); ++k) {
    const double kd = static_cast<double>(k);
    x[k] = std::pow(kd, -2.0) * (1.0 + 0.8 * std::log(kd) / kd);
  }
  const PowerTailModel with_log = fit_power_tail(x, 512, 2048, 4, 0.5, 1.5, true);
  CHECK(with_log.has_log_terms());
  // A leading ln k term trades off against beta, so only the fitted values
  // are pinned, not beta itself.
  CHECK(std::abs(with_log.beta - 1.0) < 1e-2);
  CHECK(with_log(4000.0) == doctest::Approx(x[4000]).epsilon(1e-7));
  const PowerTailModel plain = fit_power_tail(x, 512, 2048, 4, 0.5, 1.5, false);
  CHECK_FALSE(plain.has_log_terms());
  CHECK(with_log.rms < plain.rms);
}

TEST_CASE("tail fit rejects empty windows") {
  std::vector<double> x(100, 0.0);
  CHECK_THROWS_AS(fit_power_tail(x, 10, 50, 4, 0.2, 1.2), InsufficientTail);
  std::vector<double> y(100, 1.0);
  CHECK_THROWS_AS(fit_power_tail(y, 10, 12, 4, 0.2, 1.2), InsufficientTail);
}
