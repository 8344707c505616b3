#include <doctest.h>

#include <cmath>

#include "cookie/chain.hpp"
#include "cookie/errors.hpp"
#include "cookie/gf.hpp"
#include "cookie/walk.hpp"
#include "cookie_suite/oracles.hpp"

using namespace cookie;

namespace {

const CookieEnv& env09() {
  static const CookieEnv env = validate_environment(3, {0.9, 0.9, 0.9});
  return env;
}

const StationarySolve& solve09() {
  static const StationarySolve s = stationary_distribution(env09(), SolverConfig{});
  return s;
}

const std::vector<double>& unit_grid() {
  static const std::vector<double> g{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return g;
}

}  // namespace

TEST_CASE("G on the unit interval") {
  const StationarySolve& s = solve09();
  CHECK(g_eval(s, 0.0) == s.pi.at(0));
  CHECK(g_eval(s, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  double direct = 0.0;
  for (std::size_t k = 0; k < s.pi.atoms.size(); ++k) direct += s.pi.atoms[k] * std::pow(0.5, k);
  CHECK(g_eval(s, 0.5) == doctest::Approx(direct).epsilon(1e-14));
  CHECK_THROWS_AS(g_eval(s, 1.5), DomainError);
  CHECK_THROWS_AS(g_eval(s, -0.5), DomainError);
}

TEST_CASE("a(s) near 1 has slope alpha") {
  const AbPair pair = build_ab(env09(), solve09());
  for (double x : {1e-2, 1e-3, 1e-4, 1e-5}) {
    CHECK(std::abs((1.0 - pair.a(1.0 - x)) / x - 1.4) < 2.0 * x + 1e-9);
  }
  CHECK(pair.a(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pair.b(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("functional equation holds for the solved law") {
  CHECK(functional_equation_residual(env09(), solve09(), unit_grid()) < 1e-12);

  const CookieEnv two = validate_environment(2, {0.9, 0.9});
  const StationarySolve s2 = stationary_distribution(two);
  CHECK(functional_equation_residual(two, s2, unit_grid()) < 1e-12);

  CHECK_THROWS_AS(functional_equation_residual(env09(), solve09(), {1.5}), DomainError);
}

TEST_CASE("functional equation detects a wrong atom") {
  const StationarySolve& s = solve09();
  std::vector<double> atoms{s.pi.at(0) + 0.01, s.pi.at(1)};
  const AbPair wrong = build_ab(env09(), atoms);
  CHECK(functional_equation_residual(wrong, s, unit_grid()) > 1e-3);
}

TEST_CASE("series derivatives match finite differences") {
  for (const auto& p : {std::vector<double>{0.9, 0.9, 0.9}, std::vector<double>{0.9, 0.9, 0.8}}) {
    const CookieEnv env = validate_environment(3, p);
    SolverConfig config;
    config.cap = 2048;
    const AbPair pair = build_ab(env, stationary_distribution(env, config));
    const TaylorAt1 t = derivatives_at_1(pair);
    auto b = [&](double s) { return pair.b(s); };
    auto a = [&](double s) { return pair.a(s); };
    CHECK(std::abs(oracle::richardson_derivative(b, 1.0, 1e-2, 1) - t.b1) < 1e-5);
    CHECK(std::abs(oracle::richardson_derivative(b, 1.0, 1e-2, 2) - t.b2) < 1e-5);
    CHECK(std::abs(oracle::richardson_derivative(a, 1.0, 1e-2, 1) - t.a1) < 1e-5);
    CHECK(t.a1 == doctest::Approx(alpha(env)).epsilon(1e-12));
    CHECK(std::abs(t.b0) < 1e-14);
    CHECK(std::abs(t.b1) < 1e-8);
    CHECK(t.b2 > 0.0);
  }
}

TEST_CASE("route B") {
  const double vb = speed_route_b(env09(), solve09());
  const SpeedReport ra = speed_route_a(env09(), SolverConfig{}, &solve09());
  CHECK(std::abs(vb - *ra.v_route_a) < 1e-4);

  const CookieEnv four = uniform_environment(4, 0.95);
  const StationarySolve s4 = stationary_distribution(four);
  CHECK(std::abs(speed_route_b(four, s4) - *speed_route_a(four, SolverConfig{}, &s4).v_route_a) < 1e-4);

  SolverConfig small;
  small.cap = 1024;
  const CookieEnv slow = uniform_environment(3, 0.8);
  CHECK_THROWS_AS(speed_route_b(slow, stationary_distribution(slow, small)), RegimeError);
}

TEST_CASE("explicit G(0) for two cookies") {
  for (const auto& p : {std::vector<double>{0.9, 0.9}, std::vector<double>{0.99, 0.6}}) {
    const CookieEnv env = validate_environment(2, p);
    const double g0 = solve_g0_m2(env);
    CHECK(g0 > 0.0);
    CHECK(g0 < 1.0);
    CHECK(std::abs(g0 - stationary_distribution(env).pi.at(0)) < 1e-8);
  }
  CHECK_THROWS_AS(solve_g0_m2(validate_environment(2, {0.5, 0.5})), RegimeError);
  CHECK_THROWS_AS(solve_g0_m2(env09()), RegimeError);
}

TEST_CASE("returns p.g.f.") {
  const StationarySolve& s = solve09();
  double prev = 0.0;
  for (double x : {0.9, 0.99, 0.999}) {
    const double h = returns_pgf(env09(), s, x);
    CHECK(h > prev);
    prev = h;
  }
  // H is only defined on the open interval; the limit at 1 is read off near it.
  CHECK(std::abs(returns_pgf(env09(), s, 1.0 - 1e-7) - 1.0) < 1e-4);
  CHECK(returns_pgf(env09(), s, 1e-6) > 0.0);
  CHECK_THROWS_AS(returns_pgf(env09(), s, 1.0), DomainError);
  CHECK_THROWS_AS(returns_pgf(env09(), s, 0.0), DomainError);

  const McEstimate mc = estimate_returns_pgf(env09(), 2000, 0.5, 20'000, 17);
  CHECK(std::abs(mc.mean - returns_pgf(env09(), s, 0.5)) < 3.0 * mc.std_error);
}

TEST_CASE("critical grid and scan") {
  const auto grid = critical_grid(3, 0.80, 0.86, 0.01, 2);
  const double pc = 1.0 / 3.0 + 0.5;
  bool has_pc = false;
  std::size_t refined = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) CHECK(grid[i].first > grid[i - 1].first);
    has_pc = has_pc || std::abs(grid[i].first - pc) < 1e-15;
    refined += grid[i].second;
  }
  CHECK(has_pc);
  CHECK(refined >= 2);

  SolverConfig config;
  config.cap = 1024;
  const ScanResult scan = critical_scan(3, grid, 0.01, config);
  REQUIRE(scan.rows.size() == grid.size());
  for (const auto& row : scan.rows) {
    CHECK(row.error.empty());
    if (row.p <= pc + 1e-12) CHECK(row.v == 0.0);
    else CHECK(row.v > 0.0);
  }
  CHECK(scan.monotone);
  REQUIRE(scan.finest_ratio.has_value());
  CHECK(*scan.finest_ratio > 0.0);
}
