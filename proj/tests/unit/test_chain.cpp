#include <doctest.h>

#include <cmath>

#include "cookie/chain.hpp"
#include "cookie/errors.hpp"
#include "cookie/kernel.hpp"
#include "cookie/transition_rows.hpp"

using namespace cookie;

namespace {

const CookieEnv& env09() {
  static const CookieEnv env = validate_environment(3, {0.9, 0.9, 0.9});
  return env;
}

// One full-size solve shared by the cases below.
const StationarySolve& solve09() {
  static const StationarySolve s = stationary_distribution(env09(), SolverConfig{});
  return s;
}

double tv_on(const DistTable& a, const DistTable& b, std::size_t upto) {
  double gap = 0.0;
  for (std::size_t k = 0; k <= upto; ++k) gap += std::abs(a.at(k) - b.at(k));
  return 0.5 * gap;
}

}  // namespace

TEST_CASE("banded rows reproduce the kernel") {
  const CookieEnv env = validate_environment(2, {0.9, 0.7});
  const BandedRows rows(env, 300);
  for (std::size_t j : {0u, 1u, 2u, 40u, 150u}) {
    const DistTable exact = a_distribution(env, j, 300);
    double worst = 0.0;
    for (std::size_t k = 0; k <= 300; ++k) worst = std::max(worst, std::abs(rows.at(j, k) - exact.at(k)));
    CHECK(worst < 1e-15);
    CHECK(rows.overflow(j) == doctest::Approx(exact.residual).epsilon(1e-6));
  }
  for (std::size_t j = 1; j <= 300; ++j) {
    CHECK(rows.lo(j) >= rows.lo(j - 1));
    CHECK(rows.hi(j) >= rows.hi(j - 1));
  }
  std::vector<double> x(301, 0.0), out(301, 0.0);
  x[0] = 1.0;
  CHECK(push_forward(rows, x, out) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(out[0] == doctest::Approx(0.9));
}

TEST_CASE("n-step laws") {
  const CookieEnv& env = env09();
  CHECK(distribution_after_n_steps(env, 0, 50).at(0) == 1.0);
  const DistTable one = distribution_after_n_steps(env, 1, 50);
  const DistTable row0 = a_distribution(env, 0, 50);
  for (std::size_t k = 0; k <= 50; ++k) CHECK(one.at(k) == doctest::Approx(row0.at(k)).epsilon(1e-14));

  const auto laws = distributions_up_to(env, 4, 200);
  REQUIRE(laws.size() == 4);
  CHECK(tv_distance(laws[3], distribution_after_n_steps(env, 4, 200)) < 1e-15);
  CHECK_THROWS_AS(distribution_after_n_steps(env, 3, 10, 11), InvalidArgument);
}

TEST_CASE("simulated chain") {
  const CookieEnv& env = env09();
  const auto path0 = simulate_chain(env, 0, 1);
  REQUIRE(path0.size() == 1);
  CHECK(path0[0] == 0);
  CHECK(simulate_chain(env, 0, 1, 7)[0] == 7);

  const auto path = simulate_chain(env, 200'000, 3);
  CHECK(path == simulate_chain(env, 200'000, 3));
  std::size_t at_zero = 0;
  for (auto z : path) at_zero += (z == 0);
  const double freq = static_cast<double>(at_zero) / static_cast<double>(path.size());
  CHECK(std::abs(freq - solve09().pi.at(0)) < 0.01);
}

TEST_CASE("stationary law is invariant on interior states") {
  const StationarySolve& s = solve09();
  const std::size_t cap = SolverConfig{}.cap;
  CHECK(s.pi.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.tail_fit.has_value());
  CHECK(s.trusted_cap == cap / 2);
  CHECK(s.tv_gap < 1e-10);
  // The exact rows are rebuilt here, independent of the banded storage.
  CHECK(stationarity_defect(env09(), s.pi, cap / 4) < 1e-10);
}

TEST_CASE("the n-step laws forget the start state") {
  const CookieEnv& env = env09();
  const std::size_t cap = 1024;
  const DistTable from0 = distribution_after_n_steps(env, 400, cap, 0);
  const DistTable from5 = distribution_after_n_steps(env, 400, cap, 5);
  CHECK(tv_on(from0, from5, 256) < 1e-4);
  CHECK(tv_on(from0, solve09().pi, 64) < 1e-2);
  const DistTable early0 = distribution_after_n_steps(env, 2, cap, 0);
  const DistTable early5 = distribution_after_n_steps(env, 2, cap, 5);
  CHECK(tv_on(early0, early5, 256) > 0.1);
}

TEST_CASE("solver errors and the bounded chain") {
  CHECK_THROWS_AS(stationary_distribution(validate_environment(1, {0.7})), NotPositiveRecurrent);
  SolverConfig tiny;
  tiny.cap = 16;
  CHECK_THROWS_AS(stationary_distribution(env09(), tiny), InvalidArgument);

  // From 0 the chain lives on {0, 1}: P(0,1) = 0.1, P(1,0) = 0.9.
  const CookieEnv bounded = validate_environment(3, {0.9, 1.0, 1.0});
  const StationarySolve s = stationary_distribution(bounded);
  CHECK(s.bounded);
  CHECK(s.pi.at(0) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(s.pi.at(1) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(s.pi.at(2) == 0.0);
  const auto [e, partial] = expected_z_inf(s);
  CHECK(e == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(partial == e);

  const SpeedReport r = speed_route_a(bounded);
  REQUIRE(r.v_route_a.has_value());
  CHECK(*r.v_route_a == doctest::Approx(1.0 / 1.2).epsilon(1e-12));

  const MomentDiagnostic d = moment_divergence_diagnostic(s, 2, {1, 2});
  CHECK(d.bounded_support);
  CHECK_FALSE(d.diverging);
  CHECK_THROWS_AS(moment_divergence_diagnostic(s, 0, {1, 2}), InvalidArgument);
}

TEST_CASE("mean of the stationary law") {
  const auto [e, partial] = expected_z_inf(solve09());
  CHECK(std::isfinite(e));
  CHECK(e > partial);
  CHECK(1.0 / (1.0 + 2.0 * e) == doctest::Approx(0.7286988).epsilon(1e-6));

  SolverConfig small;
  small.cap = 2048;
  const StationarySolve slow = stationary_distribution(validate_environment(3, {0.8, 0.8, 0.8}), small);
  CHECK(std::isinf(expected_z_inf(slow).first));
}

TEST_CASE("tail exponents") {
  const TailExponent t = tail_exponent(solve09(), 512, 2048);
  CHECK(t.exponent == doctest::Approx(-1.4).epsilon(0.15 / 1.4));

  const StationarySolve slow = stationary_distribution(validate_environment(3, {0.8, 0.8, 0.8}));
  const TailExponent u = tail_exponent(slow, 512, 2048);
  CHECK(std::abs(u.exponent + 0.8) < 0.1);

  StationarySolve spike;
  spike.pi.atoms.assign(100, 0.0);
  spike.pi.atoms[0] = 1.0;
  CHECK_THROWS_AS(tail_exponent(spike, 10, 50), InsufficientTail);
  CHECK_THROWS_AS(tail_exponent(spike, 0, 50), InvalidArgument);
}

TEST_CASE("second moment diverges when alpha < 2") {
  const MomentDiagnostic d = moment_divergence_diagnostic(solve09(), 2, {1024, 2048, 4096, 8192});
  CHECK(d.diverging);
  REQUIRE(d.increments.size() == 3);
  CHECK(d.increments[1] > d.increments[0]);
  CHECK(d.increments[2] > d.increments[1]);
  CHECK(std::abs(d.implied_growth - 0.6) < 0.15);
}

TEST_CASE("route A") {
  CHECK(*speed_route_a(validate_environment(2, {0.9, 0.9})).v_route_a == 0.0);
  CHECK(*speed_route_a(validate_environment(1, {0.7})).v_route_a == 0.0);
  const SpeedReport r = speed_route_a(env09(), SolverConfig{}, &solve09());
  CHECK(r.label.phase == Phase::TransientPositiveSpeed);
  CHECK(*r.v_route_a == doctest::Approx(0.7286988).epsilon(1e-6));
}
