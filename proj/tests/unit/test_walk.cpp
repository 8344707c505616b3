#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cookie/chain.hpp"
#include "cookie/errors.hpp"
#include "cookie/walk.hpp"
#include "cookie_suite/oracles.hpp"

using namespace cookie;

TEST_CASE("step_rule follows the cookie stack") {
  const CookieEnv env = validate_environment(3, {0.9, 0.8, 0.7});
  CHECK(step_rule(env, 0) == 0.9);
  CHECK(step_rule(env, 2) == 0.7);
  CHECK(step_rule(env, 5) == 0.5);
}

TEST_CASE("one-step path") {
  const CookieEnv env = validate_environment(1, {0.5});
  int seen = 0;
  for (std::uint64_t seed = 1; seed < 200 && seen < 5; ++seed) {
    const WalkRecord rec = simulate_to_level(env, 1, seed);
    if (rec.hitting_time != 1) continue;
    ++seen;
    CHECK(rec.left_jumps[0] == 0);
    CHECK(rec.negative_time == 0);
    CHECK(rec.returns_to_origin == 0);
    CHECK(rec.identity_defect() == 0);
  }
  CHECK(seen == 5);
}

TEST_CASE("path identity on a long record") {
  const CookieEnv env = validate_environment(3, {0.9, 0.9, 0.9});
  const WalkRecord rec = simulate_to_level(env, 10'000, 7);
  CHECK(rec.identity_defect() == 0);
  CHECK(rec.left_jumps.size() == 10'001);
  CHECK(rec.left_jumps.back() == 0);
  CHECK(rec.returns_to_origin == rec.left_jumps[0] + rec.left_jumps[1]);
}

TEST_CASE("recurrent walks exhaust the step cap") {
  WalkOptions small;
  small.step_cap = 1'000'000;
  const CookieEnv five = validate_environment(5, {0.5, 0.5, 0.5, 0.5, 0.5});
  bool thrown = false;
  for (std::uint64_t seed = 0; seed < 20 && !thrown; ++seed) {
    try {
      simulate_to_level(five, 1000, seed, small);
    } catch (const StepCapExceeded&) {
      thrown = true;
    }
  }
  CHECK(thrown);
  CHECK_THROWS_AS(estimate_speed_mc(five, 1000, 20, 1, small), StepCapExceeded);
}

TEST_CASE("replicates are reproducible and independent of the thread count") {
  const CookieEnv env = validate_environment(3, {0.9, 0.9, 0.9});
  WalkOptions one;
  one.threads = 1;
  WalkOptions four;
  four.threads = 4;
  const McEstimate a = estimate_speed_mc(env, 500, 64, 99, one);
  const McEstimate b = estimate_speed_mc(env, 500, 64, 99, four);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  const McEstimate c = estimate_speed_mc(env, 500, 64, 100, one);
  CHECK(a.mean != c.mean);

  const WalkRecord r1 = simulate_to_level(env, 300, 5);
  const WalkRecord r2 = simulate_to_level(env, 300, 5);
  CHECK(r1.hitting_time == r2.hitting_time);
  CHECK(r1.left_jumps == r2.left_jumps);
}

TEST_CASE("run_replicates keeps replicate order") {
  const auto v = run_replicates(37, 3, [](std::size_t r) { return static_cast<double>(r * r); });
  REQUIRE(v.size() == 37);
  for (std::size_t r = 0; r < v.size(); ++r) CHECK(v[r] == static_cast<double>(r * r));
  const McEstimate s = summarize({1.0, 2.0, 3.0, 4.0}, 0);
  CHECK(s.mean == 2.5);
  CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
}

TEST_CASE("speed estimate is positive above the threshold and shrinks below it") {
  const McEstimate fast = estimate_speed_mc(validate_environment(4, {0.95, 0.95, 0.95, 0.95}),
                                            5000, 50, 3);
  CHECK(fast.mean > 0.8);
  const CookieEnv slow = validate_environment(3, {0.8, 0.8, 0.8});
  const McEstimate near = estimate_speed_mc(slow, 100, 400, 3);
  const McEstimate far = estimate_speed_mc(slow, 10'000, 100, 3);
  CHECK(far.mean < near.mean);
  CHECK_THROWS_AS(estimate_speed_mc(slow, 0, 10, 3), InvalidArgument);
}

TEST_CASE("U_0 law at level n matches the chain n-step law") {
  const CookieEnv env = validate_environment(3, {0.9, 0.9, 0.9});
  const DistTable zero = sample_u0_distribution(env, 0, 10, 1);
  CHECK(zero.at(0) == 1.0);

  const std::size_t reps = 20'000;
  const DistTable mc = sample_u0_distribution(env, 5, reps, 11);
  const DistTable exact = distribution_after_n_steps(env, 5, 512);
  const auto test = oracle::chi_square(mc.atoms, exact.atoms, reps);
  CHECK(test.p_value > 1e-3);

  CHECK_THROWS_AS(sample_u0_distribution(validate_environment(1, {0.7}), 3, 10, 1), RegimeError);
}

TEST_CASE("never-hit estimate and returns p.g.f. are proper") {
  // With p_1 = 1 every first visit steps right, so the walk never turns.
  const CookieEnv sure = validate_environment(2, {1.0, 0.9});
  CHECK(estimate_never_hit_minus_one(sure, 200, 50, 5).mean == 1.0);
  CHECK(simulate_to_level(sure, 200, 5).hitting_time == 200);

  const CookieEnv loose = validate_environment(2, {0.95, 0.9});
  const McEstimate g = estimate_never_hit_minus_one(loose, 200, 400, 5);
  CHECK(g.mean > 0.0);
  CHECK(g.mean < 1.0);

  const CookieEnv env = validate_environment(2, {0.9, 0.9});
  const McEstimate h1 = estimate_returns_pgf(env, 200, 1.0, 50, 5);
  CHECK(h1.mean == 1.0);
  const McEstimate h0 = estimate_returns_pgf(env, 200, 0.0, 400, 5);
  const McEstimate never = estimate_never_hit_minus_one(env, 200, 400, 5);
  // No return to 0 forces the first step right and no visit to -1.
  CHECK(h0.mean <= never.mean);
  CHECK(count_returns_to_origin(env, 200, 5) == count_returns_to_origin(env, 200, 5));
}
