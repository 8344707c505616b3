#include <doctest.h>

#include "cookie/env.hpp"
#include "cookie/errors.hpp"

using namespace cookie;

TEST_CASE("validate_environment accepts and rejects") {
  const CookieEnv ok = validate_environment(3, {0.9, 0.9, 0.9});
  CHECK(ok.cookies() == 3);
  CHECK_FALSE(ok.degenerate());

  CHECK_THROWS_AS(validate_environment(2, {0.4, 0.9}), OutOfRange);
  CHECK_THROWS_AS(validate_environment(2, {0.9, 1.01}), OutOfRange);
  CHECK_THROWS_AS(validate_environment(3, {0.9, 0.9}), LengthMismatch);
  CHECK_THROWS_AS(validate_environment(0, {}), LengthMismatch);

  const CookieEnv edge = validate_environment(2, {1.0, 0.5});
  CHECK(edge.degenerate());
}

TEST_CASE("strength past the last cookie is a fair coin") {
  const CookieEnv env = validate_environment(2, {0.9, 0.6});
  CHECK(env.strength(1) == 0.9);
  CHECK(env.strength(2) == 0.6);
  CHECK(env.strength(3) == 0.5);
}

TEST_CASE("alpha") {
  CHECK(alpha(validate_environment(3, {0.9, 0.9, 0.9})) == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(alpha(validate_environment(1, {0.7})) == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(alpha(validate_environment(2, {0.99, 0.99})) == doctest::Approx(0.96).epsilon(1e-15));
}

TEST_CASE("classify") {
  CHECK(classify(validate_environment(1, {0.7})).phase == Phase::Recurrent);
  CHECK(classify(validate_environment(2, {0.99, 0.99})).phase == Phase::TransientZeroSpeed);
  CHECK(classify(validate_environment(3, {0.85, 0.85, 0.85})).phase ==
        Phase::TransientPositiveSpeed);

  const PhaseLabel crit = classify(uniform_environment(3, 1.0 / 3.0 + 0.5));
  CHECK(crit.phase == Phase::Critical);
  CHECK(crit.near_critical);

  // alpha = 0 exactly is recurrent.
  CHECK(classify(validate_environment(2, {0.5, 0.5})).phase == Phase::Recurrent);
  CHECK(to_string(Phase::Critical) == "Critical");
}

TEST_CASE("z_unbounded_condition") {
  CHECK(z_unbounded_condition(validate_environment(3, {0.9, 0.9, 0.9})));
  CHECK_FALSE(z_unbounded_condition(validate_environment(2, {1.0, 0.6})));
  CHECK(z_unbounded_condition(validate_environment(4, {0.6, 1.0, 0.6, 1.0})));
  CHECK_FALSE(z_unbounded_condition(validate_environment(2, {1.0, 1.0})));
}

TEST_CASE("config parsing") {
  const auto p = parse_strength_list(" 0.9, 0.8 ,0.7");
  REQUIRE(p.size() == 3);
  CHECK(p[1] == 0.8);
  CHECK_THROWS_AS(parse_strength_list("0.9,,0.8"), InvalidArgument);
  CHECK_THROWS_AS(parse_strength_list("0.9,abc"), InvalidArgument);

  const auto kv = parse_key_value("# comment\nm = 2\np=0.9,0.6  # trailing\n\n");
  CHECK(kv.at("m") == "2");
  CHECK(kv.at("p") == "0.9,0.6");
  const CookieEnv env = environment_from_config(kv);
  CHECK(env.cookies() == 2);
  CHECK(env.strength(2) == 0.6);

  CHECK_THROWS_AS(environment_from_config({{"m", "2"}}), InvalidArgument);
}
