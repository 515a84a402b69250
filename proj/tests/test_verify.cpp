#include <doctest.h>

#include "inspectgame/verify.hpp"

using namespace inspectgame;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

void expect_all_pass(const GameSpec& spec) {
  const auto results = verify::verify_spec(spec);
  for (const auto& result : results) {
    CAPTURE(result.name);
    CAPTURE(result.detail);
    REQUIRE(result.pass);
  }
  CHECK(verify::all_passed(results));
}

}  // namespace

TEST_CASE("verify bundle passes across variants and parameter corners") {
  expect_all_pass(GameSpec::zero_sum(3, 1, 2, q(1), {q(1), q(1)}));
  expect_all_pass(GameSpec::zero_sum(5, 2, 3, q(-1, 2), {q(2), q(0), q(1, 3)}));
  expect_all_pass(GameSpec::zero_sum(4, 2, 6, q(0), {q(1), q(1), q(0), q(0), q(2), q(1)}));
  expect_all_pass(GameSpec::zero_sum(3, 1, 2, q(1), {q(0), q(0)}));  // fully degenerate
  expect_all_pass(GameSpec::zero_sum(2, 3, 1, q(1), {q(1)}));        // m >= n root
  expect_all_pass(GameSpec::non_zero_sum(4, 2, 2, q(1, 2), q(1), {q(3), q(1, 2)}));
  expect_all_pass(GameSpec::leadership(4, 2, 2, q(1, 4), q(1, 2), {q(1), q(2)}));
}

TEST_CASE("verify rejects invalid specs outright") {
  CHECK_THROWS_AS(verify::verify_spec(GameSpec::zero_sum(2, 1, 1, q(-2), {q(1)})),
                  ValidationError);
}

TEST_CASE("check results carry names and details") {
  const auto results = verify::verify_spec(GameSpec::zero_sum(3, 1, 2, q(1), {q(1), q(1)}));
  REQUIRE(!results.empty());
  CHECK(results.front().name == "closed_form_vs_oracle");
  for (const auto& result : results) CHECK(result.detail.empty());
}
