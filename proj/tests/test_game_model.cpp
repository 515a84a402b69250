#include <doctest.h>

#include "inspectgame/closed_form.hpp"
#include "inspectgame/game_model.hpp"

using namespace inspectgame;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

TEST_CASE("validate: variant-specific parameter ranges") {
  auto ok = GameSpec::zero_sum(3, 1, 2, q(1), {q(1), q(1)});
  CHECK_NOTHROW(validate(ok));

  auto bad_b = GameSpec::zero_sum(2, 1, 1, q(-1), {q(1)});
  CHECK_THROWS_WITH_AS(validate(bad_b), "penalty factor must exceed -1", ValidationError);
  try {
    validate(bad_b);
  } catch (const ValidationError& e) {
    CHECK(e.code() == SpecError::kPenaltyOutOfRange);
  }
  // Zero-sum accepts any b > -1, including negative penalties.
  CHECK_NOTHROW(validate(GameSpec::zero_sum(2, 1, 1, q(-99, 100), {q(1)})));

  CHECK_NOTHROW(validate(GameSpec::non_zero_sum(2, 1, 1, q(1, 2), q(0), {q(1)})));
  CHECK_THROWS_AS(validate(GameSpec::non_zero_sum(2, 1, 1, q(1), q(0), {q(1)})), ValidationError);
  CHECK_THROWS_AS(validate(GameSpec::non_zero_sum(2, 1, 1, q(0), q(0), {q(1)})), ValidationError);
  CHECK_THROWS_AS(validate(GameSpec::non_zero_sum(2, 1, 1, q(1, 2), q(-1, 4), {q(1)})),
                  ValidationError);

  auto negative_reward = GameSpec::zero_sum(2, 1, 1, q(1), {q(-1)});
  try {
    validate(negative_reward);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == SpecError::kNegativeReward);
  }

  auto wrong_len = GameSpec::zero_sum(2, 1, 2, q(1), {q(1)});
  try {
    validate(wrong_len);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == SpecError::kRewardLengthMismatch);
  }

  // a is required outside the zero-sum variant.
  GameSpec missing_a = GameSpec::zero_sum(2, 1, 1, q(1), {q(1)});
  missing_a.variant = Variant::kNonZeroSum;
  try {
    validate(missing_a);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == SpecError::kInspectorCostMissing);
  }
}

TEST_CASE("validate: leadership caught costs must be positive") {
  CHECK_NOTHROW(validate(GameSpec::leadership(3, 1, 2, q(1, 2), q(1), {q(1), q(1)})));
  // A zero reward zeroes the default cost a*r.
  try {
    validate(GameSpec::leadership(3, 1, 2, q(1, 2), q(1), {q(1), q(0)}));
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == SpecError::kCaughtCostNotPositive);
  }
  // ... unless an explicit positive cost overrides it.
  CHECK_NOTHROW(validate(GameSpec::leadership(3, 1, 2, q(1, 2), q(1), {q(1), q(0)},
                                              std::vector<Rational>{q(1, 2), q(1, 3)})));
  try {
    validate(GameSpec::leadership(3, 1, 2, q(1, 2), q(1), {q(1), q(1)},
                                  std::vector<Rational>{q(1)}));
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.code() == SpecError::kCaughtCostLengthMismatch);
  }
}

TEST_CASE("reward_at follows the violation counter") {
  const auto spec = GameSpec::zero_sum(4, 1, 2, q(1), {q(5), q(3)});
  CHECK(reward_at(StateKey{4, 1, 2}, spec) == 5);  // first violation
  CHECK(reward_at(StateKey{3, 1, 1}, spec) == 3);  // second violation
  CHECK_THROWS_AS(reward_at(StateKey{3, 1, 0}, spec), std::out_of_range);
  CHECK_THROWS_AS(reward_at(StateKey{3, 1, 3}, spec), std::out_of_range);
}

TEST_CASE("base values") {
  const auto spec = GameSpec::zero_sum(4, 2, 3, q(1), {q(5), q(3), q(2)});
  CHECK(base_values(StateKey{2, 2, 3}, spec) == PayoffCell{q(0), q(0)});   // m >= n
  CHECK(base_values(StateKey{2, 3, 1}, spec) == PayoffCell{q(0), q(0)});
  CHECK(base_values(StateKey{3, 1, 0}, spec) == PayoffCell{q(0), q(0)});   // k = 0
  CHECK(base_values(StateKey{0, 0, 2}, spec) == PayoffCell{q(0), q(0)});   // n = 0
  // m = 0: the inspectee takes the next min(k, n) rewards.
  CHECK(base_values(StateKey{2, 0, 3}, spec) == PayoffCell{q(-8), q(8)});  // 5 + 3
  CHECK(base_values(StateKey{4, 0, 2}, spec) == PayoffCell{q(-5), q(5)});  // 3 + 2
  CHECK_THROWS_AS(base_values(StateKey{3, 1, 2}, spec), std::domain_error);
}

TEST_CASE("stage game of the two-period game") {
  const auto spec = GameSpec::zero_sum(2, 1, 1, q(1), {q(1)});
  const closed_form::Solver solver(spec);
  const ValueFn values = [&](const StateKey& s) {
    auto [v, w] = solver.payoff_pair(s);
    return PayoffCell{v, w};
  };
  const StageGame stage = stage_game(StateKey{2, 1, 1}, spec, values);
  CHECK(stage.inspect_legal.inspector == q(-1));
  CHECK(stage.inspect_violate.inspector == q(1));
  CHECK(stage.no_inspect_legal.inspector == q(0));
  CHECK(stage.no_inspect_violate.inspector == q(-1));
  // Zero-sum: the inspectee side is the negation.
  CHECK(stage.inspect_legal.inspectee == q(1));
  CHECK(stage.no_inspect_violate.inspectee == q(1));
  CHECK_FALSE(stage.all_zero());
  CHECK_THROWS_AS(stage_game(StateKey{2, 2, 1}, spec, values), std::domain_error);
}

TEST_CASE("stage game of the non-zero-sum two-period game") {
  const auto spec = GameSpec::non_zero_sum(2, 1, 1, q(1, 2), q(1), {q(1)});
  const closed_form::Solver solver(spec);
  const ValueFn values = [&](const StateKey& s) {
    auto [v, w] = solver.payoff_pair(s);
    return PayoffCell{v, w};
  };
  const StageGame stage = stage_game(StateKey{2, 1, 1}, spec, values);
  CHECK(stage.inspect_legal == PayoffCell{q(-1), q(1)});
  CHECK(stage.inspect_violate == PayoffCell{q(-1, 2), q(-1)});
  CHECK(stage.no_inspect_legal == PayoffCell{q(0), q(0)});
  CHECK(stage.no_inspect_violate == PayoffCell{q(-1), q(1)});
}

TEST_CASE("all remaining rewards zero gives the all-zero stage") {
  const auto spec = GameSpec::zero_sum(3, 1, 2, q(1), {q(0), q(0)});
  const closed_form::Solver solver(spec);
  const ValueFn values = [&](const StateKey& s) {
    auto [v, w] = solver.payoff_pair(s);
    return PayoffCell{v, w};
  };
  CHECK(stage_game(StateKey{3, 1, 2}, spec, values).all_zero());
}

TEST_CASE("interior stages with positive stakes are circular") {
  // A < C, B > D, A < B, C > D whenever t(n-1, m-1, k) > 0.
  const std::vector<Rational> bs = {q(-1, 2), q(0), q(1, 2), q(1), q(2)};
  for (const Rational& b : bs) {
    for (unsigned n = 2; n <= 7; ++n) {
      for (unsigned m = 1; m < n; ++m) {
        for (unsigned k = 1; k <= 7; ++k) {
          std::vector<Rational> rewards;
          for (unsigned i = 0; i < k; ++i) rewards.push_back(q(1 + (i * 2) % 5, 1 + i % 3));
          const auto spec = GameSpec::zero_sum(n, m, k, b, rewards);
          const closed_form::Solver solver(spec);
          const ValueFn values = [&](const StateKey& s) {
            auto [v, w] = solver.payoff_pair(s);
            return PayoffCell{v, w};
          };
          const StateKey root{n, m, k};
          const StageGame stage = stage_game(root, spec, values);
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(k);
          REQUIRE(stage.inspect_legal.inspector < stage.no_inspect_legal.inspector);
          REQUIRE(stage.inspect_violate.inspector > stage.no_inspect_violate.inspector);
          REQUIRE(stage.inspect_legal.inspector < stage.inspect_violate.inspector);
          REQUIRE(stage.no_inspect_legal.inspector > stage.no_inspect_violate.inspector);
        }
      }
    }
  }
}
