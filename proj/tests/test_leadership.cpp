#include <doctest.h>

#include "inspectgame/leadership.hpp"
#include "inspectgame/oracle.hpp"

using namespace inspectgame;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

std::vector<Rational> unit(unsigned k) { return std::vector<Rational>(k, q(1)); }

StageGame hatted_stage_221() {
  // The non-zero-sum two-period stage with a = 1/2, b = 1, r = 1.
  StageGame stage;
  stage.state = StateKey{2, 1, 1};
  stage.inspect_legal = PayoffCell{q(-1), q(1)};
  stage.inspect_violate = PayoffCell{q(-1, 2), q(-1)};
  stage.no_inspect_legal = PayoffCell{q(0), q(0)};
  stage.no_inspect_violate = PayoffCell{q(-1), q(1)};
  return stage;
}

}  // namespace

TEST_CASE("commit_2x2 on the two-period stage") {
  const auto outcome = leadership::commit_2x2(hatted_stage_221());
  CHECK(outcome.p_star == q(1, 3));
  CHECK(outcome.leader_value == q(-1, 3));
  CHECK(outcome.nash_value == q(-2, 3));
  CHECK(outcome.follower_value == q(1, 3));
  CHECK(outcome.leader_value > outcome.nash_value);
  // Threshold response: violate below the committed p*, legal at and above.
  CHECK(outcome.follower_response.respond(q(1, 4)) == 1);
  CHECK(outcome.follower_response.respond(q(1, 3)) == 0);
  CHECK(outcome.follower_response.respond(q(1, 2)) == 0);
}

TEST_CASE("commit_2x2 rejects non-circular stages") {
  StageGame zero;
  zero.state = StateKey{2, 1, 1};
  try {
    leadership::commit_2x2(zero);
    CHECK(false);
  } catch (const leadership::CommitmentError& e) {
    CHECK(e.violated() == "A<C");
  }
}

TEST_CASE("solve_leadership on the two-period game") {
  const auto solution =
      leadership::solve_leadership(GameSpec::leadership(2, 1, 1, q(1, 2), q(1), unit(1)));
  const PayoffCell& root = solution.values.at(StateKey{2, 1, 1});
  CHECK(root.inspector == q(-1, 3));
  CHECK(root.inspectee == q(1, 3));
  CHECK(solution.gain_factor == q(1, 2));  // (3/2)/3
  // Committed schedule equals the simultaneous game's schedule.
  CHECK(solution.committed_schedule.at({2, 1}) == q(1, 3));
  CHECK(solution.committed_schedule.at({1, 1}) == q(1, 2));

  // u = gain * v against the simultaneous game's v = -2/3.
  GameSpec twin = solution.spec;
  twin.variant = Variant::kNonZeroSum;
  twin.caught_costs.reset();
  const auto [v, w] = closed_form::nonzero_payoffs(StateKey{2, 1, 1}, twin);
  CHECK(root.inspector == solution.gain_factor * v);
  CHECK(root.inspectee == w);
}

TEST_CASE("solve_leadership base cases") {
  const auto no_inspections =
      leadership::solve_leadership(GameSpec::leadership(3, 0, 2, q(1, 2), q(1), {q(5), q(3)}));
  CHECK(no_inspections.values.at(StateKey{3, 0, 2}).inspector == q(-8));
  CHECK(no_inspections.values.at(StateKey{3, 0, 2}).inspectee == q(8));

  const auto saturated =
      leadership::solve_leadership(GameSpec::leadership(2, 3, 1, q(1, 2), q(1), unit(1)));
  CHECK(saturated.values.at(StateKey{2, 3, 1}).inspector == 0);
  CHECK(saturated.values.at(StateKey{2, 3, 1}).inspectee == 0);
}

TEST_CASE("commitment never hurts the leader") {
  const std::vector<std::pair<Rational, Rational>> grid = {
      {q(1, 4), q(0)}, {q(1, 2), q(1)}, {q(3, 4), q(2)}};
  for (const auto& [a, b] : grid) {
    for (unsigned n = 2; n <= 6; ++n) {
      for (unsigned m = 1; m < n; ++m) {
        for (unsigned k = 1; k <= 4; ++k) {
          std::vector<Rational> rewards;
          for (unsigned i = 0; i < k; ++i) rewards.push_back(q(1 + (7 * i) % 5, 1 + i % 2));
          const auto spec = GameSpec::leadership(n, m, k, a, b, rewards);
          const auto solution = leadership::solve_leadership(spec);
          GameSpec twin = spec;
          twin.variant = Variant::kNonZeroSum;
          twin.caught_costs.reset();
          const closed_form::Solver simultaneous(twin);
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(k);
          REQUIRE(solution.gain_factor > 0);
          REQUIRE(solution.gain_factor < 1);
          for (const auto& [state, cell] : solution.values) {
            const auto [v, w] = simultaneous.payoff_pair(state);
            REQUIRE(cell.inspectee == w);
            REQUIRE(cell.inspector >= v);
            REQUIRE(cell.inspector == -cell.inspectee);
          }
        }
      }
    }
  }
}

TEST_CASE("check_legal_preference") {
  const auto witness = leadership::check_legal_preference(2, 1, q(1, 2), q(1));
  CHECK(witness.p_hat == q(2, 3));
  CHECK(witness.p_star == q(1, 3));
  CHECK(witness.holds);

  CHECK_THROWS_AS(leadership::check_legal_preference(3, 3, q(1, 2), q(1)), std::domain_error);
  CHECK_THROWS_AS(leadership::check_legal_preference(3, 1, q(2), q(1)), std::domain_error);
  CHECK_THROWS_AS(leadership::check_legal_preference(3, 1, q(1, 2), q(-1)), std::domain_error);

  for (unsigned n = 2; n <= 9; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      for (const Rational& a : {q(1, 4), q(1, 2), q(3, 4)}) {
        for (const Rational& b : {q(0), q(1, 2), q(2)}) {
          REQUIRE(leadership::check_legal_preference(n, m, a, b).holds);
        }
      }
    }
  }
}

TEST_CASE("leadership payoffs differ from the simultaneous inspector value") {
  // Spot check the factor: for (3,1,2), a=1/2, b=1, gain = s_hat(3,1)/s(3,1).
  const auto solution =
      leadership::solve_leadership(GameSpec::leadership(3, 1, 2, q(1, 2), q(1), unit(2)));
  CHECK(solution.gain_factor == q(5, 8));  // (5/2)/4
  CHECK(solution.values.at(StateKey{3, 1, 2}).inspector == q(-3, 4));
  // Simultaneous v = -t/s_hat = -3/(5/2) = -6/5; u = (5/8) * (-6/5) = -3/4.
}
