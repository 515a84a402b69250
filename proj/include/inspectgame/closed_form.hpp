#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "inspectgame/game_model.hpp"
#include "inspectgame/kernel.hpp"

namespace inspectgame::closed_form {

/// Equilibrium record at one state. inspector_value is v (zero-sum and
/// non-zero-sum alike); inspectee_value is -v or w. degenerate marks interior
/// states whose stage game is all zero (every relevant remaining reward is
/// zero), where p falls back to the canonical schedule and q to 0.
struct StateSolution {
  StateKey state;
  Rational inspector_value;
  Rational inspectee_value;
  Rational p;
  Rational q;
  bool degenerate = false;

  bool operator==(const StateSolution&) const = default;
};

/// (n', m') ordered map of the k-free inspection schedule.
using Schedule = std::map<std::pair<unsigned, unsigned>, Rational>;

enum class Validate { kStrict, kSkip };

/// Direct evaluation of the explicit value/strategy formulas: v = -t/s with
/// s the generalized Pascal sum at beta = b (zero-sum), (v, w) = (-t/s_hat,
/// t/s) with s_hat at beta = -a (non-zero-sum), p = s(n-1,m-1)/s(n,m), and q
/// from the stage entries of the inspector's payoff matrix. Never recurses.
///
/// Validate::kSkip exists for test harnesses that drive the formulas outside
/// the documented parameter ranges (e.g. the a = -b zero-sum embedding).
class Solver {
 public:
  explicit Solver(GameSpec spec, Validate mode = Validate::kStrict);

  const GameSpec& spec() const { return spec_; }

  /// Zero-sum value -t(n,m,k)/s(n,m); base cases fall out of the formula.
  Rational value_zero_sum(const StateKey& state) const;

  /// Non-zero-sum (v, w) = (-t/s_hat, t/s); zero-sum specs get (v, -v).
  std::pair<Rational, Rational> payoff_pair(const StateKey& state) const;

  /// Inspection probability; reads neither k nor the rewards.
  Rational inspect_prob(unsigned n, long m) const;

  /// Violation probability (C-A)/(C-A+B-D) from the inspector's stage
  /// entries (B = -a*r in the non-zero-sum variants). Interior states only;
  /// 0 on a degenerate stage.
  Rational violate_prob(const StateKey& state) const;

  /// True when the stage game at an interior state is all zero, i.e.
  /// t(n-1, m-1, k) == 0.
  bool degenerate_at(const StateKey& state) const;

  StateSolution solve(const StateKey& state) const;
  StateSolution root() const { return solve(spec_.root()); }

  /// The complete k-free schedule over every (n', m') reachable from the
  /// root with n' >= 1.
  Schedule schedule() const;

  /// Remaining rewards at the state, as the span t expects.
  std::span<const Rational> rewards_from(const StateKey& state) const;

 private:
  Rational t_at(const StateKey& state) const;
  PayoffCell cell(const StateKey& state) const;

  GameSpec spec_;
  kernel::PascalSum s_;                          // beta = b
  std::unique_ptr<kernel::PascalSum> s_hat_;     // beta = -a, when a is set
};

// Free-function forms matching the operation names; each builds a throwaway
// solver, so prefer the class when evaluating many states of one spec.
Rational value_zero_sum(const StateKey& state, const GameSpec& spec);
Rational inspect_prob(unsigned n, long m, const GameSpec& spec);
Rational violate_prob(const StateKey& state, const GameSpec& spec);
std::pair<Rational, Rational> nonzero_payoffs(const StateKey& state, const GameSpec& spec);
Schedule schedule(const GameSpec& spec);

}  // namespace inspectgame::closed_form
