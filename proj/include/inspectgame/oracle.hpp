#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inspectgame/closed_form.hpp"
#include "inspectgame/game_model.hpp"

namespace inspectgame::oracle {

// The oracle exists to check the explicit formulas, so it never evaluates
// them: stages are solved from first principles by equalizing the opponent's
// payoffs, and base cases come from the game definition's reward sums. The
// only shared code is exact arithmetic (kernel) and the stage construction
// (game_model). closed_form.hpp is included solely for the StateSolution /
// Schedule record types.

using closed_form::Schedule;
using closed_form::StateSolution;

class StageError : public std::runtime_error {
 public:
  StageError(StateKey state, std::string violated, const std::string& message)
      : std::runtime_error(message), state_(state), violated_(std::move(violated)) {}
  const StateKey& state() const { return state_; }
  /// Which circular inequality failed, e.g. "A<C" or "c'<d'".
  const std::string& violated() const { return violated_; }

 private:
  StateKey state_;
  std::string violated_;
};

struct StageStrategy {
  Rational p;
  Rational q;
  PayoffCell values;
  bool degenerate = false;
};

/// Solves one 2x2 stage by indifference: p equalizes the inspectee's two
/// columns, q equalizes the inspector's two rows (the zero-sum formulas
/// p=(C-D)/(B-A+C-D), q=(C-A)/(C-A+B-D), value=(BC-AD)/(B-A+C-D) are the
/// special case of negated matrices). Requires the circular preference
/// structure A<C, B>D, a'>b', c'<d' unless the stage is all zero, in which
/// case the players may act arbitrarily and the given fallback p (the
/// canonical schedule value) with q = 0 is reported.
StageStrategy solve_2x2_mixed(const StageGame& stage, const Rational& degenerate_p);

/// Same, with the degenerate fallback p derived from the stage's own state
/// and the spec's penalty factor.
StageStrategy solve_2x2_mixed(const StageGame& stage, const GameSpec& spec);

struct SolutionTable {
  GameSpec spec;
  std::unordered_map<StateKey, StateSolution, StateKeyHash> states;

  const StateSolution& at(const StateKey& state) const;
  const StateSolution& root() const;
  std::vector<StateKey> sorted_keys() const;
};

/// Optional replacement for the stage construction, for numeric experiments
/// with alternative payoff rules (e.g. a flat penalty instead of b*r). Such
/// variants route only through the oracle.
using StageBuilder = std::function<StageGame(const StateKey&, const GameSpec&, const ValueFn&)>;

/// Memoized backward induction over every state reachable from the root.
/// Each interior stage is solved by solve_2x2_mixed on the stage game built
/// from already-solved continuation values; base cases follow the reward
/// sums of the game definition. Rejects leadership specs (the commitment
/// game is not a simultaneous-move recursion; see leadership.hpp).
SolutionTable solve_recursive(const GameSpec& spec,
                              closed_form::Validate mode = closed_form::Validate::kStrict,
                              const StageBuilder& stage_builder = nullptr);

/// Behavior profile: the inspector's map may only key on (n', m'), the
/// information he has in the uninformed game, so it is k-free by
/// construction; the inspectee keys on full states.
struct BehaviorStrategy {
  Schedule inspector;
  std::map<StateKey, Rational> inspectee;
};

enum class Player { kInspector, kInspectee };
enum class InfoMode { kInformed, kUninformedInspector };

std::string info_mode_name(InfoMode mode);
InfoMode info_mode_from_name(const std::string& name);

class StrategyGapError : public std::runtime_error {
 public:
  StrategyGapError(std::vector<StateKey> missing, const std::string& message)
      : std::runtime_error(message), missing_(std::move(missing)) {}
  const std::vector<StateKey>& missing() const { return missing_; }

 private:
  std::vector<StateKey> missing_;
};

/// Exact expected payoffs when both players follow the profile.
PayoffCell profile_value(const GameSpec& spec, const BehaviorStrategy& profile);

/// The responder's maximal expected payoff against the fixed opponent
/// behavior. Responder = inspectee: backward induction over (n', m', k')
/// (he is fully informed in both modes, and the opponent schedule is k-free
/// by type, so the two modes agree; that agreement is the computational
/// content of the uninformed-game equivalence). Responder = inspector, informed: the same
/// per-state maximization. Responder = inspector, uninformed: the max over
/// k-free schedules, certified exactly by sandwiching between the canonical
/// schedule's value and the informed bound, with an exhaustive
/// deterministic-schedule search as fallback for small n.
Rational best_response_value(const GameSpec& spec, const BehaviorStrategy& opponent,
                             Player responder, InfoMode mode);

}  // namespace inspectgame::oracle
