#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "inspectgame/rational.hpp"

namespace inspectgame {

enum class Variant { kZeroSum, kNonZeroSum, kLeadership };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// State of the recursive game: n periods, m inspections and k intended
/// violations remaining. k > n is legal; the no-inspections base case
/// truncates at min(k, n).
struct StateKey {
  unsigned n = 0;
  unsigned m = 0;
  unsigned k = 0;
  auto operator<=>(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& s) const {
    return (static_cast<std::size_t>(s.n) << 42) ^
           (static_cast<std::size_t>(s.m) << 21) ^ static_cast<std::size_t>(s.k);
  }
};

enum class SpecError {
  kPenaltyOutOfRange,       // zero-sum b <= -1, or non-zero-sum b < 0
  kInspectorCostMissing,    // non-zero-sum/leadership without a
  kInspectorCostOutOfRange, // a outside (0, 1)
  kNegativeReward,
  kRewardLengthMismatch,
  kCaughtCostNotPositive,
  kCaughtCostLengthMismatch,
};

std::string spec_error_name(SpecError code);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(SpecError code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  SpecError code() const { return code_; }

 private:
  SpecError code_;
};

/// Full game parameterization. Rewards are stored first-violation-first:
/// rewards[0] is r_k (the reward for the first violation), rewards[k-1] is
/// r_1 for the last. caught_costs, when given, follows the same order and
/// holds the leadership game's c(r) entries; it defaults to a * r per entry.
struct GameSpec {
  unsigned n = 0;
  unsigned m = 0;
  unsigned k = 0;
  Rational b;
  std::optional<Rational> a;
  std::vector<Rational> rewards;
  std::optional<std::vector<Rational>> caught_costs;
  Variant variant = Variant::kZeroSum;

  static GameSpec zero_sum(unsigned n, unsigned m, unsigned k, Rational b,
                           std::vector<Rational> rewards);
  static GameSpec non_zero_sum(unsigned n, unsigned m, unsigned k, Rational a, Rational b,
                               std::vector<Rational> rewards);
  static GameSpec leadership(unsigned n, unsigned m, unsigned k, Rational a, Rational b,
                             std::vector<Rational> rewards,
                             std::optional<std::vector<Rational>> caught_costs = std::nullopt);

  StateKey root() const { return StateKey{n, m, k}; }
};

/// Accepts iff the variant-specific parameter ranges hold; throws
/// ValidationError with a distinct code otherwise.
void validate(const GameSpec& spec);

/// Next-violation reward r_{k'} at the given state, i.e.
/// rewards[spec.k - state.k]. Throws std::out_of_range when state.k == 0
/// or state.k > spec.k.
const Rational& reward_at(const StateKey& state, const GameSpec& spec);

/// Leadership caught cost c(r_{k'}) at the state: the explicit entry when
/// caught_costs is set, otherwise a * r_{k'}.
Rational caught_cost_at(const StateKey& state, const GameSpec& spec);

struct PayoffCell {
  Rational inspector;
  Rational inspectee;
  bool operator==(const PayoffCell&) const = default;
};

/// One period's 2x2 simultaneous game. Rows: inspect / no inspect. Columns:
/// legal / violate. The (inspect, violate) cell terminates play; simulators
/// stop there without consulting continuation values. Every other cell's
/// entries are continuation values (plus the uncaught-violation transfer of
/// r_k in the no-inspect/violate cell).
struct StageGame {
  StateKey state;
  PayoffCell inspect_legal;      // A
  PayoffCell inspect_violate;    // B
  PayoffCell no_inspect_legal;   // C
  PayoffCell no_inspect_violate; // D
  bool inspect_violate_terminal = true;

  bool all_zero() const;
};

inline bool is_interior(const StateKey& s) { return s.n > s.m && s.m > 0 && s.k > 0; }

/// Payoffs assigned when the recursion bottoms out: 0 when m >= n, k == 0 or
/// n == 0; minus/plus the next min(k, n) rewards when m == 0.
PayoffCell base_values(const StateKey& state, const GameSpec& spec);

/// Terminal-cell payoffs for a violation caught at this state:
/// (b*r, -b*r) zero-sum, (-a*r, -b*r) non-zero-sum, (-c(r), -b*r) leadership.
PayoffCell caught_payoffs(const StateKey& state, const GameSpec& spec);

using ValueFn = std::function<PayoffCell(const StateKey&)>;

/// Builds the stage game at an interior state from a continuation value
/// function. Throws std::domain_error outside the recursive regime.
StageGame stage_game(const StateKey& state, const GameSpec& spec, const ValueFn& value_fn);

}  // namespace inspectgame
