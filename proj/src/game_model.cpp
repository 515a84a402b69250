#include "inspectgame/game_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace inspectgame {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kZeroSum: return "zero_sum";
    case Variant::kNonZeroSum: return "non_zero_sum";
    case Variant::kLeadership: return "leadership";
  }
  throw std::logic_error("unknown variant");
}

Variant variant_from_name(const std::string& name) {
  if (name == "zero_sum") return Variant::kZeroSum;
  if (name == "non_zero_sum") return Variant::kNonZeroSum;
  if (name == "leadership") return Variant::kLeadership;
  throw std::invalid_argument("unknown variant: " + name);
}

std::string spec_error_name(SpecError code) {
  switch (code) {
    case SpecError::kPenaltyOutOfRange: return "penalty_out_of_range";
    case SpecError::kInspectorCostMissing: return "inspector_cost_missing";
    case SpecError::kInspectorCostOutOfRange: return "inspector_cost_out_of_range";
    case SpecError::kNegativeReward: return "negative_reward";
    case SpecError::kRewardLengthMismatch: return "reward_length_mismatch";
    case SpecError::kCaughtCostNotPositive: return "caught_cost_not_positive";
    case SpecError::kCaughtCostLengthMismatch: return "caught_cost_length_mismatch";
  }
  throw std::logic_error("unknown spec error");
}

GameSpec GameSpec::zero_sum(unsigned n, unsigned m, unsigned k, Rational b,
                            std::vector<Rational> rewards) {
  GameSpec spec;
  spec.n = n;
  spec.m = m;
  spec.k = k;
  spec.b = std::move(b);
  spec.rewards = std::move(rewards);
  spec.variant = Variant::kZeroSum;
  return spec;
}

GameSpec GameSpec::non_zero_sum(unsigned n, unsigned m, unsigned k, Rational a, Rational b,
                                std::vector<Rational> rewards) {
  GameSpec spec;
  spec.n = n;
  spec.m = m;
  spec.k = k;
  spec.a = std::move(a);
  spec.b = std::move(b);
  spec.rewards = std::move(rewards);
  spec.variant = Variant::kNonZeroSum;
  return spec;
}

GameSpec GameSpec::leadership(unsigned n, unsigned m, unsigned k, Rational a, Rational b,
                              std::vector<Rational> rewards,
                              std::optional<std::vector<Rational>> caught_costs) {
  GameSpec spec = non_zero_sum(n, m, k, std::move(a), std::move(b), std::move(rewards));
  spec.caught_costs = std::move(caught_costs);
  spec.variant = Variant::kLeadership;
  return spec;
}

void validate(const GameSpec& spec) {
  if (spec.rewards.size() != spec.k) {
    throw ValidationError(SpecError::kRewardLengthMismatch,
                          "rewards must list exactly k entries, first violation first");
  }
  for (const Rational& r : spec.rewards) {
    if (r < 0) {
      throw ValidationError(SpecError::kNegativeReward, "rewards must be nonnegative");
    }
  }
  if (spec.variant == Variant::kZeroSum) {
    if (spec.b <= -1) {
      throw ValidationError(SpecError::kPenaltyOutOfRange, "penalty factor must exceed -1");
    }
    return;
  }
  // Non-zero-sum and leadership: 0 < a < 1 and b >= 0.
  if (!spec.a.has_value()) {
    throw ValidationError(SpecError::kInspectorCostMissing,
                          "inspector cost factor a is required for this variant");
  }
  if (*spec.a <= 0 || *spec.a >= 1) {
    throw ValidationError(SpecError::kInspectorCostOutOfRange,
                          "inspector cost factor a must lie strictly between 0 and 1");
  }
  if (spec.b < 0) {
    throw ValidationError(SpecError::kPenaltyOutOfRange,
                          "penalty factor must be nonnegative for this variant");
  }
  if (spec.variant == Variant::kLeadership) {
    if (spec.caught_costs && spec.caught_costs->size() != spec.k) {
      throw ValidationError(SpecError::kCaughtCostLengthMismatch,
                            "caught_costs must list exactly k entries");
    }
    for (unsigned idx = 0; idx < spec.k; ++idx) {
      const Rational cost =
          spec.caught_costs ? (*spec.caught_costs)[idx] : Rational(*spec.a * spec.rewards[idx]);
      if (cost <= 0) {
        throw ValidationError(SpecError::kCaughtCostNotPositive,
                              "leadership caught costs c(r) must be positive");
      }
    }
  }
}

const Rational& reward_at(const StateKey& state, const GameSpec& spec) {
  if (state.k == 0) throw std::out_of_range("no reward at k = 0");
  if (state.k > spec.k) throw std::out_of_range("state counts more violations than the spec");
  return spec.rewards[spec.k - state.k];
}

Rational caught_cost_at(const StateKey& state, const GameSpec& spec) {
  if (spec.caught_costs) {
    if (state.k == 0 || state.k > spec.k) throw std::out_of_range("no caught cost at this k");
    return (*spec.caught_costs)[spec.k - state.k];
  }
  if (!spec.a) throw std::logic_error("caught cost needs a or explicit caught_costs");
  return *spec.a * reward_at(state, spec);
}

bool StageGame::all_zero() const {
  const PayoffCell zero{};
  return inspect_legal == zero && inspect_violate == zero && no_inspect_legal == zero &&
         no_inspect_violate == zero;
}

PayoffCell base_values(const StateKey& state, const GameSpec& spec) {
  if (state.n == 0 || state.m >= state.n || state.k == 0) return PayoffCell{Rational(0), Rational(0)};
  if (state.m == 0) {
    // The inspectee safely violates in each remaining period, up to k times.
    Rational total(0);
    const unsigned takes = std::min(state.k, state.n);
    for (unsigned i = 1; i <= takes; ++i) {
      total += reward_at(StateKey{state.n, state.m, state.k - (i - 1)}, spec);
    }
    return PayoffCell{-total, total};
  }
  throw std::domain_error("base_values called on an interior state");
}

PayoffCell caught_payoffs(const StateKey& state, const GameSpec& spec) {
  const Rational& r = reward_at(state, spec);
  const Rational inspectee = -(spec.b * r);
  switch (spec.variant) {
    case Variant::kZeroSum:
      return PayoffCell{spec.b * r, inspectee};
    case Variant::kNonZeroSum:
      return PayoffCell{-(*spec.a * r), inspectee};
    case Variant::kLeadership:
      return PayoffCell{-caught_cost_at(state, spec), inspectee};
  }
  throw std::logic_error("unknown variant");
}

StageGame stage_game(const StateKey& state, const GameSpec& spec, const ValueFn& value_fn) {
  if (!is_interior(state)) {
    throw std::domain_error("stage_game requires n > m > 0 and k > 0");
  }
  const Rational& r = reward_at(state, spec);
  StageGame stage;
  stage.state = state;
  stage.inspect_violate_terminal = true;
  stage.inspect_legal = value_fn(StateKey{state.n - 1, state.m - 1, state.k});
  stage.inspect_violate = caught_payoffs(state, spec);
  stage.no_inspect_legal = value_fn(StateKey{state.n - 1, state.m, state.k});
  PayoffCell after = value_fn(StateKey{state.n - 1, state.m, state.k - 1});
  after.inspector -= r;
  after.inspectee += r;
  stage.no_inspect_violate = after;
  return stage;
}

}  // namespace inspectgame
