#include "inspectgame/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace inspectgame::oracle {

namespace {

std::string describe(const StateKey& s) {
  std::ostringstream out;
  out << "(" << s.n << "," << s.m << "," << s.k << ")";
  return out.str();
}

// Circular preference structure of the stage table: the inspector prefers
// not to inspect against legal action and to inspect against a violation,
// the inspectee the other way around. Returns the name of the first violated
// inequality, empty when all hold.
std::string circular_violation(const StageGame& g) {
  if (!(g.inspect_legal.inspector < g.no_inspect_legal.inspector)) return "A<C";
  if (!(g.inspect_violate.inspector > g.no_inspect_violate.inspector)) return "B>D";
  if (!(g.inspect_legal.inspectee > g.inspect_violate.inspectee)) return "a'>b'";
  if (!(g.no_inspect_legal.inspectee < g.no_inspect_violate.inspectee)) return "c'<d'";
  return {};
}

}  // namespace

StageStrategy solve_2x2_mixed(const StageGame& stage, const Rational& degenerate_p) {
  if (stage.all_zero()) {
    return StageStrategy{degenerate_p, Rational(0), PayoffCell{Rational(0), Rational(0)}, true};
  }
  const std::string violated = circular_violation(stage);
  if (!violated.empty()) {
    throw StageError(stage.state, violated,
                     "stage game at " + describe(stage.state) +
                         " is neither all-zero nor circular: " + violated + " fails");
  }
  const Rational& A = stage.inspect_legal.inspector;
  const Rational& B = stage.inspect_violate.inspector;
  const Rational& C = stage.no_inspect_legal.inspector;
  const Rational& D = stage.no_inspect_violate.inspector;
  const Rational& ae = stage.inspect_legal.inspectee;
  const Rational& be = stage.inspect_violate.inspectee;
  const Rational& ce = stage.no_inspect_legal.inspectee;
  const Rational& de = stage.no_inspect_violate.inspectee;

  StageStrategy out;
  out.p = (de - ce) / (ae - be + de - ce);  // equalizes the inspectee's columns
  out.q = (C - A) / (C - A + B - D);        // equalizes the inspector's rows
  out.values.inspector = (1 - out.q) * A + out.q * B;
  out.values.inspectee = out.p * ae + (1 - out.p) * ce;
  out.degenerate = false;
  return out;
}

StageStrategy solve_2x2_mixed(const StageGame& stage, const GameSpec& spec) {
  kernel::PascalSum s(spec.b);
  return solve_2x2_mixed(
      stage, kernel::canonical_inspect_prob(stage.state.n, static_cast<long>(stage.state.m), s));
}

const StateSolution& SolutionTable::at(const StateKey& state) const {
  auto it = states.find(state);
  if (it == states.end()) {
    throw std::out_of_range("no solution entry for state " + describe(state));
  }
  return it->second;
}

const StateSolution& SolutionTable::root() const { return at(spec.root()); }

std::vector<StateKey> SolutionTable::sorted_keys() const {
  std::vector<StateKey> keys;
  keys.reserve(states.size());
  for (const auto& [key, unused] : states) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

namespace {

class RecursiveSolver {
 public:
  RecursiveSolver(const GameSpec& spec, const StageBuilder& builder)
      : spec_(spec), builder_(builder), s_(spec.b) {}

  StateSolution& solve(const StateKey& state) {
    auto found = memo_.find(state);
    if (found != memo_.end()) return found->second;

    StateSolution entry;
    entry.state = state;
    const Rational canonical_p =
        kernel::canonical_inspect_prob(state.n, static_cast<long>(state.m), s_);
    if (!is_interior(state)) {
      const PayoffCell base = base_values(state, spec_);
      entry.inspector_value = base.inspector;
      entry.inspectee_value = base.inspectee;
      entry.p = canonical_p;
      entry.q = (state.m == 0 && state.k > 0 && state.n > 0) ? Rational(1) : Rational(0);
      entry.degenerate = false;
    } else {
      const ValueFn continuation = [this](const StateKey& child) {
        StateSolution& sol = solve(child);
        return PayoffCell{sol.inspector_value, sol.inspectee_value};
      };
      const StageGame stage = builder_ ? builder_(state, spec_, continuation)
                                       : stage_game(state, spec_, continuation);
      const StageStrategy mixed = solve_2x2_mixed(stage, canonical_p);
      entry.inspector_value = mixed.values.inspector;
      entry.inspectee_value = mixed.values.inspectee;
      entry.p = mixed.p;
      entry.q = mixed.q;
      entry.degenerate = mixed.degenerate;
    }
    return memo_.emplace(state, std::move(entry)).first->second;
  }

  std::unordered_map<StateKey, StateSolution, StateKeyHash> take() { return std::move(memo_); }

 private:
  const GameSpec& spec_;
  const StageBuilder& builder_;
  kernel::PascalSum s_;
  std::unordered_map<StateKey, StateSolution, StateKeyHash> memo_;
};

}  // namespace

SolutionTable solve_recursive(const GameSpec& spec, closed_form::Validate mode,
                              const StageBuilder& stage_builder) {
  if (spec.variant == Variant::kLeadership) {
    throw std::invalid_argument(
        "the oracle solves simultaneous-move recursions; leadership commitment has its own module");
  }
  if (mode == closed_form::Validate::kStrict) validate(spec);
  RecursiveSolver solver(spec, stage_builder);
  solver.solve(spec.root());
  return SolutionTable{spec, solver.take()};
}

std::string info_mode_name(InfoMode mode) {
  return mode == InfoMode::kInformed ? "informed" : "uninformed";
}

InfoMode info_mode_from_name(const std::string& name) {
  if (name == "informed") return InfoMode::kInformed;
  if (name == "uninformed" || name == "uninformed_inspector") return InfoMode::kUninformedInspector;
  throw std::invalid_argument("unknown info mode: " + name);
}

namespace {

std::vector<StateKey> reachable_interior(const GameSpec& spec) {
  std::vector<StateKey> interior;
  std::set<StateKey> seen;
  std::deque<StateKey> queue{spec.root()};
  seen.insert(spec.root());
  while (!queue.empty()) {
    const StateKey s = queue.front();
    queue.pop_front();
    if (!is_interior(s)) continue;
    interior.push_back(s);
    for (const StateKey child : {StateKey{s.n - 1, s.m - 1, s.k}, StateKey{s.n - 1, s.m, s.k},
                                 StateKey{s.n - 1, s.m, s.k - 1}}) {
      if (seen.insert(child).second) queue.push_back(child);
    }
  }
  return interior;
}

void require_probability(const Rational& x, const char* what) {
  if (x < 0 || x > 1) {
    throw std::invalid_argument(std::string(what) + " outside [0, 1]: " + to_string(x));
  }
}

void check_inspector_coverage(const Schedule& schedule, const std::vector<StateKey>& interior) {
  std::vector<StateKey> missing;
  for (const StateKey& s : interior) {
    auto it = schedule.find({s.n, s.m});
    if (it == schedule.end()) {
      missing.push_back(s);
    } else {
      require_probability(it->second, "inspection probability");
    }
  }
  if (!missing.empty()) {
    throw StrategyGapError(missing, "inspector schedule missing " +
                                        std::to_string(missing.size()) + " reachable states, first " +
                                        describe(missing.front()));
  }
}

void check_inspectee_coverage(const std::map<StateKey, Rational>& strategy,
                              const std::vector<StateKey>& interior) {
  std::vector<StateKey> missing;
  for (const StateKey& s : interior) {
    auto it = strategy.find(s);
    if (it == strategy.end()) {
      missing.push_back(s);
    } else {
      require_probability(it->second, "violation probability");
    }
  }
  if (!missing.empty()) {
    throw StrategyGapError(missing, "inspectee strategy missing " +
                                        std::to_string(missing.size()) + " reachable states, first " +
                                        describe(missing.front()));
  }
}

class ProfileEvaluator {
 public:
  ProfileEvaluator(const GameSpec& spec, const BehaviorStrategy& profile)
      : spec_(spec), profile_(profile) {}

  PayoffCell value(const StateKey& state) {
    auto found = memo_.find(state);
    if (found != memo_.end()) return found->second;
    PayoffCell out;
    if (!is_interior(state)) {
      out = base_values(state, spec_);
    } else {
      const Rational p = profile_.inspector.at({state.n, state.m});
      const Rational q = profile_.inspectee.at(state);
      const Rational& r = reward_at(state, spec_);
      const PayoffCell caught = caught_payoffs(state, spec_);
      const PayoffCell il = value(StateKey{state.n - 1, state.m - 1, state.k});
      const PayoffCell nl = value(StateKey{state.n - 1, state.m, state.k});
      PayoffCell nv = value(StateKey{state.n - 1, state.m, state.k - 1});
      nv.inspector -= r;
      nv.inspectee += r;
      out.inspector = p * q * caught.inspector + p * (1 - q) * il.inspector +
                      (1 - p) * (1 - q) * nl.inspector + (1 - p) * q * nv.inspector;
      out.inspectee = p * q * caught.inspectee + p * (1 - q) * il.inspectee +
                      (1 - p) * (1 - q) * nl.inspectee + (1 - p) * q * nv.inspectee;
    }
    return memo_.emplace(state, std::move(out)).first->second;
  }

 private:
  const GameSpec& spec_;
  const BehaviorStrategy& profile_;
  std::unordered_map<StateKey, PayoffCell, StateKeyHash> memo_;
};

// Inspectee best response against a fixed k-free schedule; he observes the
// full state, so this is plain backward induction.
class InspecteeBestResponse {
 public:
  InspecteeBestResponse(const GameSpec& spec, const Schedule& schedule)
      : spec_(spec), schedule_(schedule) {}

  Rational value(const StateKey& state) {
    auto found = memo_.find(state);
    if (found != memo_.end()) return found->second;
    Rational out;
    if (!is_interior(state)) {
      out = base_values(state, spec_).inspectee;
    } else {
      const Rational p = schedule_.at({state.n, state.m});
      const Rational& r = reward_at(state, spec_);
      const Rational legal = p * value(StateKey{state.n - 1, state.m - 1, state.k}) +
                             (1 - p) * value(StateKey{state.n - 1, state.m, state.k});
      const Rational violate =
          p * caught_payoffs(state, spec_).inspectee +
          (1 - p) * (value(StateKey{state.n - 1, state.m, state.k - 1}) + r);
      out = std::max(legal, violate);
    }
    return memo_.emplace(state, std::move(out)).first->second;
  }

 private:
  const GameSpec& spec_;
  const Schedule& schedule_;
  std::unordered_map<StateKey, Rational, StateKeyHash> memo_;
};

// Inspector best response with full information about past violations.
class InformedInspectorBestResponse {
 public:
  InformedInspectorBestResponse(const GameSpec& spec, const std::map<StateKey, Rational>& strategy)
      : spec_(spec), strategy_(strategy) {}

  Rational value(const StateKey& state) {
    auto found = memo_.find(state);
    if (found != memo_.end()) return found->second;
    Rational out;
    if (!is_interior(state)) {
      out = base_values(state, spec_).inspector;
    } else {
      const Rational q = strategy_.at(state);
      const Rational& r = reward_at(state, spec_);
      const Rational inspect = (1 - q) * value(StateKey{state.n - 1, state.m - 1, state.k}) +
                               q * caught_payoffs(state, spec_).inspector;
      const Rational wait = (1 - q) * value(StateKey{state.n - 1, state.m, state.k}) +
                            q * (value(StateKey{state.n - 1, state.m, state.k - 1}) - r);
      out = std::max(inspect, wait);
    }
    return memo_.emplace(state, std::move(out)).first->second;
  }

 private:
  const GameSpec& spec_;
  const std::map<StateKey, Rational>& strategy_;
  std::unordered_map<StateKey, Rational, StateKeyHash> memo_;
};

// Inspector's expected value when he plays a fixed k-free schedule against
// the fixed inspectee strategy.
class ScheduleValue {
 public:
  ScheduleValue(const GameSpec& spec, const Schedule& schedule,
                const std::map<StateKey, Rational>& strategy)
      : spec_(spec), schedule_(schedule), strategy_(strategy) {}

  Rational value(const StateKey& state) {
    auto found = memo_.find(state);
    if (found != memo_.end()) return found->second;
    Rational out;
    if (!is_interior(state)) {
      out = base_values(state, spec_).inspector;
    } else {
      const Rational p = schedule_.at({state.n, state.m});
      const Rational q = strategy_.at(state);
      const Rational& r = reward_at(state, spec_);
      out = p * q * caught_payoffs(state, spec_).inspector +
            p * (1 - q) * value(StateKey{state.n - 1, state.m - 1, state.k}) +
            (1 - p) * (1 - q) * value(StateKey{state.n - 1, state.m, state.k}) +
            (1 - p) * q * (value(StateKey{state.n - 1, state.m, state.k - 1}) - r);
    }
    return memo_.emplace(state, std::move(out)).first->second;
  }

 private:
  const GameSpec& spec_;
  const Schedule& schedule_;
  const std::map<StateKey, Rational>& strategy_;
  std::unordered_map<StateKey, Rational, StateKeyHash> memo_;
};

constexpr unsigned kExhaustiveHorizon = 15;

// Exact maximum over deterministic k-free schedules by depth-first search
// over the inspect/wait decision at each reached (n', m'), carrying the
// distribution over k' forward. The expected payoff is multilinear in the
// per-(n', m') probabilities, so some deterministic schedule is optimal
// among all k-free randomized ones.
class ExhaustiveUninformedBestResponse {
 public:
  ExhaustiveUninformedBestResponse(const GameSpec& spec,
                                   const std::map<StateKey, Rational>& strategy)
      : spec_(spec), strategy_(strategy) {}

  Rational run() {
    std::vector<std::pair<unsigned, Rational>> dist{{spec_.k, Rational(1)}};
    return best(spec_.n, spec_.m, dist);
  }

 private:
  Rational base_mass(unsigned n, unsigned m,
                     const std::vector<std::pair<unsigned, Rational>>& dist) const {
    Rational total(0);
    for (const auto& [k, w] : dist) {
      total += w * base_values(StateKey{n, m, k}, spec_).inspector;
    }
    return total;
  }

  Rational best(unsigned n, unsigned m, const std::vector<std::pair<unsigned, Rational>>& dist) {
    if (n == 0 || m >= n || m == 0) return base_mass(n, m, dist);

    // Wait: violations go uncaught; k' decrements stochastically.
    Rational wait_immediate(0);
    std::vector<std::pair<unsigned, Rational>> wait_dist;
    std::map<unsigned, Rational> wait_acc;
    for (const auto& [k, w] : dist) {
      if (k == 0) {
        wait_acc[0] += w;
        continue;
      }
      const StateKey s{n, m, k};
      const Rational q = strategy_.at(s);
      const Rational& r = reward_at(s, spec_);
      wait_immediate += w * q * (-r);
      wait_acc[k] += w * (1 - q);
      wait_acc[k - 1] += w * q;
    }
    for (auto& [k, w] : wait_acc) {
      if (w != 0) wait_dist.emplace_back(k, std::move(w));
    }
    const Rational wait_value = wait_immediate + best(n - 1, m, wait_dist);

    // Inspect: a violation terminates that branch of the distribution.
    Rational inspect_immediate(0);
    std::vector<std::pair<unsigned, Rational>> inspect_dist;
    for (const auto& [k, w] : dist) {
      if (k == 0) {
        inspect_dist.emplace_back(0u, w);
        continue;
      }
      const StateKey s{n, m, k};
      const Rational q = strategy_.at(s);
      inspect_immediate += w * q * caught_payoffs(s, spec_).inspector;
      Rational carry = w * (1 - q);
      if (carry != 0) inspect_dist.emplace_back(k, std::move(carry));
    }
    const Rational inspect_value = inspect_immediate + best(n - 1, m - 1, inspect_dist);

    return std::max(wait_value, inspect_value);
  }

  const GameSpec& spec_;
  const std::map<StateKey, Rational>& strategy_;
};

Schedule canonical_schedule(const GameSpec& spec) {
  kernel::PascalSum s(spec.b);
  Schedule plan;
  for (unsigned n_left = spec.n; n_left >= 1; --n_left) {
    const unsigned elapsed = spec.n - n_left;
    const unsigned low = spec.m > elapsed ? spec.m - elapsed : 0;
    for (unsigned m_left = low; m_left <= spec.m; ++m_left) {
      plan[{n_left, m_left}] = kernel::canonical_inspect_prob(n_left, static_cast<long>(m_left), s);
    }
  }
  return plan;
}

}  // namespace

PayoffCell profile_value(const GameSpec& spec, const BehaviorStrategy& profile) {
  const std::vector<StateKey> interior = reachable_interior(spec);
  check_inspector_coverage(profile.inspector, interior);
  check_inspectee_coverage(profile.inspectee, interior);
  ProfileEvaluator evaluator(spec, profile);
  return evaluator.value(spec.root());
}

Rational best_response_value(const GameSpec& spec, const BehaviorStrategy& opponent,
                             Player responder, InfoMode mode) {
  const std::vector<StateKey> interior = reachable_interior(spec);
  if (responder == Player::kInspectee) {
    // The inspectee is fully informed in both modes and the schedule is
    // k-free by type, so the mode does not change his induction.
    check_inspector_coverage(opponent.inspector, interior);
    InspecteeBestResponse br(spec, opponent.inspector);
    return br.value(spec.root());
  }

  check_inspectee_coverage(opponent.inspectee, interior);
  InformedInspectorBestResponse informed(spec, opponent.inspectee);
  const Rational informed_value = informed.value(spec.root());
  if (mode == InfoMode::kInformed) return informed_value;

  // Uninformed: any k-free schedule's value lower-bounds the uninformed best
  // response, which the informed value upper-bounds. Equality certifies the
  // exact answer; otherwise search deterministic schedules exhaustively.
  const Schedule canonical = canonical_schedule(spec);
  ScheduleValue candidate(spec, canonical, opponent.inspectee);
  const Rational lower = candidate.value(spec.root());
  if (lower == informed_value) return informed_value;
  if (spec.n > kExhaustiveHorizon) {
    throw std::runtime_error(
        "uninformed inspector best response: sandwich certificate open and n too large "
        "for exhaustive schedule search");
  }
  ExhaustiveUninformedBestResponse exhaustive(spec, opponent.inspectee);
  return exhaustive.run();
}

}  // namespace inspectgame::oracle
