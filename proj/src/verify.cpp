#include "inspectgame/verify.hpp"

#include <sstream>

#include "inspectgame/leadership.hpp"
#include "inspectgame/profiles.hpp"
#include "inspectgame/simulate.hpp"

namespace inspectgame::verify {

namespace {

std::string describe(const StateKey& s) {
  std::ostringstream out;
  out << "(" << s.n << "," << s.m << "," << s.k << ")";
  return out.str();
}

CheckResult pass(std::string name) { return CheckResult{std::move(name), true, {}}; }

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

CheckResult closed_form_vs_oracle(const closed_form::Solver& solver,
                                  const oracle::SolutionTable& table) {
  for (const StateKey& key : table.sorted_keys()) {
    const auto& got = table.at(key);
    const auto want = solver.solve(key);
    if (!(want == got)) {
      return fail("closed_form_vs_oracle",
                  "mismatch at " + describe(key) + ": closed form v=" +
                      to_string(want.inspector_value) + " p=" + to_string(want.p) +
                      " q=" + to_string(want.q) + ", oracle v=" + to_string(got.inspector_value) +
                      " p=" + to_string(got.p) + " q=" + to_string(got.q));
    }
  }
  return pass("closed_form_vs_oracle");
}

CheckResult indifference(const closed_form::Solver& solver, const oracle::SolutionTable& table) {
  const ValueFn continuation = [&](const StateKey& child) {
    auto [v, w] = solver.payoff_pair(child);
    return PayoffCell{std::move(v), std::move(w)};
  };
  for (const StateKey& key : table.sorted_keys()) {
    if (!is_interior(key)) continue;
    const auto& entry = table.at(key);
    if (entry.degenerate) continue;
    const StageGame stage = stage_game(key, solver.spec(), continuation);
    const Rational& p = entry.p;
    const Rational& q = entry.q;
    // q equalizes the inspector's rows.
    const Rational row_inspect =
        (1 - q) * stage.inspect_legal.inspector + q * stage.inspect_violate.inspector;
    const Rational row_wait =
        (1 - q) * stage.no_inspect_legal.inspector + q * stage.no_inspect_violate.inspector;
    if (row_inspect != row_wait) {
      return fail("indifference", "q fails to equalize the inspector at " + describe(key));
    }
    // p equalizes the inspectee's columns.
    const Rational col_legal =
        p * stage.inspect_legal.inspectee + (1 - p) * stage.no_inspect_legal.inspectee;
    const Rational col_violate =
        p * stage.inspect_violate.inspectee + (1 - p) * stage.no_inspect_violate.inspectee;
    if (col_legal != col_violate) {
      return fail("indifference", "p fails to equalize the inspectee at " + describe(key));
    }
  }
  return pass("indifference");
}

CheckResult probability_range(const oracle::SolutionTable& table) {
  for (const StateKey& key : table.sorted_keys()) {
    const auto& entry = table.at(key);
    if (entry.p < 0 || entry.p > 1 || entry.q < 0 || entry.q > 1) {
      return fail("probability_range", "p or q outside [0,1] at " + describe(key));
    }
    if (is_interior(key) && !entry.degenerate) {
      if (!(entry.p > 0 && entry.p < 1 && entry.q > 0 && entry.q < 1)) {
        return fail("probability_range",
                    "interior non-degenerate state not strictly mixed at " + describe(key));
      }
    }
  }
  return pass("probability_range");
}

CheckResult k_free_schedule(const GameSpec& spec) {
  const closed_form::Schedule reference = closed_form::Solver(spec).schedule();
  for (unsigned k_alt = 0; k_alt <= spec.k; ++k_alt) {
    GameSpec alt = spec;
    alt.k = k_alt;
    alt.rewards.assign(spec.rewards.begin(), spec.rewards.begin() + k_alt);
    if (alt.caught_costs) {
      alt.caught_costs->assign(spec.caught_costs->begin(), spec.caught_costs->begin() + k_alt);
    }
    const closed_form::Schedule other = closed_form::Solver(alt).schedule();
    if (other != reference) {
      return fail("k_free_schedule",
                  "schedule changed when k became " + std::to_string(k_alt));
    }
  }
  return pass("k_free_schedule");
}

CheckResult profile_value_matches(const GameSpec& spec, const oracle::BehaviorStrategy& profile,
                                  const closed_form::Solver& solver) {
  const PayoffCell under = oracle::profile_value(spec, profile);
  const auto [v, w] = solver.payoff_pair(spec.root());
  if (under.inspector != v || under.inspectee != w) {
    return fail("profile_value_matches",
                "equilibrium profile value (" + to_string(under.inspector) + ", " +
                    to_string(under.inspectee) + ") differs from closed form (" + to_string(v) +
                    ", " + to_string(w) + ")");
  }
  return pass("profile_value_matches");
}

CheckResult zero_exploitability(const GameSpec& spec, const oracle::BehaviorStrategy& profile,
                                oracle::InfoMode mode) {
  const std::string name =
      std::string("zero_exploitability_") + oracle::info_mode_name(mode);
  const auto [inspector_regret, inspectee_regret] =
      sim::exploitability_report(spec, profile, mode);
  if (inspector_regret != 0 || inspectee_regret != 0) {
    return fail(name, "regrets (" + to_string(inspector_regret) + ", " +
                          to_string(inspectee_regret) + ") are not zero");
  }
  return pass(name);
}

CheckResult state_count_bound(const GameSpec& spec, const oracle::SolutionTable& table) {
  const std::size_t bound = static_cast<std::size_t>(spec.n + 1) * (spec.m + 1) * (spec.k + 1);
  if (table.states.size() > bound) {
    return fail("state_count_bound", std::to_string(table.states.size()) +
                                         " states solved, bound is " + std::to_string(bound));
  }
  return pass("state_count_bound");
}

std::vector<CheckResult> verify_simultaneous(const GameSpec& spec) {
  std::vector<CheckResult> results;
  const closed_form::Solver solver(spec);
  const oracle::SolutionTable table = oracle::solve_recursive(spec);
  const oracle::BehaviorStrategy profile = profiles::equilibrium_profile(spec);

  results.push_back(closed_form_vs_oracle(solver, table));
  results.push_back(indifference(solver, table));
  results.push_back(probability_range(table));
  results.push_back(k_free_schedule(spec));
  results.push_back(profile_value_matches(spec, profile, solver));
  results.push_back(zero_exploitability(spec, profile, oracle::InfoMode::kInformed));
  results.push_back(zero_exploitability(spec, profile, oracle::InfoMode::kUninformedInspector));
  results.push_back(state_count_bound(spec, table));
  return results;
}

// Independent recomputation of the leader's payoff through the commitment
// recursion u = p*u(inspect) + (1-p)*u(wait) under always-legal play.
class CommitmentRecursion {
 public:
  CommitmentRecursion(const GameSpec& spec, const closed_form::Schedule& schedule)
      : spec_(spec), schedule_(schedule) {}

  Rational value(const StateKey& state) {
    auto found = memo_.find(state);
    if (found != memo_.end()) return found->second;
    Rational out;
    if (!is_interior(state)) {
      out = base_values(state, spec_).inspector;
    } else {
      const Rational p = schedule_.at({state.n, state.m});
      out = p * value(StateKey{state.n - 1, state.m - 1, state.k}) +
            (1 - p) * value(StateKey{state.n - 1, state.m, state.k});
    }
    return memo_.emplace(state, std::move(out)).first->second;
  }

 private:
  const GameSpec& spec_;
  const closed_form::Schedule& schedule_;
  std::unordered_map<StateKey, Rational, StateKeyHash> memo_;
};

std::vector<CheckResult> verify_leadership(const GameSpec& spec) {
  std::vector<CheckResult> results;
  const leadership::LeadershipSolution solution = leadership::solve_leadership(spec);

  // The simultaneous twin: same parameters, mixed-equilibrium play.
  GameSpec twin = spec;
  twin.variant = Variant::kNonZeroSum;
  twin.caught_costs.reset();
  const closed_form::Solver twin_solver(twin);
  const oracle::SolutionTable twin_table = oracle::solve_recursive(twin);

  {
    CommitmentRecursion recursion(spec, solution.committed_schedule);
    bool ok = true;
    std::string detail;
    for (const auto& [state, cell] : solution.values) {
      if (cell.inspector != -cell.inspectee) {
        ok = false;
        detail = "u != -w at " + describe(state);
        break;
      }
      if (recursion.value(state) != cell.inspector) {
        ok = false;
        detail = "commitment recursion disagrees with -t/s at " + describe(state);
        break;
      }
    }
    results.push_back(ok ? pass("leadership_u_recursion") : fail("leadership_u_recursion", detail));
  }

  {
    const auto [v, w] = twin_solver.payoff_pair(spec.root());
    const Rational u = solution.values.at(spec.root()).inspector;
    bool ok = u == solution.gain_factor * v;
    std::string detail = ok ? "" : "u != gain_factor * v at the root";
    if (ok && is_interior(spec.root()) &&
        !(solution.gain_factor > 0 && solution.gain_factor < 1)) {
      ok = false;
      detail = "gain factor " + to_string(solution.gain_factor) + " outside (0,1)";
    }
    if (ok && !(u >= v)) {
      ok = false;
      detail = "commitment failed to improve the leader";
    }
    results.push_back(ok ? pass("leadership_gain_factor") : fail("leadership_gain_factor", detail));
  }

  {
    bool ok = true;
    std::string detail;
    const ValueFn continuation = [&](const StateKey& child) { return solution.values.at(child); };
    for (const auto& [state, cell] : solution.values) {
      if (!is_interior(state)) continue;
      StageGame stage;
      try {
        stage = stage_game(state, spec, continuation);
        const leadership::LeadershipOutcome outcome = leadership::commit_2x2(stage);
        const Rational scheduled = solution.committed_schedule.at({state.n, state.m});
        if (outcome.p_star != scheduled) {
          ok = false;
          detail = "commitment p* differs from the schedule at " + describe(state);
        } else if (!(outcome.leader_value > outcome.nash_value)) {
          ok = false;
          detail = "L <= N at " + describe(state);
        } else if (outcome.leader_value != cell.inspector) {
          ok = false;
          detail = "L differs from u at " + describe(state);
        } else if (outcome.follower_value != cell.inspectee) {
          ok = false;
          detail = "follower value differs from w at " + describe(state);
        }
      } catch (const leadership::CommitmentError& e) {
        // Stages whose stake is a zero reward legitimately lose the strict
        // circular structure; a leftbetter violation is always a failure.
        if (e.violated() == "leftbetter") {
          ok = false;
          detail = e.what();
        }
      }
      if (!ok) break;
    }
    results.push_back(ok ? pass("leadership_commitment_stages")
                         : fail("leadership_commitment_stages", detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& [state, entry] : twin_table.states) {
      auto it = solution.values.find(state);
      if (it == solution.values.end()) continue;
      if (it->second.inspectee != entry.inspectee_value) {
        ok = false;
        detail = "leadership w differs from simultaneous w at " + describe(state);
        break;
      }
    }
    results.push_back(ok ? pass("leadership_follower_value_unchanged")
                         : fail("leadership_follower_value_unchanged", detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& [key, p] : solution.committed_schedule) {
      const auto [n, m] = key;
      if (!(m > 0 && m < n)) continue;
      const auto witness = leadership::check_legal_preference(n, m, *spec.a, spec.b);
      if (!witness.holds) {
        ok = false;
        detail = "p_hat <= p* at (" + std::to_string(n) + "," + std::to_string(m) + ")";
        break;
      }
    }
    results.push_back(ok ? pass("leadership_legal_preference")
                         : fail("leadership_legal_preference", detail));
  }

  {
    const oracle::BehaviorStrategy path = profiles::leadership_profile(spec);
    const PayoffCell under = oracle::profile_value(spec, path);
    const Rational br = oracle::best_response_value(spec, path, oracle::Player::kInspectee,
                                                    oracle::InfoMode::kUninformedInspector);
    const Rational regret = br - under.inspectee;
    const Rational w = solution.values.at(spec.root()).inspectee;
    bool ok = regret == 0 && under.inspectee == w;
    results.push_back(ok ? pass("leadership_follower_regret_zero")
                         : fail("leadership_follower_regret_zero",
                                "follower regret " + to_string(regret) + ", path value " +
                                    to_string(under.inspectee) + " vs w " + to_string(w)));
  }

  return results;
}

}  // namespace

std::vector<CheckResult> verify_spec(const GameSpec& spec) {
  validate(spec);
  if (spec.variant == Variant::kLeadership) return verify_leadership(spec);
  return verify_simultaneous(spec);
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& result : results) {
    if (!result.pass) return false;
  }
  return true;
}

}  // namespace inspectgame::verify
