#include "inspectgame/profiles.hpp"

#include <deque>
#include <set>

namespace inspectgame::profiles {

namespace {

std::set<StateKey> reachable_states(const GameSpec& spec) {
  std::set<StateKey> seen{spec.root()};
  std::deque<StateKey> queue{spec.root()};
  while (!queue.empty()) {
    const StateKey s = queue.front();
    queue.pop_front();
    if (!is_interior(s)) continue;
    for (const StateKey child : {StateKey{s.n - 1, s.m - 1, s.k}, StateKey{s.n - 1, s.m, s.k},
                                 StateKey{s.n - 1, s.m, s.k - 1}}) {
      if (seen.insert(child).second) queue.push_back(child);
    }
  }
  return seen;
}

}  // namespace

oracle::BehaviorStrategy equilibrium_profile(const GameSpec& spec, closed_form::Validate mode) {
  closed_form::Solver solver(spec, mode);
  oracle::BehaviorStrategy profile;
  profile.inspector = solver.schedule();
  for (const StateKey& state : reachable_states(spec)) {
    if (is_interior(state)) profile.inspectee[state] = solver.solve(state).q;
  }
  return profile;
}

oracle::BehaviorStrategy leadership_profile(const GameSpec& spec) {
  closed_form::Solver solver(spec);
  oracle::BehaviorStrategy profile;
  profile.inspector = solver.schedule();
  for (const StateKey& state : reachable_states(spec)) {
    if (is_interior(state)) profile.inspectee[state] = Rational(0);
  }
  return profile;
}

oracle::BehaviorStrategy perturb_schedule(const oracle::BehaviorStrategy& profile, unsigned n,
                                          unsigned m, const Rational& delta) {
  oracle::BehaviorStrategy out = profile;
  auto it = out.inspector.find({n, m});
  if (it == out.inspector.end()) {
    throw std::out_of_range("no schedule entry to perturb at this (n, m)");
  }
  Rational shifted = it->second + delta;
  if (shifted < 0) shifted = 0;
  if (shifted > 1) shifted = 1;
  it->second = std::move(shifted);
  return out;
}

}  // namespace inspectgame::profiles
