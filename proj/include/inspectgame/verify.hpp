#pragma once

#include <string>
#include <vector>

#include "inspectgame/game_model.hpp"

namespace inspectgame::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass, first counterexample on failure
};

/// Runs the exact cross-validation bundle for one spec:
///   - closed-form values/strategies equal the recursive oracle at every state
///   - indifference equations hold at interior non-degenerate states
///   - p and q stay in [0, 1], strictly interior where required
///   - schedules are identical across k (inspection strategy never reads k)
///   - both players' regrets against the equilibrium profile are zero, in
///     informed and uninformed-inspector modes
///   - state count stays within (n+1)(m+1)(k+1)
/// Leadership specs additionally check u = -w, the gain factor against the
/// simultaneous game, per-stage commitment (p* matches the schedule, L > N),
/// the follower's unchanged value, and the leader's legal-branch preference.
std::vector<CheckResult> verify_spec(const GameSpec& spec);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace inspectgame::verify
