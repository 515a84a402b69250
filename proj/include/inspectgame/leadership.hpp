#pragma once

#include <unordered_map>
#include <vector>

#include "inspectgame/closed_form.hpp"
#include "inspectgame/game_model.hpp"

namespace inspectgame::leadership {

using closed_form::Schedule;

/// The follower's subgame-perfect reply to a committed row probability:
/// violate (q = 1) below the threshold, act legally at or above it. At
/// exactly p = p_star the follower is indifferent; SPNE picks the reply that
/// favors the leader, hence q = 0 there.
struct ThresholdResponse {
  Rational p_star;
  Rational respond(const Rational& committed_p) const {
    return committed_p < p_star ? Rational(1) : Rational(0);
  }
};

struct LeadershipOutcome {
  Rational p_star;
  Rational leader_value;    // L = p* A + (1-p*) C
  Rational nash_value;      // N, the simultaneous mixed-equilibrium payoff
  Rational follower_value;  // p* a' + (1-p*) c', same as simultaneous
  ThresholdResponse follower_response;
};

class CommitmentError : public std::runtime_error {
 public:
  CommitmentError(StateKey state, std::string violated, const std::string& message)
      : std::runtime_error(message), state_(state), violated_(std::move(violated)) {}
  const StateKey& state() const { return state_; }
  const std::string& violated() const { return violated_; }

 private:
  StateKey state_;
  std::string violated_;
};

/// Generic 2x2 commitment solve for a stage with the circular structure
/// A<C, B>D, a'>b', c'<d' where the row player (inspector) leads. Throws
/// CommitmentError when an inequality fails, with violated() == "leftbetter"
/// when the leader would prefer the violation branch, i.e. parameters where
/// committing to the equalizer no longer favors legal action.
LeadershipOutcome commit_2x2(const StageGame& stage);

struct LeadershipSolution {
  GameSpec spec;
  /// Per-state (u, w) with u = -w = -t/s.
  std::unordered_map<StateKey, PayoffCell, StateKeyHash> values;
  Schedule committed_schedule;
  /// s_hat(n, m)/s(n, m) at the root: u = gain_factor * v against the
  /// simultaneous game, strictly inside (0, 1) for interior roots.
  Rational gain_factor;
};

/// Full leadership game: the inspector publicly commits to the simultaneous
/// game's schedule, the inspectee acts legally while inspections remain and
/// violates every remaining period once they run out. Verifies at every
/// interior state that legal action beats violation for the leader, which
/// reduces to b*r + c(r) > 0.
LeadershipSolution solve_leadership(const GameSpec& spec);

struct LegalPreferenceWitness {
  Rational p_hat;   // s_hat(n-1, m-1)/s_hat(n, m), the leader's own equalizer
  Rational p_star;  // s(n-1, m-1)/s(n, m), the commitment probability
  bool holds;       // p_hat > p_star; always true in range, so false flags a bug
};

/// Exact check of the leader's strict preference for the legal branch at the
/// committed probability: p_hat > p_star for 0 < m < n, 0 < a < 1, b >= 0.
LegalPreferenceWitness check_legal_preference(unsigned n, unsigned m, const Rational& a,
                                              const Rational& b);

}  // namespace inspectgame::leadership
