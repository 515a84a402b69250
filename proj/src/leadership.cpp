#include "inspectgame/leadership.hpp"

#include <sstream>
#include <stdexcept>

#include "inspectgame/kernel.hpp"

namespace inspectgame::leadership {

namespace {

std::string describe(const StateKey& s) {
  std::ostringstream out;
  out << "(" << s.n << "," << s.m << "," << s.k << ")";
  return out.str();
}

}  // namespace

LeadershipOutcome commit_2x2(const StageGame& stage) {
  const Rational& A = stage.inspect_legal.inspector;
  const Rational& B = stage.inspect_violate.inspector;
  const Rational& C = stage.no_inspect_legal.inspector;
  const Rational& D = stage.no_inspect_violate.inspector;
  const Rational& ae = stage.inspect_legal.inspectee;
  const Rational& be = stage.inspect_violate.inspectee;
  const Rational& ce = stage.no_inspect_legal.inspectee;
  const Rational& de = stage.no_inspect_violate.inspectee;

  const char* violated = nullptr;
  if (!(A < C)) violated = "A<C";
  else if (!(B > D)) violated = "B>D";
  else if (!(ae > be)) violated = "a'>b'";
  else if (!(ce < de)) violated = "c'<d'";
  if (violated != nullptr) {
    throw CommitmentError(stage.state, violated,
                          "commitment stage at " + describe(stage.state) +
                              " lacks the circular structure: " + violated + " fails");
  }

  LeadershipOutcome out;
  out.p_star = (de - ce) / (ae - be + de - ce);
  out.leader_value = out.p_star * A + (1 - out.p_star) * C;
  const Rational right_branch = out.p_star * B + (1 - out.p_star) * D;
  if (!(out.leader_value > right_branch)) {
    throw CommitmentError(stage.state, "leftbetter",
                          "leader prefers violation branch at " + describe(stage.state));
  }
  out.nash_value = (B * C - A * D) / (B - D + C - A);
  out.follower_value = out.p_star * ae + (1 - out.p_star) * ce;
  out.follower_response = ThresholdResponse{out.p_star};
  return out;
}

LeadershipSolution solve_leadership(const GameSpec& spec) {
  if (spec.variant != Variant::kLeadership) {
    throw std::invalid_argument("solve_leadership requires a leadership-variant spec");
  }
  validate(spec);

  closed_form::Solver solver(spec);
  LeadershipSolution out;
  out.spec = spec;
  out.committed_schedule = solver.schedule();

  kernel::PascalSum s(spec.b);
  kernel::PascalSum s_hat(Rational(-*spec.a));
  out.gain_factor = s_hat(spec.n, static_cast<long>(spec.m)) / s(spec.n, static_cast<long>(spec.m));

  // Walk every state reachable from the root; u = -w = -t/s throughout, and
  // the leader's legal-action preference must hold at each interior state.
  for (unsigned n_left = spec.n;; --n_left) {
    const unsigned elapsed = spec.n - n_left;
    const unsigned m_low = spec.m > elapsed ? spec.m - elapsed : 0;
    const unsigned k_low = spec.k > elapsed ? spec.k - elapsed : 0;
    for (unsigned m_left = m_low; m_left <= spec.m; ++m_left) {
      for (unsigned k_left = k_low; k_left <= spec.k; ++k_left) {
        if ((spec.m - m_left) + (spec.k - k_left) > elapsed) continue;  // not reachable
        const StateKey state{n_left, m_left, k_left};
        auto [u, w] = solver.payoff_pair(state);
        if (u != -w) throw std::logic_error("leadership payoffs must satisfy u = -w");
        if (is_interior(state)) {
          // legalbetter reduces to b*r + c(r) > 0 under the committed p.
          const Rational& r = reward_at(state, spec);
          if (!(spec.b * r + caught_cost_at(state, spec) > 0)) {
            throw CommitmentError(state, "leftbetter",
                                  "leader prefers violation branch at " + describe(state));
          }
        }
        out.values.emplace(state, PayoffCell{std::move(u), std::move(w)});
      }
    }
    if (n_left == 0) break;
  }
  return out;
}

LegalPreferenceWitness check_legal_preference(unsigned n, unsigned m, const Rational& a,
                                              const Rational& b) {
  if (!(m > 0 && m < n)) throw std::domain_error("check_legal_preference requires 0 < m < n");
  if (!(a > 0 && a < 1)) throw std::domain_error("check_legal_preference requires 0 < a < 1");
  if (!(b >= 0)) throw std::domain_error("check_legal_preference requires b >= 0");
  kernel::PascalSum s(b);
  kernel::PascalSum s_hat(Rational(-a));
  LegalPreferenceWitness witness;
  witness.p_hat = s_hat(n - 1, static_cast<long>(m) - 1) / s_hat(n, static_cast<long>(m));
  witness.p_star = s(n - 1, static_cast<long>(m) - 1) / s(n, static_cast<long>(m));
  witness.holds = witness.p_hat > witness.p_star;
  return witness;
}

}  // namespace inspectgame::leadership
