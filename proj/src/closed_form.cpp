#include "inspectgame/closed_form.hpp"

#include <stdexcept>

namespace inspectgame::closed_form {

Solver::Solver(GameSpec spec, Validate mode)
    : spec_(std::move(spec)), s_(spec_.b) {
  if (mode == Validate::kStrict) validate(spec_);
  if (spec_.a) s_hat_ = std::make_unique<kernel::PascalSum>(Rational(-*spec_.a));
}

std::span<const Rational> Solver::rewards_from(const StateKey& state) const {
  if (state.k > spec_.k) throw std::out_of_range("state counts more violations than the spec");
  return std::span<const Rational>(spec_.rewards).subspan(spec_.k - state.k, state.k);
}

Rational Solver::t_at(const StateKey& state) const {
  return kernel::t_value(state.n, static_cast<long>(state.m), rewards_from(state));
}

Rational Solver::value_zero_sum(const StateKey& state) const {
  const Rational t = t_at(state);
  if (t == 0) return Rational(0);
  return -t / s_(state.n, static_cast<long>(state.m));
}

std::pair<Rational, Rational> Solver::payoff_pair(const StateKey& state) const {
  const Rational t = t_at(state);
  if (t == 0) return {Rational(0), Rational(0)};
  const Rational w = t / s_(state.n, static_cast<long>(state.m));
  switch (spec_.variant) {
    case Variant::kZeroSum:
      return {-w, w};
    case Variant::kNonZeroSum:
      return {-t / (*s_hat_)(state.n, static_cast<long>(state.m)), w};
    case Variant::kLeadership:
      // Commitment payoffs: u = -w.
      return {-w, w};
  }
  throw std::logic_error("unknown variant");
}

Rational Solver::inspect_prob(unsigned n, long m) const {
  return kernel::canonical_inspect_prob(n, m, s_);
}

bool Solver::degenerate_at(const StateKey& state) const {
  if (!is_interior(state)) return false;
  return t_at(StateKey{state.n - 1, state.m - 1, state.k}) == 0;
}

PayoffCell Solver::cell(const StateKey& state) const {
  auto [v, w] = payoff_pair(state);
  return PayoffCell{std::move(v), std::move(w)};
}

Rational Solver::violate_prob(const StateKey& state) const {
  if (!is_interior(state)) {
    throw std::domain_error("violate_prob requires an interior state (n > m > 0, k > 0)");
  }
  if (degenerate_at(state)) return Rational(0);
  if (spec_.variant == Variant::kLeadership) return Rational(0);  // legal on the SPNE path
  // Inspector's stage entries; q equalizes his payoffs across rows.
  const Rational a_entry = cell(StateKey{state.n - 1, state.m - 1, state.k}).inspector;
  const Rational c_entry = cell(StateKey{state.n - 1, state.m, state.k}).inspector;
  const Rational b_entry = caught_payoffs(state, spec_).inspector;
  const Rational d_entry =
      cell(StateKey{state.n - 1, state.m, state.k - 1}).inspector - reward_at(state, spec_);
  const Rational den = c_entry - a_entry + b_entry - d_entry;
  if (den == 0) throw std::domain_error("stage game has no interior equalizer for q");
  return (c_entry - a_entry) / den;
}

StateSolution Solver::solve(const StateKey& state) const {
  StateSolution out;
  out.state = state;
  auto [v, w] = payoff_pair(state);
  out.inspector_value = std::move(v);
  out.inspectee_value = std::move(w);
  out.p = inspect_prob(state.n, static_cast<long>(state.m));
  if (is_interior(state)) {
    out.degenerate = degenerate_at(state);
    out.q = out.degenerate ? Rational(0) : violate_prob(state);
  } else {
    // Base-state convention: with no inspections left the inspectee violates
    // every remaining period; elsewhere he acts legally.
    out.q = (state.m == 0 && state.k > 0 && state.n > 0) ? Rational(1) : Rational(0);
  }
  return out;
}

Schedule Solver::schedule() const {
  Schedule plan;
  for (unsigned n_left = spec_.n; n_left >= 1; --n_left) {
    const unsigned elapsed = spec_.n - n_left;
    const unsigned low = spec_.m > elapsed ? spec_.m - elapsed : 0;
    for (unsigned m_left = low; m_left <= spec_.m; ++m_left) {
      plan[{n_left, m_left}] = inspect_prob(n_left, static_cast<long>(m_left));
    }
  }
  return plan;
}

Rational value_zero_sum(const StateKey& state, const GameSpec& spec) {
  return Solver(spec).value_zero_sum(state);
}

Rational inspect_prob(unsigned n, long m, const GameSpec& spec) {
  return Solver(spec).inspect_prob(n, m);
}

Rational violate_prob(const StateKey& state, const GameSpec& spec) {
  return Solver(spec).violate_prob(state);
}

std::pair<Rational, Rational> nonzero_payoffs(const StateKey& state, const GameSpec& spec) {
  return Solver(spec).payoff_pair(state);
}

Schedule schedule(const GameSpec& spec) { return Solver(spec).schedule(); }

}  // namespace inspectgame::closed_form
