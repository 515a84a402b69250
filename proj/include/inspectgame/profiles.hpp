#pragma once

#include "inspectgame/closed_form.hpp"
#include "inspectgame/oracle.hpp"

namespace inspectgame::profiles {

/// The completely mixed equilibrium profile of the simultaneous game:
/// the k-free schedule plus the per-state violation probabilities.
oracle::BehaviorStrategy equilibrium_profile(const GameSpec& spec,
                                             closed_form::Validate mode = closed_form::Validate::kStrict);

/// The leadership path: the committed schedule, with the inspectee acting
/// legally at every interior state (base cases force his play elsewhere).
oracle::BehaviorStrategy leadership_profile(const GameSpec& spec);

/// Copy of the profile with the inspection probability at one (n', m')
/// shifted by delta, clamped into [0, 1].
oracle::BehaviorStrategy perturb_schedule(const oracle::BehaviorStrategy& profile, unsigned n,
                                          unsigned m, const Rational& delta);

}  // namespace inspectgame::profiles
