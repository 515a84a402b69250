#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "inspectgame/oracle.hpp"

namespace inspectgame::sim {

using oracle::BehaviorStrategy;
using oracle::InfoMode;

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  InfoMode info_mode = InfoMode::kInformed;

  // Exact accumulation; the floating-point summaries are derived from these
  // once at the end, so reports are bit-identical across re-runs and thread
  // counts.
  Rational inspector_mean_exact;
  Rational inspectee_mean_exact;
  double inspector_mean = 0.0;
  double inspectee_mean = 0.0;
  double inspector_stderr = 0.0;
  double inspectee_stderr = 0.0;

  Rational theoretical_inspector;
  Rational theoretical_inspectee;
  double inspector_z = 0.0;
  double inspectee_z = 0.0;

  /// caught_at_period[0] counts trials with no caught violation;
  /// caught_at_period[j] counts trials caught in period j (1-based).
  std::vector<std::uint64_t> caught_at_period;
  /// successful (uncaught) violations per trial -> trial count.
  std::map<unsigned, std::uint64_t> violations_achieved;
};

/// Plays the stage process under the fixed profile: one simultaneous draw
/// pair per period, termination on (inspect, violate), reward and penalty
/// accounting per the variant's tables, base cases resolved by their defined
/// values. Per-trial randomness comes from a counter-derived stream, so the
/// result depends only on (spec, profile, trials, seed, info_mode), not on
/// execution order or thread count. All probability draws are exact
/// (integer comparison against the rational's denominator); no floating
/// point touches the payoff path.
SimulationReport simulate(const GameSpec& spec, const BehaviorStrategy& profile,
                          std::uint64_t trials, std::uint64_t seed, InfoMode info_mode,
                          const PayoffCell& theoretical);

/// (inspector regret, inspectee regret): each player's exact best-response
/// value against the profile minus their value under it. Equilibrium
/// profiles return (0, 0).
std::pair<Rational, Rational> exploitability_report(const GameSpec& spec,
                                                    const BehaviorStrategy& profile,
                                                    InfoMode info_mode);

/// SplitMix64 stream; trial i of master seed s uses the stream started at
/// s + (i+1) * golden-gamma, giving independent, order-free per-trial
/// randomness.
class TrialRng {
 public:
  TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);
  std::uint64_t next();
  /// Exact Bernoulli(p) for rational p in [0, 1].
  bool bernoulli(const Rational& p);

 private:
  std::uint64_t below(std::uint64_t bound);        // uniform in [0, bound)
  Integer below_big(const Integer& bound);

  std::uint64_t state_;
};

}  // namespace inspectgame::sim
