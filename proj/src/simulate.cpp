#include "inspectgame/simulate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace inspectgame::sim {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
    : state_(master_seed + (trial_index + 1) * kGamma) {}

std::uint64_t TrialRng::next() {
  state_ += kGamma;
  return mix(state_);
}

std::uint64_t TrialRng::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    const std::uint64_t draw = next();
    if (draw < limit) return draw % bound;
  }
}

Integer TrialRng::below_big(const Integer& bound) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> raw(words);
  for (;;) {
    for (auto& word : raw) word = next();
    // Mask the top word down to the needed bit count.
    const std::size_t excess = words * 64 - bits;
    raw.back() >>= excess;
    Integer draw;
    mpz_import(draw.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, raw.data());
    if (draw < bound) return draw;
  }
}

bool TrialRng::bernoulli(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  const Integer& num = p.get_num();
  const Integer& den = p.get_den();
  if (den.fits_ulong_p() && sizeof(unsigned long) == 8) {
    return below(den.get_ui()) < num.get_ui();
  }
  return below_big(den) < num;
}

namespace {

struct TrialAccumulator {
  std::uint64_t trials = 0;
  Rational inspector_sum;
  Rational inspectee_sum;
  Rational inspector_sq_sum;
  Rational inspectee_sq_sum;
  std::vector<std::uint64_t> caught_at_period;
  std::map<unsigned, std::uint64_t> violations_achieved;

  void merge(const TrialAccumulator& other) {
    trials += other.trials;
    inspector_sum += other.inspector_sum;
    inspectee_sum += other.inspectee_sum;
    inspector_sq_sum += other.inspector_sq_sum;
    inspectee_sq_sum += other.inspectee_sq_sum;
    for (std::size_t i = 0; i < caught_at_period.size(); ++i) {
      caught_at_period[i] += other.caught_at_period[i];
    }
    for (const auto& [count, hits] : other.violations_achieved) {
      violations_achieved[count] += hits;
    }
  }
};

class TrialRunner {
 public:
  TrialRunner(const GameSpec& spec, const BehaviorStrategy& profile)
      : spec_(spec), profile_(profile) {}

  void play(TrialRng& rng, TrialAccumulator& acc) const {
    StateKey state = spec_.root();
    PayoffCell payoff{Rational(0), Rational(0)};
    unsigned violations = 0;
    unsigned caught_period = 0;  // 0 = never caught

    while (is_interior(state)) {
      const unsigned period = spec_.n - state.n + 1;
      const bool inspects = rng.bernoulli(profile_.inspector.at({state.n, state.m}));
      const bool violates = rng.bernoulli(profile_.inspectee.at(state));
      if (inspects && violates) {
        const PayoffCell caught = caught_payoffs(state, spec_);
        payoff.inspector += caught.inspector;
        payoff.inspectee += caught.inspectee;
        caught_period = period;
        break;
      }
      if (violates) {
        const Rational& r = reward_at(state, spec_);
        payoff.inspector -= r;
        payoff.inspectee += r;
        ++violations;
        state = StateKey{state.n - 1, state.m, state.k - 1};
      } else {
        state = StateKey{state.n - 1, inspects ? state.m - 1 : state.m, state.k};
      }
    }
    if (caught_period == 0 && !is_interior(state)) {
      const PayoffCell base = base_values(state, spec_);
      payoff.inspector += base.inspector;
      payoff.inspectee += base.inspectee;
      if (state.m == 0 && state.n > 0) violations += std::min(state.k, state.n);
    }

    acc.trials += 1;
    acc.inspector_sum += payoff.inspector;
    acc.inspectee_sum += payoff.inspectee;
    acc.inspector_sq_sum += payoff.inspector * payoff.inspector;
    acc.inspectee_sq_sum += payoff.inspectee * payoff.inspectee;
    acc.caught_at_period[caught_period] += 1;
    acc.violations_achieved[violations] += 1;
  }

 private:
  const GameSpec& spec_;
  const BehaviorStrategy& profile_;
};

double stderr_from_sums(const Rational& sum, const Rational& sq_sum, std::uint64_t trials) {
  if (trials < 2) return 0.0;
  const Rational mean = sum / Rational(static_cast<unsigned long>(trials));
  const Rational variance_num = sq_sum - Rational(static_cast<unsigned long>(trials)) * mean * mean;
  const Rational sample_var = variance_num / Rational(static_cast<unsigned long>(trials - 1));
  const double var = to_double(sample_var);
  if (var <= 0.0) return 0.0;
  return std::sqrt(var / static_cast<double>(trials));
}

double z_score(const Rational& exact_mean, const Rational& target, double stderr_value) {
  const Rational diff = exact_mean - target;
  if (stderr_value == 0.0) {
    return diff == 0 ? 0.0 : std::numeric_limits<double>::max();
  }
  return to_double(diff) / stderr_value;
}

}  // namespace

SimulationReport simulate(const GameSpec& spec, const BehaviorStrategy& profile,
                          std::uint64_t trials, std::uint64_t seed, InfoMode info_mode,
                          const PayoffCell& theoretical) {
  if (trials == 0) throw std::invalid_argument("simulate requires at least one trial");
  // Coverage check up front; play then reads the maps without re-checking.
  // Uninformed mode imposes nothing extra: the schedule type is (n,m)-keyed
  // already, which is exactly the uninformed information constraint.
  oracle::profile_value(spec, profile);

  const TrialRunner runner(spec, profile);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(trials, std::min(hw, 16u)));

  std::vector<TrialAccumulator> parts(workers);
  for (auto& part : parts) part.caught_at_period.assign(spec.n + 1, 0);

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      TrialAccumulator& acc = parts[w];
      for (std::uint64_t i = w; i < trials; i += workers) {
        TrialRng rng(seed, i);
        runner.play(rng, acc);
      }
    });
  }
  for (auto& t : pool) t.join();

  TrialAccumulator total;
  total.caught_at_period.assign(spec.n + 1, 0);
  for (const auto& part : parts) total.merge(part);

  SimulationReport report;
  report.trials = trials;
  report.seed = seed;
  report.info_mode = info_mode;
  const Rational trial_count(static_cast<unsigned long>(trials));
  report.inspector_mean_exact = total.inspector_sum / trial_count;
  report.inspectee_mean_exact = total.inspectee_sum / trial_count;
  report.inspector_mean = to_double(report.inspector_mean_exact);
  report.inspectee_mean = to_double(report.inspectee_mean_exact);
  report.inspector_stderr = stderr_from_sums(total.inspector_sum, total.inspector_sq_sum, trials);
  report.inspectee_stderr = stderr_from_sums(total.inspectee_sum, total.inspectee_sq_sum, trials);
  report.theoretical_inspector = theoretical.inspector;
  report.theoretical_inspectee = theoretical.inspectee;
  report.inspector_z =
      z_score(report.inspector_mean_exact, report.theoretical_inspector, report.inspector_stderr);
  report.inspectee_z =
      z_score(report.inspectee_mean_exact, report.theoretical_inspectee, report.inspectee_stderr);
  report.caught_at_period = std::move(total.caught_at_period);
  report.violations_achieved = std::move(total.violations_achieved);
  return report;
}

std::pair<Rational, Rational> exploitability_report(const GameSpec& spec,
                                                    const BehaviorStrategy& profile,
                                                    InfoMode info_mode) {
  const PayoffCell under_profile = oracle::profile_value(spec, profile);
  const Rational inspector_br =
      oracle::best_response_value(spec, profile, oracle::Player::kInspector, info_mode);
  const Rational inspectee_br =
      oracle::best_response_value(spec, profile, oracle::Player::kInspectee, info_mode);
  return {inspector_br - under_profile.inspector, inspectee_br - under_profile.inspectee};
}

}  // namespace inspectgame::sim
