#include "inspectgame/json_io.hpp"

#include <algorithm>
#include <cmath>

namespace inspectgame::json_io {

json rational_to_json(const Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) {
      throw std::invalid_argument("rational object needs \"num\" and \"den\"");
    }
    return make_rational(Integer(j.at("num").get<std::string>()),
                         Integer(j.at("den").get<std::string>()));
  }
  if (j.is_number_integer()) {
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_number_float()) {
    const double value = j.get<double>();
    if (std::nearbyint(value) != value) {
      throw std::invalid_argument(
          "non-integral JSON number for a rational; use \"a/b\" or {num, den}");
    }
    return Rational(static_cast<long>(value));
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  throw std::invalid_argument("cannot read a rational from this JSON value");
}

json spec_to_json(const GameSpec& spec) {
  json out{
      {"variant", variant_name(spec.variant)},
      {"n", spec.n},
      {"m", spec.m},
      {"k", spec.k},
      {"b", rational_to_json(spec.b)},
  };
  if (spec.a) out["a"] = rational_to_json(*spec.a);
  // First violation first: rewards[0] is the reward for the first violation.
  json rewards = json::array();
  for (const Rational& r : spec.rewards) rewards.push_back(rational_to_json(r));
  out["rewards"] = std::move(rewards);
  if (spec.caught_costs) {
    json costs = json::array();
    for (const Rational& c : *spec.caught_costs) costs.push_back(rational_to_json(c));
    out["caught_costs"] = std::move(costs);
  }
  return out;
}

GameSpec spec_from_json(const json& j) {
  GameSpec spec;
  spec.variant = j.contains("variant") ? variant_from_name(j.at("variant").get<std::string>())
                                       : Variant::kZeroSum;
  spec.n = j.at("n").get<unsigned>();
  spec.m = j.at("m").get<unsigned>();
  spec.k = j.at("k").get<unsigned>();
  spec.b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
  if (j.contains("a") && !j.at("a").is_null()) spec.a = rational_from_json(j.at("a"));
  if (j.contains("rewards")) {
    for (const json& r : j.at("rewards")) spec.rewards.push_back(rational_from_json(r));
  }
  if (j.contains("caught_costs") && !j.at("caught_costs").is_null()) {
    std::vector<Rational> costs;
    for (const json& c : j.at("caught_costs")) costs.push_back(rational_from_json(c));
    spec.caught_costs = std::move(costs);
  }
  return spec;
}

json state_to_json(const StateKey& state) {
  return json{{"n", state.n}, {"m", state.m}, {"k", state.k}};
}

StateKey state_from_json(const json& j) {
  return StateKey{j.at("n").get<unsigned>(), j.at("m").get<unsigned>(), j.at("k").get<unsigned>()};
}

json solution_to_json(const closed_form::StateSolution& solution) {
  return json{
      {"state", state_to_json(solution.state)},
      {"inspector_value", rational_to_json(solution.inspector_value)},
      {"inspectee_value", rational_to_json(solution.inspectee_value)},
      {"p", rational_to_json(solution.p)},
      {"q", rational_to_json(solution.q)},
      {"degenerate", solution.degenerate},
  };
}

json table_to_json(const oracle::SolutionTable& table) {
  json states = json::array();
  for (const StateKey& key : table.sorted_keys()) {
    states.push_back(solution_to_json(table.at(key)));
  }
  return json{{"spec", spec_to_json(table.spec)}, {"states", std::move(states)}};
}

json schedule_to_json(const closed_form::Schedule& schedule) {
  json rows = json::array();
  for (const auto& [key, p] : schedule) {
    rows.push_back(json{{"n", key.first}, {"m", key.second}, {"p", rational_to_json(p)}});
  }
  return json{{"schedule", std::move(rows)}};
}

json leadership_to_json(const leadership::LeadershipSolution& solution) {
  json rows = json::array();
  std::vector<StateKey> keys;
  keys.reserve(solution.values.size());
  for (const auto& [key, unused] : solution.values) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (const StateKey& key : keys) {
    const PayoffCell& cell = solution.values.at(key);
    rows.push_back(json{{"state", state_to_json(key)},
                        {"u", rational_to_json(cell.inspector)},
                        {"w", rational_to_json(cell.inspectee)}});
  }
  return json{
      {"spec", spec_to_json(solution.spec)},
      {"values", std::move(rows)},
      {"committed_schedule", schedule_to_json(solution.committed_schedule)["schedule"]},
      {"gain_factor", rational_to_json(solution.gain_factor)},
  };
}

json report_to_json(const sim::SimulationReport& report) {
  json caught = json::array();
  for (std::size_t period = 0; period < report.caught_at_period.size(); ++period) {
    caught.push_back(json{{"period", period}, {"count", report.caught_at_period[period]}});
  }
  json violations = json::array();
  for (const auto& [count, hits] : report.violations_achieved) {
    violations.push_back(json{{"violations", count}, {"count", hits}});
  }
  return json{
      {"trials", report.trials},
      {"seed", report.seed},
      {"info_mode", oracle::info_mode_name(report.info_mode)},
      {"inspector_mean_exact", rational_to_json(report.inspector_mean_exact)},
      {"inspectee_mean_exact", rational_to_json(report.inspectee_mean_exact)},
      {"inspector_mean", report.inspector_mean},
      {"inspectee_mean", report.inspectee_mean},
      {"inspector_stderr", report.inspector_stderr},
      {"inspectee_stderr", report.inspectee_stderr},
      {"theoretical_inspector", rational_to_json(report.theoretical_inspector)},
      {"theoretical_inspectee", rational_to_json(report.theoretical_inspectee)},
      {"inspector_z", report.inspector_z},
      {"inspectee_z", report.inspectee_z},
      {"caught_at_period", std::move(caught)},
      {"violations_achieved", std::move(violations)},
  };
}

}  // namespace inspectgame::json_io
