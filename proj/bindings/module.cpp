// Python bindings. The heavy types stay in C++; the surface speaks JSON
// strings (same documents the CLI reads and writes) plus a few scalar kernel
// helpers, and the inspectgame package wraps this into dict/Fraction form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "inspectgame/json_io.hpp"
#include "inspectgame/profiles.hpp"
#include "inspectgame/verify.hpp"

namespace py = pybind11;

namespace {

using namespace inspectgame;
using json_io::json;

GameSpec spec_from_text(const std::string& text) {
  GameSpec spec = json_io::spec_from_json(json::parse(text));
  validate(spec);
  return spec;
}

std::string solve_json(const std::string& spec_text, bool full_table) {
  const GameSpec spec = spec_from_text(spec_text);
  json out;
  out["spec"] = json_io::spec_to_json(spec);
  if (spec.variant == Variant::kLeadership) {
    const auto solution = leadership::solve_leadership(spec);
    out = json_io::leadership_to_json(solution);
    if (!full_table) out.erase("values");
    const PayoffCell& root = solution.values.at(spec.root());
    out["root"] = json{{"state", json_io::state_to_json(spec.root())},
                       {"u", json_io::rational_to_json(root.inspector)},
                       {"w", json_io::rational_to_json(root.inspectee)}};
    return out.dump();
  }
  const closed_form::Solver solver(spec);
  out["root"] = json_io::solution_to_json(solver.root());
  if (full_table) {
    const auto table = oracle::solve_recursive(spec);
    json states = json::array();
    for (const StateKey& key : table.sorted_keys()) {
      states.push_back(json_io::solution_to_json(solver.solve(key)));
    }
    out["table"] = std::move(states);
  }
  return out.dump();
}

std::string schedule_json(const std::string& spec_text) {
  const GameSpec spec = spec_from_text(spec_text);
  return json_io::schedule_to_json(closed_form::schedule(spec)).dump();
}

std::string oracle_table_json(const std::string& spec_text) {
  return json_io::table_to_json(oracle::solve_recursive(spec_from_text(spec_text))).dump();
}

std::string leadership_json(const std::string& spec_text) {
  return json_io::leadership_to_json(leadership::solve_leadership(spec_from_text(spec_text)))
      .dump();
}

std::string verify_json(const std::string& spec_text) {
  const auto results = verify::verify_spec(spec_from_text(spec_text));
  json checks = json::array();
  for (const auto& result : results) {
    json row{{"name", result.name}, {"pass", result.pass}};
    if (!result.detail.empty()) row["detail"] = result.detail;
    checks.push_back(std::move(row));
  }
  return json{{"checks", std::move(checks)}, {"all_pass", verify::all_passed(results)}}.dump();
}

std::string simulate_json(const std::string& spec_text, std::uint64_t trials, std::uint64_t seed,
                          const std::string& info_mode, const std::string& profile_name) {
  const GameSpec spec = spec_from_text(spec_text);
  oracle::BehaviorStrategy profile;
  if (profile_name == "leadership" ||
      (profile_name.empty() && spec.variant == Variant::kLeadership)) {
    profile = profiles::leadership_profile(spec);
  } else {
    profile = profiles::equilibrium_profile(spec);
  }
  const PayoffCell target = oracle::profile_value(spec, profile);
  const auto report =
      sim::simulate(spec, profile, trials, seed, oracle::info_mode_from_name(info_mode), target);
  return json_io::report_to_json(report).dump();
}

std::string exploitability_json(const std::string& spec_text, const std::string& info_mode) {
  const GameSpec spec = spec_from_text(spec_text);
  const auto profile = spec.variant == Variant::kLeadership ? profiles::leadership_profile(spec)
                                                            : profiles::equilibrium_profile(spec);
  const auto [inspector_regret, inspectee_regret] =
      sim::exploitability_report(spec, profile, oracle::info_mode_from_name(info_mode));
  return json{{"inspector_regret", json_io::rational_to_json(inspector_regret)},
              {"inspectee_regret", json_io::rational_to_json(inspectee_regret)}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_inspectgame, m) {
  m.doc() = "exact sequential inspection game solver (JSON-speaking core)";

  m.def("solve_json", &solve_json, py::arg("spec_json"), py::arg("full_table") = false,
        "Root solution (and optionally the whole table) as a JSON string.");
  m.def("schedule_json", &schedule_json, py::arg("spec_json"),
        "The k-free inspection schedule as a JSON string.");
  m.def("oracle_table_json", &oracle_table_json, py::arg("spec_json"),
        "Recursive-oracle solution table as a JSON string.");
  m.def("leadership_json", &leadership_json, py::arg("spec_json"));
  m.def("verify_json", &verify_json, py::arg("spec_json"),
        "Exact closed-form/oracle/exploitability cross-check bundle.");
  m.def("simulate_json", &simulate_json, py::arg("spec_json"), py::arg("trials"), py::arg("seed"),
        py::arg("info_mode") = "informed", py::arg("profile") = "",
        py::call_guard<py::gil_scoped_release>());
  m.def("exploitability_json", &exploitability_json, py::arg("spec_json"),
        py::arg("info_mode") = "informed");

  m.def(
      "binom",
      [](unsigned long n, long k) { return kernel::binom(n, k).get_str(); },
      py::arg("n"), py::arg("k"), "C(n, k) as a decimal string; 0 outside 0 <= k <= n.");
  m.def(
      "s_beta",
      [](unsigned long n, long mm, const std::string& beta) {
        return to_string(kernel::s_beta(n, mm, parse_rational(beta)));
      },
      py::arg("n"), py::arg("m"), py::arg("beta"),
      "Generalized Pascal sum as an exact rational string.");
  m.def(
      "t_value",
      [](unsigned long n, long mm, const std::vector<std::string>& rewards) {
        std::vector<Rational> parsed;
        parsed.reserve(rewards.size());
        for (const auto& r : rewards) parsed.push_back(parse_rational(r));
        return to_string(kernel::t_value(n, mm, parsed));
      },
      py::arg("n"), py::arg("m"), py::arg("rewards"),
      "Reward-weighted binomial sum, rewards first-violation-first.");
}
