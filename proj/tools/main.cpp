// inspectgame CLI: solve, schedule, leadership, simulate, verify, sweep.
// Specs are JSON documents (see README); all results go to stdout, errors to
// stderr as JSON with distinct exit codes.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "inspectgame/json_io.hpp"
#include "inspectgame/profiles.hpp"
#include "inspectgame/verify.hpp"

namespace {

using namespace inspectgame;
using json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitVerification = 4;

struct CliError : std::runtime_error {
  CliError(int code, const std::string& type, const std::string& message)
      : std::runtime_error(message), exit_code(code), type(type) {}
  int exit_code;
  std::string type;
};

std::string read_spec_text(const std::string& spec_path, const std::string& spec_inline) {
  if (spec_path.empty() == spec_inline.empty()) {
    throw CliError(kExitParse, "usage", "provide exactly one spec source: --spec or --spec-json");
  }
  if (!spec_inline.empty()) return spec_inline;
  if (spec_path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(spec_path);
  if (!in) throw CliError(kExitParse, "io", "cannot open spec file: " + spec_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GameSpec load_spec(const std::string& spec_path, const std::string& spec_inline) {
  const std::string text = read_spec_text(spec_path, spec_inline);
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError(kExitParse, "json_parse", e.what());
  }
  GameSpec spec;
  try {
    spec = json_io::spec_from_json(parsed);
  } catch (const std::exception& e) {
    throw CliError(kExitParse, "spec_format", e.what());
  }
  try {
    validate(spec);
  } catch (const ValidationError& e) {
    throw CliError(kExitValidation, spec_error_name(e.code()), e.what());
  }
  return spec;
}

std::string approx(const Rational& q) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", to_double(q));
  return buffer;
}

void emit(const json& document) { std::cout << document.dump(2) << "\n"; }

// -------------------------------------------------------------- solve

int run_solve(const GameSpec& spec, bool full_table) {
  json out;
  if (spec.variant == Variant::kLeadership) {
    const auto solution = leadership::solve_leadership(spec);
    out = json_io::leadership_to_json(solution);
    const PayoffCell& root = solution.values.at(spec.root());
    out["root"] = json{{"state", json_io::state_to_json(spec.root())},
                       {"u", json_io::rational_to_json(root.inspector)},
                       {"w", json_io::rational_to_json(root.inspectee)}};
    if (!full_table) out.erase("values");
    emit(out);
    return kExitOk;
  }
  const closed_form::Solver solver(spec);
  out["spec"] = json_io::spec_to_json(spec);
  out["root"] = json_io::solution_to_json(solver.root());
  if (full_table) {
    const auto table = oracle::solve_recursive(spec);
    json states = json::array();
    for (const StateKey& key : table.sorted_keys()) {
      states.push_back(json_io::solution_to_json(solver.solve(key)));
    }
    out["table"] = std::move(states);
  }
  emit(out);
  return kExitOk;
}

// -------------------------------------------------------------- schedule

int run_schedule(const GameSpec& spec, const std::string& format) {
  const auto plan = closed_form::schedule(spec);
  if (format == "csv") {
    std::cout << "n,m,p,p_approx\n";
    for (const auto& [key, p] : plan) {
      std::cout << key.first << "," << key.second << "," << to_string(p) << "," << approx(p)
                << "\n";
    }
    return kExitOk;
  }
  json out = json_io::schedule_to_json(plan);
  out["spec"] = json_io::spec_to_json(spec);
  emit(out);
  return kExitOk;
}

// -------------------------------------------------------------- leadership

int run_leadership(const GameSpec& spec) {
  if (spec.variant != Variant::kLeadership) {
    throw CliError(kExitValidation, "variant", "the leadership command needs variant=leadership");
  }
  emit(json_io::leadership_to_json(leadership::solve_leadership(spec)));
  return kExitOk;
}

// -------------------------------------------------------------- simulate

int run_simulate(const GameSpec& spec, std::uint64_t trials, std::uint64_t seed,
                 const std::string& info_mode, const std::string& profile_name,
                 const std::string& histogram_csv) {
  const oracle::InfoMode mode = oracle::info_mode_from_name(info_mode);
  oracle::BehaviorStrategy profile;
  if (profile_name == "leadership" || (profile_name.empty() && spec.variant == Variant::kLeadership)) {
    profile = profiles::leadership_profile(spec);
  } else {
    profile = profiles::equilibrium_profile(spec);
  }
  const PayoffCell target = oracle::profile_value(spec, profile);
  const auto report = sim::simulate(spec, profile, trials, seed, mode, target);
  emit(json_io::report_to_json(report));
  if (!histogram_csv.empty()) {
    std::ofstream csv(histogram_csv);
    if (!csv) throw CliError(kExitRuntime, "io", "cannot write " + histogram_csv);
    csv << "kind,key,count\n";
    for (std::size_t period = 0; period < report.caught_at_period.size(); ++period) {
      csv << "caught_at_period," << period << "," << report.caught_at_period[period] << "\n";
    }
    for (const auto& [count, hits] : report.violations_achieved) {
      csv << "violations_achieved," << count << "," << hits << "\n";
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------- verify

int run_verify(const GameSpec& spec) {
  const auto results = verify::verify_spec(spec);
  json checks = json::array();
  for (const auto& result : results) {
    json row{{"name", result.name}, {"pass", result.pass}};
    if (!result.detail.empty()) row["detail"] = result.detail;
    checks.push_back(std::move(row));
  }
  const bool ok = verify::all_passed(results);
  json out{{"spec", json_io::spec_to_json(spec)}, {"checks", std::move(checks)}, {"all_pass", ok}};
  if (spec.variant == Variant::kLeadership) {
    const auto solution = leadership::solve_leadership(spec);
    const PayoffCell& root = solution.values.at(spec.root());
    out["root"] = json{{"state", json_io::state_to_json(spec.root())},
                       {"u", json_io::rational_to_json(root.inspector)},
                       {"w", json_io::rational_to_json(root.inspectee)},
                       {"gain_factor", json_io::rational_to_json(solution.gain_factor)}};
  } else {
    out["root"] = json_io::solution_to_json(closed_form::Solver(spec).root());
  }
  emit(out);
  return ok ? kExitOk : kExitVerification;
}

// -------------------------------------------------------------- sweep

struct Range {
  unsigned low = 0;
  unsigned high = 0;     // used when symbol empty
  std::string symbol;    // "n" or "n-1" upper bound, resolved per n
};

Range parse_range(const std::string& text) {
  Range range;
  const auto dots = text.find("..");
  const std::string low = dots == std::string::npos ? text : text.substr(0, dots);
  const std::string high = dots == std::string::npos ? text : text.substr(dots + 2);
  try {
    range.low = static_cast<unsigned>(std::stoul(low));
  } catch (...) {
    throw CliError(kExitParse, "usage", "bad range start: " + text);
  }
  if (high == "n" || high == "n-1") {
    range.symbol = high;
  } else {
    try {
      range.high = static_cast<unsigned>(std::stoul(high));
    } catch (...) {
      throw CliError(kExitParse, "usage", "bad range end: " + text);
    }
    if (range.high < range.low) {
      throw CliError(kExitParse, "usage", "empty range: " + text);
    }
  }
  return range;
}

unsigned resolve_high(const Range& range, unsigned n) {
  if (range.symbol == "n") return n;
  if (range.symbol == "n-1") return n > 0 ? n - 1 : 0;
  return range.high;
}

int run_sweep(const GameSpec& base, const std::string& n_range, const std::string& m_range,
              const std::string& k_range, const std::string& b_list) {
  const Range nr = parse_range(n_range.empty() ? std::to_string(base.n) : n_range);
  const Range mr = parse_range(m_range.empty() ? std::to_string(base.m) : m_range);
  const Range kr = parse_range(k_range.empty() ? std::to_string(base.k) : k_range);
  std::vector<Rational> bs;
  if (b_list.empty()) {
    bs.push_back(base.b);
  } else {
    std::stringstream stream(b_list);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (!token.empty()) bs.push_back(parse_rational(token));
    }
  }
  if (bs.empty()) throw CliError(kExitParse, "usage", "empty b list");

  if (!nr.symbol.empty()) {
    throw CliError(kExitParse, "usage", "--n needs a numeric range");
  }

  // Sweeps use unit rewards (r_i = 1) unless the base spec's k matches the
  // grid point, in which case its reward vector is kept.
  std::cout << "n,m,k,b,variant,v,v_approx,w,w_approx,p,p_approx,q,q_approx,degenerate\n";
  for (unsigned n = nr.low; n <= nr.high; ++n) {
    for (unsigned m = mr.low; m <= resolve_high(mr, n); ++m) {
      for (unsigned k = kr.low; k <= resolve_high(kr, n); ++k) {
        for (const Rational& b : bs) {
          GameSpec spec = base;
          spec.n = n;
          spec.m = m;
          spec.k = k;
          spec.b = b;
          if (spec.k == base.k) {
            spec.rewards = base.rewards;
          } else {
            spec.rewards.assign(k, Rational(1));
            spec.caught_costs.reset();
          }
          try {
            validate(spec);
          } catch (const ValidationError& e) {
            throw CliError(kExitValidation, spec_error_name(e.code()), e.what());
          }
          const closed_form::Solver solver(spec);
          const auto solution = solver.root();
          std::cout << n << "," << m << "," << k << "," << to_string(b) << ","
                    << variant_name(spec.variant) << "," << to_string(solution.inspector_value)
                    << "," << approx(solution.inspector_value) << ","
                    << to_string(solution.inspectee_value) << ","
                    << approx(solution.inspectee_value) << "," << to_string(solution.p) << ","
                    << approx(solution.p) << "," << to_string(solution.q) << ","
                    << approx(solution.q) << "," << (solution.degenerate ? 1 : 0) << "\n";
        }
      }
    }
  }
  return kExitOk;
}

json error_json(const std::string& type, const std::string& message) {
  return json{{"error", json{{"type", type}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact solver and verifier for the sequential inspection game with n periods,\n"
      "m inspections and k intended violations (zero-sum, non-zero-sum and\n"
      "inspector-leadership variants). All solver arithmetic is exact rational.\n"
      "Env: INSPECTGAME_CACHE_LIMIT caps the per-table combinatorial cache (0 = unlimited)."};
  app.require_subcommand(1);

  std::string spec_path, spec_inline, format = "json";
  bool full_table = false;
  std::uint64_t trials = 1000000, seed = 1;
  std::string info_mode = "informed", profile_name, histogram_csv;
  std::string n_range, m_range, k_range, b_list;

  auto add_spec_options = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "spec JSON path, or - for stdin");
    cmd->add_option("--spec-json", spec_inline, "inline spec JSON");
  };

  CLI::App* solve = app.add_subcommand("solve", "equilibrium value and strategies at the root");
  add_spec_options(solve);
  solve->add_flag("--full-table", full_table, "emit every reachable state");

  CLI::App* schedule = app.add_subcommand("schedule", "k-free inspection schedule");
  add_spec_options(schedule);
  schedule->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* lead = app.add_subcommand("leadership", "inspector-commitment solution");
  add_spec_options(lead);

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo play of a profile");
  add_spec_options(simulate);
  simulate->add_option("--trials", trials, "number of trials");
  simulate->add_option("--seed", seed, "64-bit master seed");
  simulate->add_option("--info-mode", info_mode, "informed or uninformed")
      ->check(CLI::IsMember({"informed", "uninformed"}));
  simulate->add_option("--profile", profile_name, "equilibrium (default) or leadership")
      ->check(CLI::IsMember({"equilibrium", "leadership"}));
  simulate->add_option("--histogram-csv", histogram_csv, "also write the outcome histogram CSV");

  CLI::App* verify_cmd = app.add_subcommand("verify", "closed form vs oracle vs exploitability");
  add_spec_options(verify_cmd);

  CLI::App* sweep = app.add_subcommand("sweep", "CSV of root solutions over a parameter grid");
  add_spec_options(sweep);
  sweep->add_option("--n", n_range, "range a..b");
  sweep->add_option("--m", m_range, "range a..b, b may be n or n-1");
  sweep->add_option("--k", k_range, "range a..b, b may be n or n-1");
  sweep->add_option("--b", b_list, "comma-separated rationals, e.g. 0,1/2,2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << error_json("usage", e.what()).dump() << "\n";
    return kExitParse;
  }

  try {
    const GameSpec spec = load_spec(spec_path, spec_inline);
    if (solve->parsed()) return run_solve(spec, full_table);
    if (schedule->parsed()) return run_schedule(spec, format);
    if (lead->parsed()) return run_leadership(spec);
    if (simulate->parsed())
      return run_simulate(spec, trials, seed, info_mode, profile_name, histogram_csv);
    if (verify_cmd->parsed()) return run_verify(spec);
    if (sweep->parsed()) return run_sweep(spec, n_range, m_range, k_range, b_list);
    std::cerr << error_json("usage", "no subcommand").dump() << "\n";
    return kExitParse;
  } catch (const CliError& e) {
    std::cerr << error_json(e.type, e.what()).dump() << "\n";
    return e.exit_code;
  } catch (const ValidationError& e) {
    std::cerr << error_json(spec_error_name(e.code()), e.what()).dump() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << error_json("runtime", e.what()).dump() << "\n";
    return kExitRuntime;
  }
}
