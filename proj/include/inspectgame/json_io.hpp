#pragma once

#include <nlohmann/json.hpp>

#include "inspectgame/closed_form.hpp"
#include "inspectgame/game_model.hpp"
#include "inspectgame/leadership.hpp"
#include "inspectgame/oracle.hpp"
#include "inspectgame/simulate.hpp"

namespace inspectgame::json_io {

using json = nlohmann::json;

/// Canonical wire form of a rational: {"num": "<decimal>", "den": "<decimal>"}.
json rational_to_json(const Rational& q);

/// Accepts the canonical object form, an integer, or a string "a/b" / "a".
/// Floating-point JSON numbers are rejected unless integral: decimal
/// fractions generally have no exact binary form, and nothing here rounds.
Rational rational_from_json(const json& j);

json spec_to_json(const GameSpec& spec);
GameSpec spec_from_json(const json& j);

json state_to_json(const StateKey& state);
StateKey state_from_json(const json& j);

json solution_to_json(const closed_form::StateSolution& solution);
json table_to_json(const oracle::SolutionTable& table);
json schedule_to_json(const closed_form::Schedule& schedule);
json leadership_to_json(const leadership::LeadershipSolution& solution);
json report_to_json(const sim::SimulationReport& report);

}  // namespace inspectgame::json_io
