#pragma once

#include <string>

#include "json.hpp"
#include "tdg/dynamics.hpp"
#include "tdg/gadgets.hpp"
#include "tdg/instance.hpp"
#include "tdg/solvers.hpp"

namespace tdg {

// All file formats use 1-based agent and node indices; everything in-memory
// is 0-based. Rationals serialize as [num, den] pairs; values outside the
// int64 range fall back to decimal strings inside the pair.

nlohmann::ordered_json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::ordered_json instance_to_json(const TdgInstance& instance);
TdgInstance instance_from_json(const nlohmann::json& j);

nlohmann::ordered_json assignment_to_json(const Assignment& lambda);
Assignment assignment_from_json(const nlohmann::json& j);

nlohmann::ordered_json trace_to_json(const DynamicsTrace& trace);

nlohmann::ordered_json moves_to_json(const std::vector<Move>& moves);
std::vector<Move> moves_from_json(const nlohmann::json& j);

nlohmann::ordered_json gadget_output_to_json(const GadgetOutput& g);
GadgetOutput gadget_output_from_json(const nlohmann::json& j);

WeightedCompleteGraph weighted_graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json weighted_graph_to_json(const WeightedCompleteGraph& g);

X3cInstance x3c_from_json(const nlohmann::json& j);
nlohmann::ordered_json x3c_to_json(const X3cInstance& x);

nlohmann::ordered_json solver_report_to_json(const SolverReport& report);

// File helpers. Loaders accept either the bare format or a gadget output
// file (the "instance" key is sniffed) so gadget emissions feed straight
// back into the other commands.
TdgInstance load_instance_file(const std::string& path);
Assignment load_assignment_file(const std::string& path);
std::vector<Move> load_moves_file(const std::string& path);
nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace tdg
