#include "tdg/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace tdg {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json rational_to_json(const Rational& r) {
    ordered_json pair = ordered_json::array();
    if (r.fits_int64()) {
        pair.push_back(r.num_int64());
        pair.push_back(r.den_int64());
    } else {
        pair.push_back(r.num_str());
        pair.push_back(r.den_str());
    }
    return pair;
}

namespace {

Rational rational_part(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    throw std::invalid_argument("rational: expected integer or string");
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational: expected [num, den]");
    Rational num = rational_part(j[0]);
    Rational den = rational_part(j[1]);
    return num / den;
}

nlohmann::ordered_json instance_to_json(const TdgInstance& instance) {
    ordered_json j;
    j["n"] = instance.n();
    // Sparse output: only nonzero entries, 1-based.
    ordered_json entries = ordered_json::array();
    for (int i = 0; i < instance.n(); ++i)
        for (const auto& [k, u] : instance.nonzero_row(i)) {
            ordered_json e;
            e["from"] = i + 1;
            e["to"] = k + 1;
            ordered_json pair = rational_to_json(u);
            e["num"] = pair[0];
            e["den"] = pair[1];
            entries.push_back(e);
        }
    j["utilities"] = entries;
    ordered_json topo;
    topo["nodes"] = instance.node_count();
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : instance.topology().edges())
        edges.push_back(ordered_json::array({a + 1, b + 1}));
    topo["edges"] = edges;
    j["topology"] = topo;
    ordered_json factor;
    if (instance.factor().kind() == FactorKind::Reciprocal) {
        factor["kind"] = "reciprocal";
    } else {
        factor["kind"] = "table";
        ordered_json values = ordered_json::array();
        for (const auto& v : instance.factor().table_values())
            values.push_back(rational_to_json(v));
        factor["values"] = values;
    }
    j["factor"] = factor;
    return j;
}

TdgInstance instance_from_json(const json& j) {
    if (!j.contains("n")) throw std::invalid_argument("instance: missing 'n'");
    const int n = j.at("n").get<int>();
    UtilityMatrix u(n);
    const json& uj = j.at("utilities");
    if (!uj.is_array()) throw std::invalid_argument("instance: 'utilities' must be an array");
    const bool sparse = uj.empty() || uj[0].is_object();
    if (sparse) {
        for (const auto& e : uj) {
            int from = e.at("from").get<int>() - 1;
            int to = e.at("to").get<int>() - 1;
            Rational num = rational_part(e.at("num"));
            Rational den = e.contains("den") ? rational_part(e.at("den")) : Rational(1);
            u.set(from, to, num / den);
        }
    } else {
        if (static_cast<int>(uj.size()) != n)
            throw std::invalid_argument("instance: dense utilities must have n rows");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(uj[i].size()) != n)
                throw std::invalid_argument("instance: dense utilities must have n columns");
            for (int k = 0; k < n; ++k) u.set(i, k, rational_from_json(uj[i][k]));
        }
    }
    const json& tj = j.at("topology");
    int nodes = tj.at("nodes").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : tj.at("edges"))
        edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
    TopologyGraph topo(nodes, std::move(edges));
    const json& fj = j.at("factor");
    const std::string kind = fj.at("kind").get<std::string>();
    if (kind == "reciprocal")
        return TdgInstance(std::move(u), std::move(topo), DistanceFactor::reciprocal());
    if (kind == "table") {
        std::vector<Rational> values;
        for (const auto& v : fj.at("values")) values.push_back(rational_from_json(v));
        return TdgInstance(std::move(u), std::move(topo), DistanceFactor::table(std::move(values)));
    }
    throw std::invalid_argument("instance: unknown factor kind '" + kind + "'");
}

nlohmann::ordered_json assignment_to_json(const Assignment& lambda) {
    ordered_json j;
    ordered_json placement = ordered_json::array();
    for (int node : lambda.placement()) placement.push_back(node + 1);
    j["placement"] = placement;
    return j;
}

Assignment assignment_from_json(const json& j) {
    std::vector<int> placement;
    for (const auto& v : j.at("placement")) placement.push_back(v.get<int>() - 1);
    return Assignment(std::move(placement));
}

nlohmann::ordered_json trace_to_json(const DynamicsTrace& trace) {
    ordered_json j;
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        ordered_json e;
        e["agent"] = s.agent + 1;
        e["from"] = s.from + 1;
        e["to"] = s.to + 1;
        e["gain"] = rational_to_json(s.gain);
        steps.push_back(e);
    }
    j["steps"] = steps;
    switch (trace.outcome) {
        case DynamicsTrace::Outcome::Converged:
            j["outcome"] = "converged";
            break;
        case DynamicsTrace::Outcome::CycleDetected:
            j["outcome"] = "cycle";
            j["first_repeat_index"] = trace.first_repeat_index;
            break;
        case DynamicsTrace::Outcome::StepLimit:
            j["outcome"] = "step-limit";
            break;
    }
    if (!trace.phi_values.empty()) {
        ordered_json phis = ordered_json::array();
        for (const auto& p : trace.phi_values) phis.push_back(rational_to_json(p));
        j["phi_values"] = phis;
    }
    j["final"] = assignment_to_json(trace.final_assignment);
    return j;
}

nlohmann::ordered_json moves_to_json(const std::vector<Move>& moves) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& m : moves) arr.push_back(ordered_json::array({m.agent + 1, m.target + 1}));
    j["moves"] = arr;
    return j;
}

std::vector<Move> moves_from_json(const json& j) {
    const json& arr = j.is_array() ? j : j.at("moves");
    std::vector<Move> moves;
    for (const auto& m : arr)
        moves.push_back({m.at(0).get<int>() - 1, m.at(1).get<int>() - 1});
    return moves;
}

nlohmann::ordered_json gadget_output_to_json(const GadgetOutput& g) {
    ordered_json j;
    j["instance"] = instance_to_json(g.instance);
    j["initial_assignment"] =
        g.initial_assignment ? assignment_to_json(*g.initial_assignment) : ordered_json(nullptr);
    j["witness_assignment"] =
        g.witness_assignment ? assignment_to_json(*g.witness_assignment) : ordered_json(nullptr);
    j["script"] = g.script ? moves_to_json(*g.script) : ordered_json(nullptr);
    ordered_json meta;
    for (const auto& [k, v] : g.metadata) meta[k] = v;
    j["metadata"] = meta;
    return j;
}

GadgetOutput gadget_output_from_json(const json& j) {
    GadgetOutput g{instance_from_json(j.at("instance")), std::nullopt, std::nullopt, std::nullopt,
                   {}};
    if (j.contains("initial_assignment") && !j.at("initial_assignment").is_null())
        g.initial_assignment = assignment_from_json(j.at("initial_assignment"));
    if (j.contains("witness_assignment") && !j.at("witness_assignment").is_null())
        g.witness_assignment = assignment_from_json(j.at("witness_assignment"));
    if (j.contains("script") && !j.at("script").is_null())
        g.script = moves_from_json(j.at("script"));
    if (j.contains("metadata"))
        for (const auto& [k, v] : j.at("metadata").items())
            g.metadata[k] = v.get<std::string>();
    return g;
}

WeightedCompleteGraph weighted_graph_from_json(const json& j) {
    int t = j.at("t").get<int>();
    std::vector<std::vector<Rational>> w;
    for (const auto& row : j.at("weights")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        w.push_back(std::move(r));
    }
    return WeightedCompleteGraph(t, std::move(w));
}

nlohmann::ordered_json weighted_graph_to_json(const WeightedCompleteGraph& g) {
    ordered_json j;
    j["t"] = g.t;
    ordered_json rows = ordered_json::array();
    for (const auto& row : g.weights) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row) r.push_back(rational_to_json(v));
        rows.push_back(r);
    }
    j["weights"] = rows;
    return j;
}

X3cInstance x3c_from_json(const json& j) {
    int ground = j.at("ground_size").get<int>();
    std::vector<std::array<int, 3>> sets;
    for (const auto& s : j.at("sets")) {
        if (s.size() != 3) throw std::invalid_argument("x3c: sets must have 3 elements");
        sets.push_back({s.at(0).get<int>() - 1, s.at(1).get<int>() - 1, s.at(2).get<int>() - 1});
    }
    return X3cInstance(ground, std::move(sets));
}

nlohmann::ordered_json x3c_to_json(const X3cInstance& x) {
    ordered_json j;
    j["ground_size"] = x.ground_size;
    ordered_json sets = ordered_json::array();
    for (const auto& s : x.sets)
        sets.push_back(ordered_json::array({s[0] + 1, s[1] + 1, s[2] + 1}));
    j["sets"] = sets;
    return j;
}

nlohmann::ordered_json solver_report_to_json(const SolverReport& report) {
    ordered_json j;
    switch (report.method) {
        case SolveMethod::AcyclicGreedy: j["method"] = "acyclic"; break;
        case SolveMethod::CycleOnCycle: j["method"] = "cycle"; break;
        case SolveMethod::PathGreedy: j["method"] = "path"; break;
        case SolveMethod::ExtendedStar: j["method"] = "star"; break;
    }
    switch (report.status) {
        case SolverReport::Status::Assigned: j["status"] = "assignment"; break;
        case SolverReport::Status::NonExistent: j["status"] = "non-existent"; break;
        case SolverReport::Status::NotApplicable: j["status"] = "not-applicable"; break;
    }
    j["assignment"] =
        report.assignment ? assignment_to_json(*report.assignment) : ordered_json(nullptr);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.preconditions_checked) {
        ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        checks.push_back(e);
    }
    j["preconditions"] = checks;
    if (report.relabeling) {
        ordered_json r = ordered_json::array();
        for (int a : *report.relabeling) r.push_back(a + 1);
        j["relabeling"] = r;
    }
    return j;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);
}

// Gadget output files double as instance/assignment/script carriers: the
// loaders below unwrap them transparently.

TdgInstance load_instance_file(const std::string& path) {
    json j = load_json_file(path);
    if (j.is_object() && j.contains("instance")) return instance_from_json(j.at("instance"));
    return instance_from_json(j);
}

Assignment load_assignment_file(const std::string& path) {
    json j = load_json_file(path);
    if (j.is_object() && j.contains("instance")) {
        if (j.contains("initial_assignment") && !j.at("initial_assignment").is_null())
            return assignment_from_json(j.at("initial_assignment"));
        if (j.contains("witness_assignment") && !j.at("witness_assignment").is_null())
            return assignment_from_json(j.at("witness_assignment"));
        throw std::invalid_argument("gadget file holds no assignment");
    }
    return assignment_from_json(j);
}

std::vector<Move> load_moves_file(const std::string& path) {
    json j = load_json_file(path);
    if (j.is_object() && j.contains("instance")) {
        if (!j.contains("script") || j.at("script").is_null())
            throw std::invalid_argument("gadget file holds no script");
        return moves_from_json(j.at("script"));
    }
    return moves_from_json(j);
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tdg
