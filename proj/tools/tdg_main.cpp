// tdg: command-line frontend for topological distance games.
// Subcommands: check, solve, dynamics, statespace, gadget.
// Exit codes are part of the contract:
//   0 success / stable / converged / assignment produced
//   1 unstable / cycle detected / no stable assignment exists
//   2 input, parse or script error
//   3 solver or gadget precondition not met
//   4 budget, step or state limit exceeded

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "tdg/dynamics.hpp"
#include "tdg/gadgets.hpp"
#include "tdg/json_io.hpp"
#include "tdg/oracle.hpp"
#include "tdg/solvers.hpp"
#include "tdg/stability.hpp"

using namespace tdg;
using nlohmann::ordered_json;

namespace {

constexpr int kExitStable = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

OracleBudget budget_from_env() {
    OracleBudget budget;
    if (const char* env = std::getenv("TDG_BUDGET")) {
        try {
            budget.max_assignments = std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("TDG_BUDGET is not an integer");
        }
    }
    return budget;
}

std::string fraction(const Rational& r) { return r.str(); }

int cmd_check(const std::string& instance_file, const std::string& assignment_file,
              const std::string& notion, bool json_out) {
    TdgInstance instance = load_instance_file(instance_file);
    Assignment lambda = load_assignment_file(assignment_file);
    instance.validate_assignment(lambda);
    std::vector<Deviation> devs = notion == "swap" ? beneficial_swaps(instance, lambda)
                                                   : beneficial_jumps(instance, lambda);
    const bool stable = devs.empty();
    if (json_out) {
        ordered_json j;
        j["notion"] = notion;
        j["stable"] = stable;
        ordered_json list = ordered_json::array();
        for (const auto& d : devs) {
            ordered_json e;
            if (d.kind == Deviation::Kind::Jump) {
                e["kind"] = "jump";
                e["agent"] = d.agent + 1;
                e["to"] = d.target + 1;
                e["gain"] = rational_to_json(d.gain);
            } else {
                e["kind"] = "swap";
                e["agents"] = ordered_json::array({d.agent + 1, d.target + 1});
                e["gain"] = rational_to_json(d.gain);
                e["gain_other"] = rational_to_json(d.gain_other);
            }
            list.push_back(e);
        }
        j["deviations"] = list;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (stable ? "stable" : "unstable") << "\n";
        for (const auto& d : devs) {
            if (d.kind == Deviation::Kind::Jump)
                std::cout << "jump agent=" << d.agent + 1 << " to=" << d.target + 1
                          << " gain=" << fraction(d.gain) << "\n";
            else
                std::cout << "swap agents=" << d.agent + 1 << "," << d.target + 1
                          << " gain=" << fraction(d.gain)
                          << " gain_other=" << fraction(d.gain_other) << "\n";
        }
    }
    return stable ? kExitStable : kExitUnstable;
}

int cmd_solve(const std::string& instance_file, const std::string& method, int threads) {
    TdgInstance instance = load_instance_file(instance_file);
    if (method == "brute") {
        OracleResult r;
        try {
            r = exists_jump_stable(instance, budget_from_env(), threads);
        } catch (const std::runtime_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBudget;
        }
        ordered_json j;
        j["method"] = "brute";
        j["status"] = r.exists ? "assignment" : "non-existent";
        j["assignment"] = r.witness ? assignment_to_json(*r.witness) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
        return r.exists ? kExitStable : kExitUnstable;
    }
    SolverReport report = [&] {
        if (method == "acyclic") return solve_acyclic(instance);
        if (method == "cycle") return solve_cycle_on_cycle(instance);
        if (method == "path") return solve_path(instance);
        if (method == "star") return solve_extended_star(instance);
        throw std::invalid_argument("unknown method '" + method + "'");
    }();
    std::cout << solver_report_to_json(report).dump(2) << "\n";
    switch (report.status) {
        case SolverReport::Status::Assigned: return kExitStable;
        case SolverReport::Status::NonExistent: return kExitUnstable;
        case SolverReport::Status::NotApplicable: return kExitPrecondition;
    }
    return kExitInputError;
}

SchedulerPolicy parse_policy(const std::string& spec) {
    if (spec == "first") return SchedulerPolicy::first();
    if (spec == "best") return SchedulerPolicy::best();
    if (spec.rfind("random:", 0) == 0)
        return SchedulerPolicy::seeded_random(std::stoull(spec.substr(7)));
    if (spec.rfind("script:", 0) == 0)
        return SchedulerPolicy::scripted(load_moves_file(spec.substr(7)));
    throw std::invalid_argument("unknown policy '" + spec +
                                "' (use first, best, random:<seed>, script:<file>)");
}

int cmd_dynamics(const std::string& instance_file, const std::string& start_file,
                 const std::string& policy_spec, const std::string& notion, long long max_steps,
                 const std::string& trace_file, bool json_out) {
    TdgInstance instance = load_instance_file(instance_file);
    Assignment start = load_assignment_file(start_file);
    SchedulerPolicy policy = parse_policy(policy_spec);
    DynamicsTrace trace = notion == "swap"
                              ? run_swap_dynamics(instance, start, policy, max_steps)
                              : run_dynamics(instance, start, policy, max_steps);
    if (!trace_file.empty()) write_json_file(trace_file, trace_to_json(trace));
    if (json_out) {
        std::cout << trace_to_json(trace).dump(2) << "\n";
    } else {
        switch (trace.outcome) {
            case DynamicsTrace::Outcome::Converged:
                std::cout << "outcome=converged steps=" << trace.steps.size() << "\n";
                break;
            case DynamicsTrace::Outcome::CycleDetected:
                std::cout << "outcome=cycle steps=" << trace.steps.size()
                          << " first_repeat_index=" << trace.first_repeat_index << "\n";
                break;
            case DynamicsTrace::Outcome::StepLimit:
                std::cout << "outcome=step-limit steps=" << trace.steps.size() << "\n";
                break;
        }
    }
    switch (trace.outcome) {
        case DynamicsTrace::Outcome::Converged: return kExitStable;
        case DynamicsTrace::Outcome::CycleDetected: return kExitUnstable;
        case DynamicsTrace::Outcome::StepLimit: return kExitBudget;
    }
    return kExitInputError;
}

int cmd_statespace(const std::string& instance_file, const std::string& start_file,
                   long long limit, int threads, bool json_out) {
    TdgInstance instance = load_instance_file(instance_file);
    Assignment start = load_assignment_file(start_file);
    StateGraph graph;
    try {
        graph = explore_state_graph(instance, start, limit, MoveNotion::Jump, threads);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }
    const bool possibly = possibly_converges(graph);
    const bool necessarily = necessarily_converges(graph);
    if (json_out) {
        ordered_json j;
        j["states"] = graph.states.size();
        j["possibly_converges"] = possibly;
        j["necessarily_converges"] = necessarily;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "states=" << graph.states.size() << " possibly_converges="
                  << (possibly ? "true" : "false")
                  << " necessarily_converges=" << (necessarily ? "true" : "false") << "\n";
    }
    return kExitStable;
}

TopologyGraph parse_topology_spec(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        nlohmann::json j = load_json_file(spec.substr(1));
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
        return TopologyGraph(j.at("nodes").get<int>(), std::move(edges));
    }
    auto split = [&](const std::string& prefix) -> std::optional<int> {
        if (spec.rfind(prefix, 0) == 0) return std::stoi(spec.substr(prefix.size()));
        return std::nullopt;
    };
    if (auto n = split("path")) return TopologyGraph::path(*n);
    if (auto n = split("cycle")) return TopologyGraph::cycle(*n);
    if (auto n = split("star")) return TopologyGraph::star(*n);
    if (auto n = split("clique")) return TopologyGraph::clique(*n);
    throw std::invalid_argument("unknown topology '" + spec +
                                "' (use pathN, cycleN, starN, cliqueN or @file.json)");
}

DistanceFactor parse_factor_spec(const std::string& spec) {
    if (spec == "reciprocal") return DistanceFactor::reciprocal();
    if (spec.rfind("table:", 0) == 0) {
        std::vector<Rational> values;
        std::string rest = spec.substr(6);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            values.push_back(Rational::from_string(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return DistanceFactor::table(std::move(values));
    }
    throw std::invalid_argument("unknown factor '" + spec +
                                "' (use reciprocal or table:v1,v2,...)");
}

std::optional<std::vector<int>> parse_cover(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    std::vector<int> cover;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        cover.push_back(std::stoi(spec.substr(pos, comma - pos)) - 1);
        pos = comma + 1;
    }
    return cover;
}

struct GadgetArgs {
    std::string name;
    std::string out_file;
    std::string topology = "path4";
    std::string x3c_file;
    std::string graph_file;
    std::string cover;
    std::string factor = "reciprocal";
    std::string pad_for = "exjump";
    int k = 1;
};

int cmd_gadget(const GadgetArgs& args) {
    // Phase one, exit 2 on failure: input files, name dispatch, specs.
    const std::set<std::string> known = {"cat-and-mouse", "tree-counterexample", "exponential",
                                         "exjump",        "dynconv",             "dyncycle",
                                         "maxcut",        "graph-partitioning",  "roommates",
                                         "swap-cycle",    "pad-x3c"};
    if (!known.count(args.name)) {
        std::cerr << "error: unknown gadget '" << args.name << "'\n";
        return kExitInputError;
    }
    std::optional<X3cInstance> x3c;
    if (!args.x3c_file.empty()) x3c = x3c_from_json(load_json_file(args.x3c_file));
    std::optional<WeightedCompleteGraph> graph;
    if (!args.graph_file.empty()) graph = weighted_graph_from_json(load_json_file(args.graph_file));
    std::optional<std::vector<int>> cover = parse_cover(args.cover);
    const bool needs_x3c = args.name == "exjump" || args.name == "dynconv" ||
                           args.name == "dyncycle" || args.name == "pad-x3c";
    if (needs_x3c && !x3c) {
        std::cerr << "error: gadget '" << args.name << "' needs --x3c\n";
        return kExitInputError;
    }
    const bool needs_graph = args.name == "maxcut" || args.name == "graph-partitioning";
    if (needs_graph && !graph) {
        std::cerr << "error: gadget '" << args.name << "' needs --graph\n";
        return kExitInputError;
    }
    std::optional<TopologyGraph> topology;
    if (args.name == "cat-and-mouse") topology = parse_topology_spec(args.topology);
    std::optional<DistanceFactor> factor;
    if (args.name == "dynconv" || args.name == "dyncycle")
        factor = parse_factor_spec(args.factor);

    if (args.name == "pad-x3c") {
        PaddedX3c padded =
            args.pad_for == "dynconv" ? pad_x3c_for_dynconv(*x3c) : pad_x3c_for_exjump(*x3c);
        ordered_json j = x3c_to_json(padded.instance);
        j["k_added"] = padded.k_added;
        if (padded.trivial_no) j["flag"] = "trivial-no";
        if (args.out_file.empty())
            std::cout << j.dump(2) << "\n";
        else {
            write_json_file(args.out_file, j);
            std::cout << "wrote " << args.out_file << "\n";
        }
        return kExitStable;
    }

    // Phase two, exit 3 on failure: the constructors' own preconditions
    // (diameter threshold, padding bounds, cycle shape, parity...).
    GadgetOutput out = [&]() -> GadgetOutput {
        try {
            if (args.name == "cat-and-mouse") return gadget_cat_and_mouse(*topology);
            if (args.name == "tree-counterexample") return gadget_tree_counterexample();
            if (args.name == "exponential") return gadget_exponential_family(args.k);
            if (args.name == "exjump") return gadget_exjump(*x3c, cover);
            if (args.name == "dynconv") return gadget_dynconv(*x3c, *factor, cover);
            if (args.name == "dyncycle") return gadget_dyncycle(*x3c, *factor, cover);
            if (args.name == "maxcut") return gadget_maxcut_reduction(*graph);
            if (args.name == "graph-partitioning")
                return gadget_graph_partitioning_reduction(*graph);
            if (args.name == "roommates") return gadget_roommates_no_swap();
            return gadget_swap_cycle();
        } catch (const std::invalid_argument& e) {
            std::cerr << "precondition failed: " << e.what() << "\n";
            std::exit(kExitPrecondition);
        }
    }();

    ordered_json j = gadget_output_to_json(out);
    if (args.out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(args.out_file, j);
        std::cout << "wrote " << args.out_file << "\n";
        std::cout << "agents=" << out.instance.n() << " nodes=" << out.instance.node_count()
                  << "\n";
    }
    return kExitStable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological distance games: stability, solvers, dynamics, instance families"};
    app.require_subcommand(1);
    bool json_out = false;
    int threads = 1;
    app.add_flag("--json", json_out, "machine-readable output");
    app.add_option("--threads", threads, "worker threads for exhaustive search");

    std::string instance_file, assignment_file, notion = "jump";
    auto* check = app.add_subcommand("check", "check an assignment for stability");
    check->add_option("instance", instance_file)->required();
    check->add_option("assignment", assignment_file)->required();
    check->add_option("--notion", notion)->check(CLI::IsMember({"jump", "swap"}));

    std::string method = "brute";
    auto* solve = app.add_subcommand("solve", "construct a jump stable assignment");
    solve->add_option("instance", instance_file)->required();
    solve->add_option("--method", method)
        ->check(CLI::IsMember({"acyclic", "cycle", "path", "star", "brute"}));

    std::string start_file, policy = "first", trace_file;
    long long max_steps = 1'000'000;
    auto* dynamics = app.add_subcommand("dynamics", "run beneficial-move dynamics");
    dynamics->add_option("instance", instance_file)->required();
    dynamics->add_option("start", start_file)->required();
    dynamics->add_option("--policy", policy, "first | best | random:<seed> | script:<file>");
    dynamics->add_option("--notion", notion)->check(CLI::IsMember({"jump", "swap"}));
    dynamics->add_option("--max-steps", max_steps);
    dynamics->add_option("--emit-trace", trace_file, "write the trace as JSON");

    long long state_limit = 10'000'000;
    auto* statespace = app.add_subcommand("statespace", "explore all reachable assignments");
    statespace->add_option("instance", instance_file)->required();
    statespace->add_option("start", start_file)->required();
    statespace->add_option("--limit", state_limit);

    GadgetArgs gargs;
    auto* gadget = app.add_subcommand("gadget", "emit a named instance family member");
    gadget->add_option("name", gargs.name)->required();
    gadget->add_option("--out", gargs.out_file);
    gadget->add_option("--topology", gargs.topology, "pathN | cycleN | starN | cliqueN | @file");
    gadget->add_option("--x3c", gargs.x3c_file, "exact-3-cover instance JSON");
    gadget->add_option("--graph", gargs.graph_file, "weighted complete graph JSON");
    gadget->add_option("--cover", gargs.cover, "comma-separated 1-based set indices");
    gadget->add_option("--factor", gargs.factor, "reciprocal | table:v1,v2,...");
    gadget->add_option("--for", gargs.pad_for, "pad-x3c target: exjump | dynconv");
    gadget->add_option("--k", gargs.k, "exponential family order");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(instance_file, assignment_file, notion, json_out);
        if (*solve) return cmd_solve(instance_file, method, threads);
        if (*dynamics)
            return cmd_dynamics(instance_file, start_file, policy, notion, max_steps, trace_file,
                                json_out);
        if (*statespace)
            return cmd_statespace(instance_file, start_file, state_limit, threads, json_out);
        if (*gadget) return cmd_gadget(gargs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
