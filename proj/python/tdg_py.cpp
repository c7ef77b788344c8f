// Python bindings for the core operations. The surface mirrors the JSON wire
// formats: dict payloads and 1-based agent/node indices, exactly as in the
// file formats consumed by the CLI. Exact rationals cross the boundary as
// "p/q" strings (feed them to fractions.Fraction).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tdg/dynamics.hpp"
#include "tdg/gadgets.hpp"
#include "tdg/json_io.hpp"
#include "tdg/oracle.hpp"
#include "tdg/solvers.hpp"
#include "tdg/stability.hpp"

namespace py = pybind11;
using namespace tdg;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
    py::object dumps = py::module_::import("json").attr("dumps");
    return nlohmann::json::parse(dumps(obj).cast<std::string>());
}

Assignment placement_from_py(const std::vector<int>& one_based) {
    std::vector<int> zero_based;
    zero_based.reserve(one_based.size());
    for (int v : one_based) zero_based.push_back(v - 1);
    return Assignment(std::move(zero_based));
}

std::vector<int> placement_to_py(const Assignment& lambda) {
    std::vector<int> one_based;
    one_based.reserve(lambda.placement().size());
    for (int v : lambda.placement()) one_based.push_back(v + 1);
    return one_based;
}

MoveNotion notion_from(const std::string& s) {
    if (s == "jump") return MoveNotion::Jump;
    if (s == "swap") return MoveNotion::Swap;
    throw std::invalid_argument("notion must be 'jump' or 'swap'");
}

SchedulerPolicy policy_from(const std::string& kind, std::uint64_t seed,
                            const std::optional<std::vector<std::pair<int, int>>>& script) {
    if (kind == "first") return SchedulerPolicy::first();
    if (kind == "best") return SchedulerPolicy::best();
    if (kind == "random") return SchedulerPolicy::seeded_random(seed);
    if (kind == "script") {
        if (!script) throw std::invalid_argument("script policy needs script=[(agent,target)...]");
        std::vector<Move> moves;
        for (const auto& [a, t] : *script) moves.push_back({a - 1, t - 1});
        return SchedulerPolicy::scripted(std::move(moves));
    }
    throw std::invalid_argument("policy must be first, best, random or script");
}

GadgetOutput x3c_gadget(const std::string& which, const py::object& x3c_dict,
                        const std::string& factor, const std::optional<std::vector<int>>& cover) {
    X3cInstance x = x3c_from_json(py_to_json(x3c_dict));
    std::optional<std::vector<int>> zero_cover;
    if (cover) {
        zero_cover.emplace();
        for (int idx : *cover) zero_cover->push_back(idx - 1);
    }
    DistanceFactor f = factor == "reciprocal"
                           ? DistanceFactor::reciprocal()
                           : DistanceFactor::table([&] {
                                 std::vector<Rational> values;
                                 std::size_t pos = 0;
                                 while (pos < factor.size()) {
                                     std::size_t comma = factor.find(',', pos);
                                     if (comma == std::string::npos) comma = factor.size();
                                     values.push_back(
                                         Rational::from_string(factor.substr(pos, comma - pos)));
                                     pos = comma + 1;
                                 }
                                 return values;
                             }());
    if (which == "exjump") return gadget_exjump(x, zero_cover);
    if (which == "dynconv") return gadget_dynconv(x, f, zero_cover);
    return gadget_dyncycle(x, f, zero_cover);
}

}  // namespace

PYBIND11_MODULE(tdgcore, m) {
    m.doc() = "topological distance games: exact stability, solvers, dynamics";

    py::class_<TdgInstance>(m, "Instance")
        .def_static("from_dict",
                    [](const py::object& d) { return instance_from_json(py_to_json(d)); })
        .def("to_dict", [](const TdgInstance& inst) { return json_to_py(instance_to_json(inst)); })
        .def_property_readonly("n", &TdgInstance::n)
        .def_property_readonly("nodes", &TdgInstance::node_count)
        .def_property_readonly("symmetric", &TdgInstance::symmetric)
        .def("__repr__", [](const TdgInstance& inst) {
            return "<Instance n=" + std::to_string(inst.n()) +
                   " nodes=" + std::to_string(inst.node_count()) + ">";
        });

    m.def("utility",
          [](const TdgInstance& inst, const std::vector<int>& placement, int agent) {
              return utility(inst, placement_from_py(placement), agent - 1).str();
          },
          py::arg("instance"), py::arg("placement"), py::arg("agent"));

    m.def("potential_phi",
          [](const TdgInstance& inst, const std::vector<int>& placement) {
              return potential_phi(inst, placement_from_py(placement)).str();
          });

    m.def("check",
          [](const TdgInstance& inst, const std::vector<int>& placement,
             const std::string& notion) {
              Assignment lambda = placement_from_py(placement);
              std::vector<Deviation> devs = notion_from(notion) == MoveNotion::Swap
                                                ? beneficial_swaps(inst, lambda)
                                                : beneficial_jumps(inst, lambda);
              nlohmann::ordered_json j;
              j["stable"] = devs.empty();
              nlohmann::ordered_json list = nlohmann::ordered_json::array();
              for (const auto& d : devs) {
                  nlohmann::ordered_json e;
                  e["agent"] = d.agent + 1;
                  e["target"] = d.target + 1;
                  e["gain"] = d.gain.str();
                  if (d.kind == Deviation::Kind::Swap) e["gain_other"] = d.gain_other.str();
                  list.push_back(e);
              }
              j["deviations"] = list;
              return json_to_py(j);
          },
          py::arg("instance"), py::arg("placement"), py::arg("notion") = "jump");

    m.def("solve",
          [](const TdgInstance& inst, const std::string& method) {
              SolverReport report = [&] {
                  if (method == "acyclic") return solve_acyclic(inst);
                  if (method == "cycle") return solve_cycle_on_cycle(inst);
                  if (method == "path") return solve_path(inst);
                  if (method == "star") return solve_extended_star(inst);
                  throw std::invalid_argument("unknown method '" + method + "'");
              }();
              return json_to_py(solver_report_to_json(report));
          },
          py::arg("instance"), py::arg("method"));

    m.def("exists_stable",
          [](const TdgInstance& inst, const std::string& notion, long long budget, int threads) {
              OracleResult r = notion_from(notion) == MoveNotion::Swap
                                   ? exists_swap_stable(inst, {budget}, threads)
                                   : exists_jump_stable(inst, {budget}, threads);
              nlohmann::ordered_json j;
              j["exists"] = r.exists;
              j["witness"] = r.witness ? assignment_to_json(*r.witness)
                                       : nlohmann::ordered_json(nullptr);
              return json_to_py(j);
          },
          py::arg("instance"), py::arg("notion") = "jump", py::arg("budget") = 10'000'000,
          py::arg("threads") = 1);

    m.def("dynamics",
          [](const TdgInstance& inst, const std::vector<int>& start, const std::string& policy,
             std::uint64_t seed, const std::optional<std::vector<std::pair<int, int>>>& script,
             const std::string& notion, long long max_steps) {
              SchedulerPolicy p = policy_from(policy, seed, script);
              DynamicsTrace trace =
                  notion_from(notion) == MoveNotion::Swap
                      ? run_swap_dynamics(inst, placement_from_py(start), p, max_steps)
                      : run_dynamics(inst, placement_from_py(start), p, max_steps);
              return json_to_py(trace_to_json(trace));
          },
          py::arg("instance"), py::arg("start"), py::arg("policy") = "first",
          py::arg("seed") = 0, py::arg("script") = py::none(), py::arg("notion") = "jump",
          py::arg("max_steps") = 1'000'000);

    m.def("scripted_exponential",
          [](int k) { return json_to_py(trace_to_json(run_scripted_exponential(k))); },
          py::arg("k"));

    m.def("statespace",
          [](const TdgInstance& inst, const std::vector<int>& start, long long limit,
             const std::string& notion, int threads) {
              StateGraph g = explore_state_graph(inst, placement_from_py(start), limit,
                                                 notion_from(notion), threads);
              nlohmann::ordered_json j;
              j["states"] = g.states.size();
              j["possibly_converges"] = possibly_converges(g);
              j["necessarily_converges"] = necessarily_converges(g);
              return json_to_py(j);
          },
          py::arg("instance"), py::arg("start"), py::arg("limit") = 10'000'000,
          py::arg("notion") = "jump", py::arg("threads") = 1);

    m.def("gadget_cat_and_mouse", [](int nodes, const std::string& shape) {
        TopologyGraph topo = shape == "path"    ? TopologyGraph::path(nodes)
                             : shape == "cycle" ? TopologyGraph::cycle(nodes)
                             : shape == "star"  ? TopologyGraph::star(nodes)
                                                : TopologyGraph::clique(nodes);
        return json_to_py(gadget_output_to_json(gadget_cat_and_mouse(topo)));
    }, py::arg("nodes"), py::arg("shape") = "path");

    m.def("gadget_tree_counterexample",
          [] { return json_to_py(gadget_output_to_json(gadget_tree_counterexample())); });

    m.def("gadget_exponential_family", [](int k) {
        return json_to_py(gadget_output_to_json(gadget_exponential_family(k)));
    }, py::arg("k"));

    m.def("gadget_roommates_no_swap",
          [] { return json_to_py(gadget_output_to_json(gadget_roommates_no_swap())); });

    m.def("gadget_swap_cycle",
          [] { return json_to_py(gadget_output_to_json(gadget_swap_cycle())); });

    m.def("gadget_exjump",
          [](const py::object& x3c, const std::optional<std::vector<int>>& cover) {
              return json_to_py(
                  gadget_output_to_json(x3c_gadget("exjump", x3c, "reciprocal", cover)));
          },
          py::arg("x3c"), py::arg("cover") = py::none());

    m.def("gadget_dynconv",
          [](const py::object& x3c, const std::string& factor,
             const std::optional<std::vector<int>>& cover) {
              return json_to_py(gadget_output_to_json(x3c_gadget("dynconv", x3c, factor, cover)));
          },
          py::arg("x3c"), py::arg("factor") = "reciprocal", py::arg("cover") = py::none());

    m.def("gadget_dyncycle",
          [](const py::object& x3c, const std::string& factor,
             const std::optional<std::vector<int>>& cover) {
              return json_to_py(gadget_output_to_json(x3c_gadget("dyncycle", x3c, factor, cover)));
          },
          py::arg("x3c"), py::arg("factor") = "reciprocal", py::arg("cover") = py::none());

    m.def("pad_x3c",
          [](const py::object& x3c, const std::string& target) {
              X3cInstance x = x3c_from_json(py_to_json(x3c));
              PaddedX3c padded =
                  target == "dynconv" ? pad_x3c_for_dynconv(x) : pad_x3c_for_exjump(x);
              nlohmann::ordered_json j = x3c_to_json(padded.instance);
              j["k_added"] = padded.k_added;
              j["trivial_no"] = padded.trivial_no;
              return json_to_py(j);
          },
          py::arg("x3c"), py::arg("target") = "exjump");

    m.def("gadget_maxcut_reduction", [](const py::object& graph) {
        return json_to_py(
            gadget_output_to_json(gadget_maxcut_reduction(weighted_graph_from_json(py_to_json(graph)))));
    });

    m.def("gadget_graph_partitioning_reduction", [](const py::object& graph) {
        return json_to_py(gadget_output_to_json(
            gadget_graph_partitioning_reduction(weighted_graph_from_json(py_to_json(graph)))));
    });

    m.def("verify_local_optimum_correspondence", [](const py::object& graph) {
        return verify_local_optimum_correspondence(weighted_graph_from_json(py_to_json(graph)));
    });
}
