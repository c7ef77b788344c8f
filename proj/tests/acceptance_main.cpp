// Acceptance suite: one criterion per numbered check, one PASS/FAIL line
// each, every tolerance exact (rational arithmetic throughout). The binary
// exits with the number of failed criteria.

#include <atomic>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "support/generators.hpp"
#include "tdg/dynamics.hpp"
#include "tdg/gadgets.hpp"
#include "tdg/oracle.hpp"
#include "tdg/solvers.hpp"
#include "tdg/stability.hpp"

using namespace tdg;

namespace {

int worker_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 1 ? static_cast<int>(hw) : 1;
}

// Splits [0, total) into contiguous chunks across the worker pool.
void parallel_chunks(long long total, const std::function<void(long long, long long)>& body) {
    const int threads = worker_threads();
    if (threads == 1 || total < 64) {
        body(0, total);
        return;
    }
    std::vector<std::thread> pool;
    long long chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long long lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

struct FailureLog {
    std::mutex mutex;
    std::optional<std::string> first;

    void record(const std::string& detail) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!first) first = detail;
    }
    bool ok() const { return !first.has_value(); }
};

bool strictly_increasing(const std::vector<Rational>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) return false;
    return true;
}

// ---------------------------------------------------------------------------

std::optional<std::string> criterion_symmetric_convergence() {
    for (int seed = 0; seed < 200; ++seed) {
        TdgInstance inst = testgen::random_symmetric_instance(1000 + seed, 6, 8);
        Assignment start = testgen::random_assignment(50000 + seed, inst);
        for (const SchedulerPolicy& policy :
             {SchedulerPolicy::first(), SchedulerPolicy::best(),
              SchedulerPolicy::seeded_random(7700 + seed)}) {
            DynamicsTrace trace = run_dynamics(inst, start, policy);
            if (trace.outcome != DynamicsTrace::Outcome::Converged)
                return "seed " + std::to_string(seed) + ": did not converge";
            if (!strictly_increasing(trace.phi_values))
                return "seed " + std::to_string(seed) + ": phi not strictly increasing";
            for (std::size_t k = 0; k < trace.steps.size(); ++k)
                if (!(trace.phi_values[k + 1] - trace.phi_values[k] ==
                      Rational(2) * trace.steps[k].gain))
                    return "seed " + std::to_string(seed) + ": phi doubling identity violated";
            if (!is_jump_stable(inst, trace.final_assignment))
                return "seed " + std::to_string(seed) + ": final state unstable";
        }
    }
    return std::nullopt;
}

std::optional<std::string> criterion_acyclic_solver() {
    FailureLog log;
    parallel_chunks(200, [&](long long lo, long long hi) {
        for (long long seed = lo; seed < hi && log.ok(); ++seed) {
            TdgInstance inst = testgen::random_dag_instance(2000 + seed, 7, 9);
            SolverReport report = solve_acyclic(inst);
            if (!report.assigned()) {
                log.record("seed " + std::to_string(seed) + ": solver not applicable");
                continue;
            }
            if (!is_jump_stable(inst, *report.assignment)) {
                log.record("seed " + std::to_string(seed) + ": output unstable");
                continue;
            }
            if (!exists_jump_stable(inst).exists)
                log.record("seed " + std::to_string(seed) + ": oracle disagrees");
        }
    });
    return log.first;
}

std::optional<std::string> criterion_cycle_characterization() {
    FailureLog log;
    std::atomic<long long> checked{0};
    for (int n = 1; n <= 6 && log.ok(); ++n) {
        long long combos = 1;
        for (int i = 0; i < n; ++i) combos *= n;  // per-agent friend choice, 0 = none
        parallel_chunks(combos, [&](long long lo, long long hi) {
            for (long long code = lo; code < hi && log.ok(); ++code) {
                std::vector<int> friend_of(n, -1);
                long long rest = code;
                for (int i = 0; i < n; ++i) {
                    int choice = static_cast<int>(rest % n);
                    rest /= n;
                    if (choice > 0) friend_of[i] = choice - 1 >= i ? choice : choice - 1;
                }
                // Is the friendship graph exactly a covering 3- or 5-cycle?
                bool covering_short_cycle = false;
                if (n == 3 || n == 5) {
                    std::vector<char> seen(n, 0);
                    int v = 0, steps = 0;
                    while (v != -1 && !seen[v]) {
                        seen[v] = 1;
                        v = friend_of[v];
                        ++steps;
                    }
                    covering_short_cycle = v == 0 && steps == n;
                }
                for (int extra = 1; extra <= 2 && log.ok(); ++extra) {
                    const int len = n + extra;
                    if (len < 3) continue;
                    UtilityMatrix u(n);
                    for (int i = 0; i < n; ++i)
                        if (friend_of[i] != -1) u.set(i, friend_of[i], Rational(1));
                    TdgInstance inst(std::move(u), TopologyGraph::cycle(len),
                                     DistanceFactor::reciprocal());
                    SolverReport report = solve_cycle_on_cycle(inst);
                    OracleResult oracle = exists_jump_stable(inst);
                    checked.fetch_add(1, std::memory_order_relaxed);
                    if (report.status == SolverReport::Status::NotApplicable) {
                        log.record("n=" + std::to_string(n) + " code=" + std::to_string(code) +
                                   ": solver refused a valid instance");
                        break;
                    }
                    const bool solver_exists = report.assigned();
                    if (solver_exists != oracle.exists) {
                        log.record("n=" + std::to_string(n) + " code=" + std::to_string(code) +
                                   " len=" + std::to_string(len) + ": solver/oracle mismatch");
                        break;
                    }
                    if (solver_exists == covering_short_cycle) {
                        log.record("n=" + std::to_string(n) + " code=" + std::to_string(code) +
                                   ": characterization mismatch");
                        break;
                    }
                    if (solver_exists && !is_jump_stable(inst, *report.assignment)) {
                        log.record("n=" + std::to_string(n) + " code=" + std::to_string(code) +
                                   ": solver output unstable");
                        break;
                    }
                }
            }
        });
    }
    if (log.first) return log.first;
    if (checked.load() < 100000)
        return "only " + std::to_string(checked.load()) + " instances enumerated";
    return std::nullopt;
}

std::optional<std::string> criterion_tree_counterexample() {
    GadgetOutput g = gadget_tree_counterexample();
    if (g.instance.n() != 6 || g.instance.node_count() != 10) return "wrong dimensions";
    OracleResult r = exists_jump_stable(g.instance);
    if (r.exists) return "oracle found an unexpected stable assignment";
    return std::nullopt;
}

std::optional<std::string> criterion_extended_star() {
    // The published 16-agent layout over branch sizes 4, 6, 7.
    {
        std::vector<std::pair<int, int>> edges;
        int next = 1;
        for (int size : {4, 6, 7}) {
            edges.push_back({0, next});
            for (int i = 1; i < size; ++i) edges.push_back({next + i - 1, next + i});
            next += size;
        }
        UtilityMatrix u(16);
        for (int i = 0; i < 16; ++i) u.set(i, (i + 1) % 16, Rational(1));
        TdgInstance inst(std::move(u), TopologyGraph(next, std::move(edges)),
                         DistanceFactor::reciprocal());
        SolverReport report = solve_extended_star(inst);
        if (!report.assigned()) return "published configuration not solved";
        if (!is_jump_stable(inst, *report.assignment)) return "published configuration unstable";
    }
    // Twenty randomized admissible configurations.
    testgen::Rng rng(0xa5a5a5a5);
    int done = 0;
    while (done < 20) {
        int k = rng.range(3, 5);
        std::vector<int> sizes;
        int capacity = 0, type1_total = 0, type2_count = 0;
        for (int b = 0; b < k; ++b) {
            int size = rng.range(1, 8);
            sizes.push_back(size);
            capacity += size;
            if (size <= 4)
                type1_total += size;
            else
                ++type2_count;
        }
        int n_min = std::max(5 * k + 1, 1 + type1_total + 5 * type2_count);
        if (type2_count == 0 || n_min > capacity + 1) continue;
        int n = rng.range(n_min, capacity + 1);

        std::vector<std::pair<int, int>> edges;
        int next = 1;
        for (int size : sizes) {
            edges.push_back({0, next});
            for (int i = 1; i < size; ++i) edges.push_back({next + i - 1, next + i});
            next += size;
        }
        // Random friendship cycle over a permutation of the agents.
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
        UtilityMatrix u(n);
        for (int i = 0; i < n; ++i)
            u.set(perm[i], perm[(i + 1) % n], rng.positive_rational(3, 3));
        TdgInstance inst(std::move(u), TopologyGraph(next, std::move(edges)),
                         DistanceFactor::reciprocal());
        SolverReport report = solve_extended_star(inst);
        if (!report.assigned())
            return "randomized configuration " + std::to_string(done) + " not solved";
        if (!is_jump_stable(inst, *report.assignment))
            return "randomized configuration " + std::to_string(done) + " unstable";
        ++done;
    }
    return std::nullopt;
}

std::optional<std::string> criterion_path_solver() {
    for (int seed = 0; seed < 100; ++seed) {
        TdgInstance inst = testgen::random_path_instance(3000 + seed);
        SolverReport report = solve_path(inst);
        if (!report.assigned()) return "seed " + std::to_string(seed) + ": not applicable";
        if (!is_jump_stable(inst, *report.assignment))
            return "seed " + std::to_string(seed) + ": output unstable";
    }
    return std::nullopt;
}

std::optional<std::string> criterion_exponential_dynamics() {
    for (int k = 1; k <= 10; ++k) {
        std::optional<DynamicsTrace> replay;
        try {
            replay = run_scripted_exponential(k);
        } catch (const std::exception& e) {
            return "k=" + std::to_string(k) + ": replay failed (" + e.what() + ")";
        }
        const DynamicsTrace& trace = *replay;
        GadgetOutput g = gadget_exponential_family(k);
        const int tip = std::stoi(g.metadata.at("agent.chain_tip"));
        long long tip_jumps = 0;
        for (const auto& s : trace.steps)
            if (s.agent == tip) ++tip_jumps;
        if (tip_jumps < (1ll << k))
            return "k=" + std::to_string(k) + ": tip performed " + std::to_string(tip_jumps) +
                   " jumps < 2^k";
        for (const auto& s : trace.steps)
            if (!s.gain.positive()) return "k=" + std::to_string(k) + ": non-beneficial step";
    }
    return std::nullopt;
}

std::optional<std::string> criterion_lexicographic_potential() {
    FailureLog log;
    parallel_chunks(100, [&](long long lo, long long hi) {
        for (long long seed = lo; seed < hi && log.ok(); ++seed) {
            TdgInstance inst = testgen::random_dag_instance(4000 + seed, 5, 7);
            std::vector<int> order = topological_order(friendship_graph(inst.utilities()));
            Assignment start = testgen::random_assignment(60000 + seed, inst);
            for (const SchedulerPolicy& policy :
                 {SchedulerPolicy::first(), SchedulerPolicy::best(),
                  SchedulerPolicy::seeded_random(880000 + seed)}) {
                DynamicsTrace trace = run_dynamics(inst, start, policy);
                if (trace.outcome != DynamicsTrace::Outcome::Converged) {
                    log.record("seed " + std::to_string(seed) + ": did not converge");
                    return;
                }
                Assignment cur = start;
                std::vector<Rational> prev = potential_lambda_vec(inst, cur, order);
                for (const auto& step : trace.steps) {
                    cur = jump(cur, step.agent, step.to);
                    std::vector<Rational> next = potential_lambda_vec(inst, cur, order);
                    if (!std::lexicographical_compare(prev.begin(), prev.end(), next.begin(),
                                                      next.end())) {
                        log.record("seed " + std::to_string(seed) + ": no lex increase");
                        return;
                    }
                    prev = std::move(next);
                }
            }
            // Necessary convergence from every start: enumerate all
            // placements (well under the reachable-state ceiling here).
            std::vector<int> placement(inst.n());
            std::vector<char> used(inst.node_count(), 0);
            auto rec = [&](auto&& self, int depth) -> bool {
                if (depth == inst.n()) {
                    StateGraph graph =
                        explore_state_graph(inst, Assignment(placement), 100000);
                    return necessarily_converges(graph);
                }
                for (int v = 0; v < inst.node_count(); ++v) {
                    if (used[v]) continue;
                    used[v] = 1;
                    placement[depth] = v;
                    bool ok = self(self, depth + 1);
                    used[v] = 0;
                    if (!ok) return false;
                }
                return true;
            };
            if (!rec(rec, 0))
                log.record("seed " + std::to_string(seed) + ": a start can avoid convergence");
        }
    });
    return log.first;
}

std::optional<std::string> criterion_exjump_witness() {
    X3cInstance planted(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}, {0, 3, 6}});
    PaddedX3c padded = pad_x3c_for_exjump(planted);
    if (padded.instance.ground_size != 42 || padded.instance.sets.size() != 15)
        return "padded shape is not (42, 15)";
    std::vector<int> cover{0, 1, 2, 3};
    for (int i = 0; i < padded.k_added; ++i) cover.push_back(5 + i);
    GadgetOutput g = gadget_exjump(padded.instance, cover);
    if (g.instance.n() != 58) return "expected 58 agents";
    if (!g.witness_assignment) return "no witness emitted";
    if (!is_jump_stable(g.instance, *g.witness_assignment)) return "witness not jump stable";
    const int R = 42;
    if (!(Rational(3) + Rational(R - 3) * Rational(1, 2) * Rational(-6, R - 3) == Rational(0)))
        return "zero-utility identity violated";
    for (int idx : cover)
        if (!(utility(g.instance, *g.witness_assignment, R + idx) == Rational(0)))
            return "cover agent utility is not exactly zero";
    return std::nullopt;
}

std::optional<std::string> criterion_dynamics_gadget_scripts() {
    X3cInstance planted(6, {{0, 1, 2}, {3, 4, 5}, {0, 2, 4}, {1, 3, 5}, {0, 1, 3}});
    std::vector<int> cover{0, 1};
    for (const DistanceFactor& f :
         {DistanceFactor::reciprocal(),
          DistanceFactor::table({Rational(3), Rational(1), Rational(1, 2), Rational(1, 5)})}) {
        GadgetOutput conv = gadget_dynconv(planted, f, cover);
        DynamicsTrace trace = run_dynamics(conv.instance, *conv.initial_assignment,
                                           SchedulerPolicy::scripted(*conv.script));
        if (trace.outcome != DynamicsTrace::Outcome::Converged)
            return "convergence script did not converge";
        if (!is_jump_stable(conv.instance, trace.final_assignment))
            return "convergence script final state unstable";
    }
    GadgetOutput cyc = gadget_dyncycle(planted, DistanceFactor::reciprocal(), cover);
    std::optional<DynamicsTrace> prefix;
    try {
        prefix = run_dynamics(cyc.instance, *cyc.initial_assignment,
                              SchedulerPolicy::scripted(*cyc.script));
    } catch (const std::exception& e) {
        return std::string("cycling script prefix rejected: ") + e.what();
    }
    if (prefix->steps.size() != cyc.script->size()) return "cycling prefix incomplete";
    DynamicsTrace rotation =
        run_dynamics(cyc.instance, prefix->final_assignment, SchedulerPolicy::first(), 10000);
    if (rotation.outcome != DynamicsTrace::Outcome::CycleDetected)
        return "post-prefix dynamics did not cycle";
    return std::nullopt;
}

std::optional<std::string> criterion_local_optimum_correspondences() {
    FailureLog log;
    parallel_chunks(50, [&](long long lo, long long hi) {
        for (long long seed = lo; seed < hi && log.ok(); ++seed) {
            testgen::Rng rng(5000 + seed);
            int t = rng.range(2, 5);
            std::vector<std::vector<Rational>> w(t, std::vector<Rational>(t, Rational(0)));
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j) w[i][j] = w[j][i] = rng.rational(3, 3);
            if (!verify_local_optimum_correspondence(WeightedCompleteGraph(t, w)))
                log.record("flip correspondence failed at seed " + std::to_string(seed));
        }
    });
    if (log.first) return log.first;
    parallel_chunks(50, [&](long long lo, long long hi) {
        for (long long seed = lo; seed < hi && log.ok(); ++seed) {
            testgen::Rng rng(6000 + seed);
            int n = 2 * rng.range(2, 4);  // 2t <= 8
            std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = rng.rational(3, 3);
            if (!verify_swap_partition_correspondence(WeightedCompleteGraph(n, w)))
                log.record("swap correspondence failed at seed " + std::to_string(seed));
        }
    });
    return log.first;
}

std::optional<std::string> criterion_swap_appendix() {
    for (int seed = 0; seed < 100; ++seed) {
        TdgInstance inst = testgen::random_symmetric_instance(7000 + seed, 6, 8);
        Assignment lambda = testgen::random_assignment(90000 + seed, inst);
        Rational phi = potential_phi(inst, lambda);
        for (int i = 0; i < inst.n(); ++i)
            for (int j = i + 1; j < inst.n(); ++j) {
                Assignment swapped = swap_agents(lambda, i, j);
                Rational di = utility(inst, swapped, i) - utility(inst, lambda, i);
                Rational dj = utility(inst, swapped, j) - utility(inst, lambda, j);
                if (!(potential_phi(inst, swapped) - phi == Rational(2) * (di + dj)))
                    return "swap doubling identity violated at seed " + std::to_string(seed);
            }
    }
    GadgetOutput rm = gadget_roommates_no_swap();
    if (exists_swap_stable(rm.instance).exists)
        return "roommates instance unexpectedly has a swap stable assignment";
    GadgetOutput sc = gadget_swap_cycle();
    for (const SchedulerPolicy& policy : {SchedulerPolicy::first(), SchedulerPolicy::best(),
                                          SchedulerPolicy::seeded_random(42)}) {
        DynamicsTrace trace = run_swap_dynamics(sc.instance, *sc.initial_assignment, policy, 64);
        if (trace.outcome != DynamicsTrace::Outcome::CycleDetected)
            return "swap start did not cycle within 64 steps";
    }
    if (!is_swap_stable(sc.instance, *sc.witness_assignment))
        return "swap witness is not swap stable";
    return std::nullopt;
}

std::optional<std::string> criterion_nonexistence_floor() {
    FailureLog log;
    std::atomic<long long> qualifying{0};
    for (int v = 4; v <= 7 && log.ok(); ++v) {
        const int pair_count = v * (v - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j) pairs.push_back({i, j});
        const long long masks = 1ll << pair_count;
        parallel_chunks(masks, [&](long long lo, long long hi) {
            for (long long mask = lo; mask < hi && log.ok(); ++mask) {
                // Quick bitmask screen: connected with diameter >= 3.
                unsigned adjacency[7] = {0, 0, 0, 0, 0, 0, 0};
                for (int p = 0; p < pair_count; ++p)
                    if ((mask >> p) & 1) {
                        adjacency[pairs[p].first] |= 1u << pairs[p].second;
                        adjacency[pairs[p].second] |= 1u << pairs[p].first;
                    }
                unsigned reach = 1, frontier = 1;
                while (frontier) {
                    unsigned next = 0;
                    for (int i = 0; i < v; ++i)
                        if ((frontier >> i) & 1) next |= adjacency[i];
                    frontier = next & ~reach;
                    reach |= next;
                }
                if (reach != (1u << v) - 1) continue;
                bool far_pair = false;  // some pair non-adjacent without a common neighbour
                for (int i = 0; i < v && !far_pair; ++i)
                    for (int j = i + 1; j < v && !far_pair; ++j) {
                        if ((adjacency[i] >> j) & 1) continue;
                        if ((adjacency[i] & adjacency[j]) == 0) far_pair = true;
                    }
                if (!far_pair) continue;  // diameter <= 2
                qualifying.fetch_add(1, std::memory_order_relaxed);
                std::vector<std::pair<int, int>> edges;
                for (int p = 0; p < pair_count; ++p)
                    if ((mask >> p) & 1) edges.push_back(pairs[p]);
                GadgetOutput g = gadget_cat_and_mouse(TopologyGraph(v, std::move(edges)));
                if (exists_jump_stable(g.instance).exists) {
                    log.record("stable assignment found on a diameter>=3 topology (v=" +
                               std::to_string(v) + " mask=" + std::to_string(mask) + ")");
                    return;
                }
            }
        });
    }
    if (log.first) return log.first;
    if (qualifying.load() < 1000)
        return "suspiciously few qualifying topologies: " + std::to_string(qualifying.load());
    // The 5-node star has diameter 2: a stable assignment exists there.
    UtilityMatrix u(2);
    u.set(0, 1, Rational(1));
    u.set(1, 0, Rational(-1));
    TdgInstance star(std::move(u), TopologyGraph::star(5), DistanceFactor::reciprocal());
    if (!exists_jump_stable(star).exists) return "no stable assignment on the 5-node star";
    return std::nullopt;
}

struct Criterion {
    int number;
    std::string description;
    std::function<std::optional<std::string>()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "symmetric utilities: every policy converges with strictly rising phi and exact "
            "doubling",
         criterion_symmetric_convergence},
        {2, "acyclic friendship + non-negative utilities: greedy solver output is stable and "
            "oracle-confirmed",
         criterion_acyclic_solver},
        {3, "cycle topology, one friend each: solver verdict equals brute force on all "
            "functional graphs up to n=6",
         criterion_cycle_characterization},
        {4, "six agents on the three-branch tree: no stable assignment among all 151200 "
            "placements",
         criterion_tree_counterexample},
        {5, "extended star: published 16-agent layout plus 20 random admissible configurations "
            "are stable",
         criterion_extended_star},
        {6, "path topology with at most two friends: 100 greedy constructions are stable",
         criterion_path_solver},
        {7, "separable-game chain of order k: scripted replay makes at least 2^k tip jumps "
            "for k=1..10",
         criterion_exponential_dynamics},
        {8, "acyclic dynamics: every trace lex-increases the utility vector; all starts "
            "necessarily converge",
         criterion_lexicographic_potential},
        {9, "cover-existence reduction at the minimal padded shape: witness stable, zero "
            "identity exact",
         criterion_exjump_witness},
        {10, "dynamics reductions: convergence script reaches stability; cycling prefix then "
             "perpetual rotation",
         criterion_dynamics_gadget_scripts},
        {11, "flip and swap local-optimum correspondences hold on 50 seeded weighted graphs "
             "each",
         criterion_local_optimum_correspondences},
        {12, "swap appendix: doubling identity, roommates non-existence, necessary swap "
             "cycling",
         criterion_swap_appendix},
        {13, "two-agent chase: unstable on every connected diameter>=3 topology up to 7 nodes; "
             "stable on the 5-node star",
         criterion_nonexistence_floor},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::optional<std::string> failure;
        try {
            failure = criterion.run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ++failures;
            std::cout << "criterion " << criterion.number << ": FAIL - " << criterion.description
                      << " (" << *failure << ")" << std::endl;
        } else {
            std::cout << "criterion " << criterion.number << ": PASS - " << criterion.description
                      << std::endl;
        }
    }
    if (failures == 0) std::cout << "all 13 criteria passed" << std::endl;
    return failures;
}
