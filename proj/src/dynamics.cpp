#include "tdg/dynamics.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "tdg/gadgets.hpp"
#include "tdg/stability.hpp"

namespace tdg {

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Deterministic across platforms, unlike the standard distributions.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t bound) { return next() % bound; }
};

DynamicsTrace run_generic(const TdgInstance& instance, const Assignment& start,
                          const SchedulerPolicy& policy, long long max_steps, MoveNotion notion) {
    instance.validate_assignment(start);
    const bool track_phi = instance.symmetric();

    DynamicsTrace trace{DynamicsTrace::Outcome::StepLimit, -1, {}, {}, start};
    std::unordered_map<std::vector<int>, int, VectorHash> seen;
    Assignment current = start;
    seen.emplace(current.placement(), 0);
    if (track_phi) trace.phi_values.push_back(potential_phi(instance, current));

    SplitMix64 rng{policy.seed ^ 0x6a09e667f3bcc908ull};
    std::size_t script_cursor = 0;
    long long steps = 0;

    for (;;) {
        if (policy.kind == SchedulerPolicy::Kind::Scripted &&
            script_cursor == policy.script.size()) {
            const bool stable = notion == MoveNotion::Jump ? is_jump_stable(instance, current)
                                                           : is_swap_stable(instance, current);
            trace.outcome =
                stable ? DynamicsTrace::Outcome::Converged : DynamicsTrace::Outcome::StepLimit;
            break;
        }

        DynamicsStep step;
        Assignment next = current;  // overwritten below
        if (policy.kind == SchedulerPolicy::Kind::Scripted) {
            const Move move = policy.script[script_cursor];
            const std::string where = "scripted step " + std::to_string(script_cursor);
            if (move.agent < 0 || move.agent >= instance.n())
                throw std::invalid_argument(where + ": agent out of range");
            if (notion == MoveNotion::Jump) {
                if (move.target < 0 || move.target >= instance.node_count())
                    throw std::invalid_argument(where + ": node out of range");
                if (current.occupies(move.target))
                    throw std::invalid_argument(where + ": target occupied");
                Rational before = instance.agent_utility(current, move.agent);
                Rational after =
                    instance.agent_utility_with_agent_at(current, move.agent, move.target);
                if (!(after > before))
                    throw std::invalid_argument(where + ": not a beneficial jump");
                step = {move.agent, current.node_of(move.agent), move.target, after - before};
                next = jump(current, move.agent, move.target);
            } else {
                if (move.target < 0 || move.target >= instance.n() || move.target == move.agent)
                    throw std::invalid_argument(where + ": bad swap partner");
                Rational gi = instance.agent_utility_after_swap(current, move.agent, move.target,
                                                                move.agent) -
                              instance.agent_utility(current, move.agent);
                Rational gj = instance.agent_utility_after_swap(current, move.agent, move.target,
                                                                move.target) -
                              instance.agent_utility(current, move.target);
                if (!(gi.positive() && gj.positive()))
                    throw std::invalid_argument(where + ": not a beneficial swap");
                step = {move.agent, current.node_of(move.agent), current.node_of(move.target),
                        std::move(gi)};
                next = swap_agents(current, move.agent, move.target);
            }
            ++script_cursor;
        } else {
            std::vector<Deviation> options = notion == MoveNotion::Jump
                                                 ? beneficial_jumps(instance, current)
                                                 : beneficial_swaps(instance, current);
            if (options.empty()) {
                trace.outcome = DynamicsTrace::Outcome::Converged;
                break;
            }
            std::size_t pick = 0;
            switch (policy.kind) {
                case SchedulerPolicy::Kind::FirstDeviator:
                    pick = 0;
                    break;
                case SchedulerPolicy::Kind::BestGain:
                    for (std::size_t i = 1; i < options.size(); ++i)
                        if (options[i].gain > options[pick].gain) pick = i;
                    break;
                case SchedulerPolicy::Kind::SeededRandom:
                    pick = rng.below(options.size());
                    break;
                case SchedulerPolicy::Kind::Scripted:
                    break;  // unreachable
            }
            const Deviation& d = options[pick];
            if (d.kind == Deviation::Kind::Jump) {
                step = {d.agent, current.node_of(d.agent), d.target, d.gain};
                next = jump(current, d.agent, d.target);
            } else {
                step = {d.agent, current.node_of(d.agent), current.node_of(d.target), d.gain};
                next = swap_agents(current, d.agent, d.target);
            }
        }

        current = std::move(next);
        trace.steps.push_back(std::move(step));
        if (track_phi) trace.phi_values.push_back(potential_phi(instance, current));
        ++steps;

        auto [it, inserted] = seen.emplace(current.placement(), static_cast<int>(seen.size()));
        if (!inserted) {
            trace.outcome = DynamicsTrace::Outcome::CycleDetected;
            trace.first_repeat_index = it->second;
            break;
        }
        if (steps >= max_steps) {
            trace.outcome = DynamicsTrace::Outcome::StepLimit;
            break;
        }
    }
    trace.final_assignment = std::move(current);
    return trace;
}

}  // namespace

DynamicsTrace run_dynamics(const TdgInstance& instance, const Assignment& start,
                           const SchedulerPolicy& policy, long long max_steps) {
    return run_generic(instance, start, policy, max_steps, MoveNotion::Jump);
}

DynamicsTrace run_swap_dynamics(const TdgInstance& instance, const Assignment& start,
                                const SchedulerPolicy& policy, long long max_steps) {
    return run_generic(instance, start, policy, max_steps, MoveNotion::Swap);
}

DynamicsTrace run_scripted_exponential(int k) {
    if (k < 1 || k > 14) throw std::invalid_argument("k out of range");
    GadgetOutput g = gadget_exponential_family(k);
    return run_dynamics(g.instance, *g.initial_assignment,
                        SchedulerPolicy::scripted(*g.script));
}

StateGraph explore_state_graph(const TdgInstance& instance, const Assignment& start,
                               long long state_limit, MoveNotion notion, int threads) {
    instance.validate_assignment(start);
    StateGraph graph;
    std::unordered_map<std::vector<int>, int, VectorHash> index;

    auto intern = [&](std::vector<int> placement) {
        auto [it, inserted] =
            index.emplace(std::move(placement), static_cast<int>(graph.states.size()));
        if (inserted) {
            if (static_cast<long long>(graph.states.size()) >= state_limit)
                throw std::runtime_error("state space too large");
            graph.states.push_back(it->first);
        }
        return it->second;
    };

    auto successors_of = [&](const std::vector<int>& placement) {
        Assignment lambda(placement);
        std::vector<Deviation> options = notion == MoveNotion::Jump
                                             ? beneficial_jumps(instance, lambda)
                                             : beneficial_swaps(instance, lambda);
        std::vector<std::vector<int>> out;
        out.reserve(options.size());
        for (const auto& d : options)
            out.push_back(d.kind == Deviation::Kind::Jump
                              ? jump(lambda, d.agent, d.target).placement()
                              : swap_agents(lambda, d.agent, d.target).placement());
        return out;
    };

    intern(start.placement());
    std::size_t level_begin = 0;
    while (level_begin < graph.states.size()) {
        const std::size_t level_end = graph.states.size();
        // Expand the whole level, in parallel when asked; interning stays
        // sequential in (parent, move) order so the graph is schedule-free.
        std::vector<std::vector<std::vector<int>>> expanded(level_end - level_begin);
        const std::size_t count = level_end - level_begin;
        if (threads > 1 && count > 1) {
            std::vector<std::thread> pool;
            std::atomic<std::size_t> next_item{0};
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        std::size_t i = next_item.fetch_add(1);
                        if (i >= count) return;
                        expanded[i] = successors_of(graph.states[level_begin + i]);
                    }
                });
            for (auto& t : pool) t.join();
        } else {
            for (std::size_t i = 0; i < count; ++i)
                expanded[i] = successors_of(graph.states[level_begin + i]);
        }
        for (std::size_t i = 0; i < count; ++i) {
            graph.stable_flags.push_back(expanded[i].empty());
            std::vector<int> successor_ids;
            successor_ids.reserve(expanded[i].size());
            for (auto& placement : expanded[i]) successor_ids.push_back(intern(std::move(placement)));
            graph.edges.push_back(std::move(successor_ids));
        }
        level_begin = level_end;
    }
    return graph;
}

bool possibly_converges(const StateGraph& graph) {
    for (bool stable : graph.stable_flags)
        if (stable) return true;
    return false;
}

bool necessarily_converges(const StateGraph& graph) {
    // Three-colour DFS for a directed cycle among reachable states.
    const int n = static_cast<int>(graph.states.size());
    std::vector<char> colour(n, 0);  // 0 white, 1 grey, 2 black
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < n; ++root) {
        if (colour[root] != 0) continue;
        colour[root] = 1;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& [v, next_edge] = stack.back();
            if (next_edge < graph.edges[v].size()) {
                int w = graph.edges[v][next_edge++];
                if (colour[w] == 1) return false;
                if (colour[w] == 0) {
                    colour[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                colour[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

}  // namespace tdg
