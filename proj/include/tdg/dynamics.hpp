#pragma once

#include <cstdint>
#include <vector>

#include "tdg/instance.hpp"
#include "tdg/rational.hpp"

namespace tdg {

// Deviator selection rule for a dynamics run. The model leaves the choice
// open; every policy here is deterministic given its parameters.
struct SchedulerPolicy {
    enum class Kind { FirstDeviator, BestGain, Scripted, SeededRandom };

    Kind kind = Kind::FirstDeviator;
    std::vector<Move> script;  // Scripted: jump -> (agent, node); swap -> (agent, agent)
    std::uint64_t seed = 0;

    static SchedulerPolicy first() { return {Kind::FirstDeviator, {}, 0}; }
    static SchedulerPolicy best() { return {Kind::BestGain, {}, 0}; }
    static SchedulerPolicy scripted(std::vector<Move> moves) {
        return {Kind::Scripted, std::move(moves), 0};
    }
    static SchedulerPolicy seeded_random(std::uint64_t seed) {
        return {Kind::SeededRandom, {}, seed};
    }
};

struct DynamicsStep {
    int agent;
    int from;
    int to;  // node (jump dynamics) or the swap partner's original node
    Rational gain;
};

struct DynamicsTrace {
    enum class Outcome { Converged, CycleDetected, StepLimit };

    Outcome outcome;
    // CycleDetected: index (into the visited-state sequence, start = 0) where
    // the repeated state was first seen.
    int first_repeat_index = -1;
    std::vector<DynamicsStep> steps;
    // Phi after every visited state, symmetric instances only (else empty).
    std::vector<Rational> phi_values;
    Assignment final_assignment;
};

// Repeatedly applies the policy's chosen beneficial jump until none exists
// (Converged; the final assignment is then jump stable), a state repeats
// (CycleDetected), or max_steps is hit. A Scripted run aborts with
// std::invalid_argument naming the step index if a scripted move is invalid
// or not strictly beneficial at execution time; a scripted run whose script
// ends at an unstable state reports StepLimit.
DynamicsTrace run_dynamics(const TdgInstance& instance, const Assignment& start,
                           const SchedulerPolicy& policy, long long max_steps = 1'000'000);

// Same process with beneficial swaps as moves (both agents must strictly gain).
DynamicsTrace run_swap_dynamics(const TdgInstance& instance, const Assignment& start,
                                const SchedulerPolicy& policy, long long max_steps = 1'000'000);

// Builds the exponential-dynamics family instance of order k (from the
// gadgets module) and replays its recursive jump script; the chain agent of
// order k performs 2^k jumps. Guard: 1 <= k <= 14.
DynamicsTrace run_scripted_exponential(int k);

enum class MoveNotion { Jump, Swap };

// Every assignment reachable from the start under beneficial moves.
struct StateGraph {
    std::vector<std::vector<int>> states;  // placements, discovery order; states[0] = start
    std::vector<std::vector<int>> edges;   // edges[s] = successor state ids (move order)
    std::vector<bool> stable_flags;
};

// Exhaustive reachable-state exploration. Throws std::runtime_error
// ("state space too large") when more than state_limit states are reached.
// threads > 1 expands each breadth-first level in parallel; discovered states
// are interned in deterministic (parent, move) order, so the resulting graph
// is identical for every thread count.
StateGraph explore_state_graph(const TdgInstance& instance, const Assignment& start,
                               long long state_limit = 10'000'000,
                               MoveNotion notion = MoveNotion::Jump, int threads = 1);

// Some reachable state is stable.
bool possibly_converges(const StateGraph& graph);

// The reachable subgraph is acyclic; with a finite state space this is
// exactly "every maximal sequence of beneficial moves terminates".
bool necessarily_converges(const StateGraph& graph);

}  // namespace tdg
