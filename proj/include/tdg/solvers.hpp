#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdg/instance.hpp"

namespace tdg {

enum class SolveMethod { AcyclicGreedy, CycleOnCycle, PathGreedy, ExtendedStar };

struct PreconditionCheck {
    std::string name;
    bool passed;
};

// Outcome of one constructive solver. Whenever an assignment is present it
// has already been re-verified with is_jump_stable; construction bugs surface
// as exceptions, never as silently unstable output.
struct SolverReport {
    enum class Status { Assigned, NonExistent, NotApplicable };

    Status status;
    SolveMethod method;
    std::optional<Assignment> assignment;
    std::vector<PreconditionCheck> preconditions_checked;
    // ExtendedStar only: relabeling[k] = original agent playing cycle position k.
    std::optional<std::vector<int>> relabeling;

    bool assigned() const { return status == Status::Assigned; }
};

// Greedy placement in topological order; applicable when the friendship graph
// is acyclic and all utilities are non-negative. Each agent is placed on an
// empty node maximizing her utility against already-placed agents
// (ties: lowest node index).
SolverReport solve_acyclic(const TdgInstance& instance);

// Full exists/NonExistent characterization when the topology is a single
// cycle and every agent has at most one friend (zero for everyone else, all
// utilities non-negative). NonExistent exactly when the friendship graph is a
// 3-cycle or a 5-cycle covering all agents; otherwise a stable assignment is
// composed from the per-cycle-length block patterns plus greedy placement of
// the acyclic remainder.
SolverReport solve_cycle_on_cycle(const TdgInstance& instance);

// Left-to-right greedy on a path topology when every agent has at most two
// friends and utilities are non-negative.
SolverReport solve_path(const TdgInstance& instance);

// Branch-filling construction for an extended-star topology with k >= 3
// branches, n >= 5k+1 agents and a friendship graph that is one directed
// cycle through all agents (non-negative utilities).
SolverReport solve_extended_star(const TdgInstance& instance);

}  // namespace tdg
