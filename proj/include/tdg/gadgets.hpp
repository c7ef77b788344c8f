#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdg/instance.hpp"

namespace tdg {

// Exact-3-Cover input: ground set {0..ground_size-1} (size a multiple of 3)
// and a collection of 3-element subsets.
struct X3cInstance {
    int ground_size;
    std::vector<std::array<int, 3>> sets;

    X3cInstance(int ground_size, std::vector<std::array<int, 3>> sets);
    int cover_size() const { return ground_size / 3; }
    // True when the given set indices are disjoint and cover the ground set.
    bool is_exact_cover(const std::vector<int>& set_indices) const;
};

struct PaddedX3c {
    X3cInstance instance;
    int k_added;      // number of fresh element triples appended
    bool trivial_no;  // input had 3|S| < |R|: unpaddable into the surplus regime
};

// Appends 3k fresh elements and k fresh triples (one per element triple),
// with k minimal such that |R| > 3 and |R| > 3|S| - |R|/3 + 10 hold. The
// balance 3|S| - |R| is invariant under this padding, so a deficient input
// stays deficient (flagged trivial_no). Yes-instances map to Yes-instances.
PaddedX3c pad_x3c_for_exjump(const X3cInstance& x);

// Appends 3k fresh elements and every 3-element subset of them, with k
// minimal such that 3|S| > 2|R| holds. Yes-instances map to Yes-instances.
PaddedX3c pad_x3c_for_dynconv(const X3cInstance& x);

// Complete undirected weighted graph on t vertices (symmetric rational
// weight matrix, zero diagonal).
struct WeightedCompleteGraph {
    int t;
    std::vector<std::vector<Rational>> weights;

    WeightedCompleteGraph(int t, std::vector<std::vector<Rational>> weights);
    const Rational& weight(int x, int y) const { return weights[x][y]; }
};

// A constructed instance family member together with everything the family's
// argument pins down: a starting assignment, a stability witness, a move
// script, and free-form metadata (component boundaries, agent role labels).
struct GadgetOutput {
    TdgInstance instance;
    std::optional<Assignment> initial_assignment;
    std::optional<Assignment> witness_assignment;
    std::optional<std::vector<Move>> script;
    std::map<std::string, std::string> metadata;
};

// Two agents, one chasing and one fleeing (u_0(1) = 1, u_1(0) = -1), on the
// given connected topology of diameter >= 3; no stable assignment exists.
// Throws std::invalid_argument on a disconnected topology or
// ("diameter too small") below the threshold.
GadgetOutput gadget_cat_and_mouse(const TopologyGraph& topology);

// Six agents whose friendship graph is a 6-cycle, on a 10-node tree (center
// plus three length-3 branches); no jump stable assignment exists.
GadgetOutput gadget_tree_counterexample();

// Separable-game family of order k embedded as n = 2k+1 disjoint n-cliques;
// includes the all-singletons start and the recursive jump script in which
// the order-k chain agent jumps 2^k times. Guard: k >= 1.
GadgetOutput gadget_exponential_family(int k);

// Stable-assignment-existence reduction from Exact-3-Cover. Requires the
// padded regime (|R| > 3 and 3|S| > |R| > 3|S| - |R|/3 + 10; see
// pad_x3c_for_exjump), else throws naming the violated bound. When an exact
// cover is supplied, the corresponding stable witness assignment is emitted.
GadgetOutput gadget_exjump(const X3cInstance& x,
                           const std::optional<std::vector<int>>& cover = std::nullopt);

// Possible-convergence reduction from Exact-3-Cover (requires 3|S| > 2|R|;
// see pad_x3c_for_dynconv). When an exact cover is supplied, the script
// replays to a stable assignment.
GadgetOutput gadget_dynconv(const X3cInstance& x, const DistanceFactor& factor,
                            const std::optional<std::vector<int>>& cover = std::nullopt);

// Possible-cycling reduction from Exact-3-Cover. When an exact cover is
// supplied, the script prefix frees the 4-cycle and the three cyclic agents
// rotate forever afterwards.
GadgetOutput gadget_dyncycle(const X3cInstance& x, const DistanceFactor& factor,
                             const std::optional<std::vector<int>>& cover = std::nullopt);

// Max-Cut/Flip local search as a TDG: negated symmetric weights on two
// t-cliques; jump stable assignments correspond to Flip-local optima.
GadgetOutput gadget_maxcut_reduction(const WeightedCompleteGraph& g);

// Graph-Partitioning/Swap local search as a TDG: positive-signed weights on
// two cliques with |V| = n (full occupancy); swap stable assignments
// correspond to Swap-local optima. Vertex count must be even.
GadgetOutput gadget_graph_partitioning_reduction(const WeightedCompleteGraph& g);

// Four-agent roommates instance on two disjoint edges with no swap stable
// assignment.
GadgetOutput gadget_roommates_no_swap();

// Six agents (two friendship 3-cycles) on a 6-cycle; the emitted initial
// assignment necessarily cycles under swaps while the witness is swap stable.
GadgetOutput gadget_swap_cycle();

}  // namespace tdg
