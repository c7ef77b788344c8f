#pragma once

#include <optional>

#include "tdg/gadgets.hpp"
#include "tdg/instance.hpp"

namespace tdg {

// Cap on exhaustive enumeration. Exceeding it raises std::runtime_error with
// the exact assignment count in the message.
struct OracleBudget {
    long long max_assignments = 10'000'000;
};

struct OracleResult {
    bool exists;
    std::optional<Assignment> witness;  // lexicographically first stable assignment
};

// Ground truth by enumeration of all |V|!/(|V|-n)! injective placements in
// lexicographic order. threads > 1 parallelizes over the first agent's node;
// the returned witness is still the global lexicographic first.
OracleResult exists_jump_stable(const TdgInstance& instance, const OracleBudget& budget = {},
                                int threads = 1);
OracleResult exists_swap_stable(const TdgInstance& instance, const OracleBudget& budget = {},
                                int threads = 1);

// Builds the Max-Cut/Flip reduction for the weighted graph, enumerates every
// assignment and every 2-partition, and checks that an assignment is jump
// stable exactly when its induced partition is Flip-locally optimal.
bool verify_local_optimum_correspondence(const WeightedCompleteGraph& g,
                                         const OracleBudget& budget = {});

// Swap analog: Graph-Partitioning under the Swap neighbourhood (balanced
// 2-partitions, cut minimized). Checks that phi local maxima coincide with
// cut local minima pointwise and that every phi local maximum is swap stable.
bool verify_swap_partition_correspondence(const WeightedCompleteGraph& g,
                                          const OracleBudget& budget = {});

}  // namespace tdg
