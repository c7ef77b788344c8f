#pragma once

#include <vector>

#include "tdg/instance.hpp"

namespace tdg {

// A materialized beneficial deviation. Only strict improvements exist as
// Deviation values: jump gain > 0, and for swaps both gains > 0.
struct Deviation {
    enum class Kind { Jump, Swap };
    Kind kind;
    int agent;
    int target;           // empty node for Jump, the other agent for Swap
    Rational gain;        // the deviator's gain
    Rational gain_other;  // Swap only: the partner's gain
};

// Exactly the (agent, empty node) pairs with a strictly positive utility
// gain, in deterministic order: agent ascending, then node ascending.
std::vector<Deviation> beneficial_jumps(const TdgInstance& instance, const Assignment& lambda);

// All unordered pairs (i < j) where both agents strictly gain by exchanging
// nodes, ascending lexicographically.
std::vector<Deviation> beneficial_swaps(const TdgInstance& instance, const Assignment& lambda);

// Early-exit equivalents of "no beneficial deviation exists".
bool is_jump_stable(const TdgInstance& instance, const Assignment& lambda);
bool is_swap_stable(const TdgInstance& instance, const Assignment& lambda);

// Sum of all agents' utilities. Strictly increases under beneficial jumps
// and swaps when utilities are symmetric.
Rational potential_phi(const TdgInstance& instance, const Assignment& lambda);

// Utilities listed in the given placement order (a valid topological order of
// the friendship graph: each agent after all of her friends). Strictly
// lex-increases along beneficial jumps for non-negative acyclic instances.
// Throws std::invalid_argument("no topological order") for an invalid order.
std::vector<Rational> potential_lambda_vec(const TdgInstance& instance, const Assignment& lambda,
                                           const std::vector<int>& order);

}  // namespace tdg
