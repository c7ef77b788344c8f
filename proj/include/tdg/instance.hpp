#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tdg/graph.hpp"
#include "tdg/rational.hpp"

namespace tdg {

enum class FactorKind { Reciprocal, Table };

// Strictly decreasing positive function of graph distance. Arbitrary factor
// functions are represented as finite tables: only finitely many distances
// occur on a finite topology. The factor across components is fixed to 0 by
// the model and never stored.
class DistanceFactor {
public:
    static DistanceFactor reciprocal() { return DistanceFactor(FactorKind::Reciprocal, {}); }
    // values[k] is the factor at distance k+1. Must be strictly decreasing, all > 0.
    static DistanceFactor table(std::vector<Rational> values);

    FactorKind kind() const { return kind_; }
    const std::vector<Rational>& table_values() const { return values_; }
    int max_table_distance() const { return static_cast<int>(values_.size()); }

private:
    DistanceFactor(FactorKind k, std::vector<Rational> v) : kind_(k), values_(std::move(v)) {}
    FactorKind kind_;
    std::vector<Rational> values_;
};

// f(d) for finite d >= 1, 0 for the infinite sentinel.
// Throws std::out_of_range("factor table too short") past the table,
// std::invalid_argument for d == 0.
Rational factor_at(const DistanceFactor& factor, Distance d);

// Inherent agent-to-agent utilities; diagonal is identically zero.
class UtilityMatrix {
public:
    explicit UtilityMatrix(int n);
    explicit UtilityMatrix(std::vector<std::vector<Rational>> rows);

    int n() const { return n_; }
    const Rational& at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, Rational v);  // i == j with v != 0 is rejected

    bool symmetric() const;
    bool non_negative() const;

private:
    int n_;
    std::vector<Rational> cells_;
};

// Directed graph with an arc i -> j exactly when u_i(j) > 0.
class FriendshipGraph {
public:
    FriendshipGraph(int n, std::vector<std::pair<int, int>> arcs);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& friends_of(int i) const { return out_[i]; }
    const std::vector<int>& likers_of(int j) const { return in_[j]; }
    int out_degree(int i) const { return static_cast<int>(out_[i].size()); }
    bool has_arc(int i, int j) const;

private:
    int n_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;
};

FriendshipGraph friendship_graph(const UtilityMatrix& u);

// Placement order for the greedy constructions: every agent appears after all
// of her friends. Kahn's algorithm with lowest-index tie-break.
// Throws std::invalid_argument("no topological order") when cyclic.
std::vector<int> topological_order(const FriendshipGraph& fg);

bool is_topological_order(const FriendshipGraph& fg, const std::vector<int>& order);

// Injective agent -> node map.
class Assignment {
public:
    explicit Assignment(std::vector<int> placement);

    int n() const { return static_cast<int>(placement_.size()); }
    int node_of(int agent) const { return placement_[agent]; }
    const std::vector<int>& placement() const { return placement_; }
    bool occupies(int node) const;

    bool operator==(const Assignment& o) const { return placement_ == o.placement_; }

private:
    std::vector<int> placement_;
};

// One dynamics move: a jump target node, or the swap partner in swap dynamics.
struct Move {
    int agent;
    int target;
    bool operator==(const Move&) const = default;
};

// Agent `agent` moves to the empty node `node`; everyone else stays put.
// Throws std::invalid_argument("target occupied") when the node is taken.
Assignment jump(const Assignment& lambda, int agent, int node);

// Agents i and j exchange nodes. Throws std::invalid_argument("self swap").
Assignment swap_agents(const Assignment& lambda, int i, int j);

// The full game: utilities, topology, distance factor. Immutable after
// construction; distances, per-distance factor values and sparse utility rows
// are cached up front so all evaluation is lookup plus exact arithmetic.
class TdgInstance {
public:
    TdgInstance(UtilityMatrix utilities, TopologyGraph topology, DistanceFactor factor);

    int n() const { return utilities_.n(); }
    int node_count() const { return topology_.node_count(); }
    const UtilityMatrix& utilities() const { return utilities_; }
    const TopologyGraph& topology() const { return topology_; }
    const DistanceFactor& factor() const { return factor_; }
    const DistanceMatrix& distances() const { return distances_; }
    bool symmetric() const { return symmetric_; }

    // Cached f(d); d == kInfiniteDistance yields the zero constant.
    const Rational& factor_value(Distance d) const {
        return d == kInfiniteDistance ? zero_ : factor_by_distance_[d];
    }

    // Nonzero entries of the agent's utility row, ascending by co-agent.
    const std::vector<std::pair<int, Rational>>& nonzero_row(int agent) const {
        return nonzero_rows_[agent];
    }

    // Sum over friends and foes of f(distance) * u. The three flavours share
    // the evaluation loop; the overrides make jump/swap deltas cheap.
    Rational agent_utility(const Assignment& lambda, int agent) const;
    Rational agent_utility_with_agent_at(const Assignment& lambda, int agent, int node) const;
    Rational agent_utility_after_swap(const Assignment& lambda, int i, int j, int agent) const;

    // Size, node range and injectivity; throws std::invalid_argument.
    void validate_assignment(const Assignment& lambda) const;

private:
    UtilityMatrix utilities_;
    TopologyGraph topology_;
    DistanceFactor factor_;
    DistanceMatrix distances_;
    std::vector<Rational> factor_by_distance_;
    std::vector<std::vector<std::pair<int, Rational>>> nonzero_rows_;
    bool symmetric_;
    Rational zero_;
};

// The utility formula: sum over j != i of f(d(lambda(i), lambda(j))) * u_i(j).
Rational utility(const TdgInstance& instance, const Assignment& lambda, int agent);

}  // namespace tdg
