#pragma once

#include <utility>
#include <vector>

namespace tdg {

// Graph distances are exact hop counts. Cross-component pairs get the
// dedicated sentinel below, never a large number: the model fixes the
// distance factor across components to exactly zero.
using Distance = int;
inline constexpr Distance kInfiniteDistance = -1;

inline bool is_finite(Distance d) { return d >= 0; }

// Simple undirected graph of locations. May be disconnected.
class TopologyGraph {
public:
    TopologyGraph(int node_count, std::vector<std::pair<int, int>> edges);

    int node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    // Normalized (a < b), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

    bool connected() const;
    // kInfiniteDistance when disconnected.
    Distance diameter() const;

    static TopologyGraph path(int n);
    static TopologyGraph cycle(int n);
    // Star with n nodes total; node 0 is the center.
    static TopologyGraph star(int n);
    static TopologyGraph clique(int n);
    static TopologyGraph disjoint_cliques(int count, int size);

private:
    int node_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

class DistanceMatrix {
public:
    DistanceMatrix() : n_(0) {}
    DistanceMatrix(int n, std::vector<Distance> cells) : n_(n), cells_(std::move(cells)) {}
    int n() const { return n_; }
    Distance at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<Distance> cells_;
};

// Breadth-first search from every node.
DistanceMatrix all_pairs_distances(const TopologyGraph& g);

}  // namespace tdg
