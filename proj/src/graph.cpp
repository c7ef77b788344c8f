#include "tdg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace tdg {

TopologyGraph::TopologyGraph(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count) {
    if (node_count <= 0) throw std::invalid_argument("topology: node count must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= node_count || b >= node_count)
            throw std::invalid_argument("topology: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("topology: self-loop");
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second)
            throw std::invalid_argument("topology: duplicate edge");
    }
    edges_.assign(seen.begin(), seen.end());
    adjacency_.assign(node_count, {});
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool TopologyGraph::connected() const {
    std::vector<char> seen(node_count_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == node_count_;
}

Distance TopologyGraph::diameter() const {
    DistanceMatrix d = all_pairs_distances(*this);
    Distance best = 0;
    for (int i = 0; i < node_count_; ++i)
        for (int j = i + 1; j < node_count_; ++j) {
            Distance dij = d.at(i, j);
            if (dij == kInfiniteDistance) return kInfiniteDistance;
            best = std::max(best, dij);
        }
    return best;
}

TopologyGraph TopologyGraph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return TopologyGraph(n, std::move(e));
}

TopologyGraph TopologyGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("topology: cycle needs at least 3 nodes");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return TopologyGraph(n, std::move(e));
}

TopologyGraph TopologyGraph::star(int n) {
    if (n < 2) throw std::invalid_argument("topology: star needs at least 2 nodes");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return TopologyGraph(n, std::move(e));
}

TopologyGraph TopologyGraph::clique(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return TopologyGraph(n, std::move(e));
}

TopologyGraph TopologyGraph::disjoint_cliques(int count, int size) {
    std::vector<std::pair<int, int>> e;
    for (int c = 0; c < count; ++c) {
        int base = c * size;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) e.push_back({base + i, base + j});
    }
    return TopologyGraph(count * size, std::move(e));
}

DistanceMatrix all_pairs_distances(const TopologyGraph& g) {
    const int n = g.node_count();
    std::vector<Distance> cells(static_cast<std::size_t>(n) * n, kInfiniteDistance);
    std::vector<int> queue(n);
    for (int src = 0; src < n; ++src) {
        Distance* row = cells.data() + static_cast<std::size_t>(src) * n;
        row[src] = 0;
        int head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            int v = queue[head++];
            Distance dv = row[v];
            for (int w : g.neighbors(v))
                if (row[w] == kInfiniteDistance) {
                    row[w] = dv + 1;
                    queue[tail++] = w;
                }
        }
    }
    return DistanceMatrix(n, std::move(cells));
}

}  // namespace tdg
