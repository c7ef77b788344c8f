#include "tdg/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdg {

DistanceFactor DistanceFactor::table(std::vector<Rational> values) {
    if (values.empty()) throw std::invalid_argument("factor table: empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].positive())
            throw std::invalid_argument("factor table: values must be positive");
        if (i > 0 && !(values[i] < values[i - 1]))
            throw std::invalid_argument("factor table: values must be strictly decreasing");
    }
    return DistanceFactor(FactorKind::Table, std::move(values));
}

Rational factor_at(const DistanceFactor& factor, Distance d) {
    if (d == kInfiniteDistance) return Rational(0);
    if (d < 1) throw std::invalid_argument("factor: distance must be >= 1");
    if (factor.kind() == FactorKind::Reciprocal) return Rational(1, d);
    const auto& t = factor.table_values();
    if (static_cast<std::size_t>(d) > t.size())
        throw std::out_of_range("factor table too short");
    return t[d - 1];
}

UtilityMatrix::UtilityMatrix(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("utilities: agent count must be positive");
    cells_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

UtilityMatrix::UtilityMatrix(std::vector<std::vector<Rational>> rows)
    : UtilityMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(rows[i].size()) != n_)
            throw std::invalid_argument("utilities: matrix is not square");
        for (int j = 0; j < n_; ++j) set(i, j, std::move(rows[i][j]));
    }
}

void UtilityMatrix::set(int i, int j, Rational v) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("utilities: index out of range");
    if (i == j && !v.is_zero())
        throw std::invalid_argument("utilities: diagonal must be zero");
    cells_[static_cast<std::size_t>(i) * n_ + j] = std::move(v);
}

bool UtilityMatrix::symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

bool UtilityMatrix::non_negative() const {
    for (const auto& c : cells_)
        if (c.negative()) return false;
    return true;
}

FriendshipGraph::FriendshipGraph(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_(n) {
    for (const auto& [i, j] : arcs_) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw std::invalid_argument("friendship: bad arc");
        out_[i].push_back(j);
        in_[j].push_back(i);
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
    std::sort(arcs_.begin(), arcs_.end());
}

bool FriendshipGraph::has_arc(int i, int j) const {
    return std::binary_search(out_[i].begin(), out_[i].end(), j);
}

FriendshipGraph friendship_graph(const UtilityMatrix& u) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < u.n(); ++i)
        for (int j = 0; j < u.n(); ++j)
            if (u.at(i, j).positive()) arcs.push_back({i, j});
    return FriendshipGraph(u.n(), std::move(arcs));
}

std::vector<int> topological_order(const FriendshipGraph& fg) {
    const int n = fg.n();
    std::vector<int> unplaced_friends(n);
    for (int i = 0; i < n; ++i) unplaced_friends[i] = fg.out_degree(i);
    std::vector<char> placed(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (!placed[i] && unplaced_friends[i] == 0) {
                pick = i;
                break;
            }
        if (pick == -1) throw std::invalid_argument("no topological order");
        placed[pick] = 1;
        order.push_back(pick);
        for (int liker : fg.likers_of(pick)) --unplaced_friends[liker];
    }
    return order;
}

bool is_topological_order(const FriendshipGraph& fg, const std::vector<int>& order) {
    const int n = fg.n();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        int a = order[k];
        if (a < 0 || a >= n || pos[a] != -1) return false;
        pos[a] = k;
    }
    for (const auto& [i, j] : fg.arcs())
        if (pos[i] <= pos[j]) return false;
    return true;
}

Assignment::Assignment(std::vector<int> placement) : placement_(std::move(placement)) {
    if (placement_.empty()) throw std::invalid_argument("assignment: empty placement");
    std::vector<int> sorted = placement_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) throw std::invalid_argument("assignment: negative node index");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("assignment: not injective");
}

bool Assignment::occupies(int node) const {
    return std::find(placement_.begin(), placement_.end(), node) != placement_.end();
}

Assignment jump(const Assignment& lambda, int agent, int node) {
    if (agent < 0 || agent >= lambda.n())
        throw std::invalid_argument("jump: agent out of range");
    if (node < 0) throw std::invalid_argument("jump: negative node");
    if (lambda.occupies(node)) throw std::invalid_argument("target occupied");
    std::vector<int> p = lambda.placement();
    p[agent] = node;
    return Assignment(std::move(p));
}

Assignment swap_agents(const Assignment& lambda, int i, int j) {
    if (i < 0 || j < 0 || i >= lambda.n() || j >= lambda.n())
        throw std::invalid_argument("swap: agent out of range");
    if (i == j) throw std::invalid_argument("self swap");
    std::vector<int> p = lambda.placement();
    std::swap(p[i], p[j]);
    return Assignment(std::move(p));
}

TdgInstance::TdgInstance(UtilityMatrix utilities, TopologyGraph topology, DistanceFactor factor)
    : utilities_(std::move(utilities)),
      topology_(std::move(topology)),
      factor_(std::move(factor)),
      zero_(0) {
    if (topology_.node_count() < utilities_.n())
        throw std::invalid_argument("instance: fewer nodes than agents");
    distances_ = all_pairs_distances(topology_);

    Distance max_d = 0;
    for (int i = 0; i < topology_.node_count(); ++i)
        for (int j = i + 1; j < topology_.node_count(); ++j) {
            Distance d = distances_.at(i, j);
            if (d != kInfiniteDistance) max_d = std::max(max_d, d);
        }
    if (factor_.kind() == FactorKind::Table && factor_.max_table_distance() < max_d)
        throw std::out_of_range("factor table too short");

    factor_by_distance_.reserve(max_d + 1);
    factor_by_distance_.push_back(Rational(0));  // distance 0 never queried
    for (Distance d = 1; d <= max_d; ++d) factor_by_distance_.push_back(factor_at(factor_, d));

    nonzero_rows_.resize(utilities_.n());
    for (int i = 0; i < utilities_.n(); ++i)
        for (int j = 0; j < utilities_.n(); ++j)
            if (i != j && !utilities_.at(i, j).is_zero())
                nonzero_rows_[i].push_back({j, utilities_.at(i, j)});

    symmetric_ = utilities_.symmetric();
}

Rational TdgInstance::agent_utility_with_agent_at(const Assignment& lambda, int agent,
                                                  int node) const {
    Rational sum(0);
    for (const auto& [j, u] : nonzero_rows_[agent]) {
        Distance d = distances_.at(node, lambda.node_of(j));
        if (d != kInfiniteDistance) sum += factor_by_distance_[d] * u;
    }
    return sum;
}

Rational TdgInstance::agent_utility(const Assignment& lambda, int agent) const {
    return agent_utility_with_agent_at(lambda, agent, lambda.node_of(agent));
}

Rational TdgInstance::agent_utility_after_swap(const Assignment& lambda, int i, int j,
                                               int agent) const {
    const int ni = lambda.node_of(i), nj = lambda.node_of(j);
    const int self = agent == i ? nj : ni;
    const int other = agent == i ? j : i;
    const int other_node = agent == i ? ni : nj;
    Rational sum(0);
    for (const auto& [k, u] : nonzero_rows_[agent]) {
        int pos = k == other ? other_node : lambda.node_of(k);
        Distance d = distances_.at(self, pos);
        if (d != kInfiniteDistance) sum += factor_by_distance_[d] * u;
    }
    return sum;
}

void TdgInstance::validate_assignment(const Assignment& lambda) const {
    if (lambda.n() != n())
        throw std::invalid_argument("assignment: wrong number of agents");
    for (int a = 0; a < n(); ++a)
        if (lambda.node_of(a) >= node_count())
            throw std::invalid_argument("assignment: node index out of range");
}

Rational utility(const TdgInstance& instance, const Assignment& lambda, int agent) {
    instance.validate_assignment(lambda);
    if (agent < 0 || agent >= instance.n())
        throw std::invalid_argument("utility: agent out of range");
    return instance.agent_utility(lambda, agent);
}

}  // namespace tdg
