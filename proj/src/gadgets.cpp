#include "tdg/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace tdg {

namespace {

std::string range_str(int lo, int hi) {  // inclusive bounds, 0-based nodes
    return std::to_string(lo) + "-" + std::to_string(hi);
}

}  // namespace

X3cInstance::X3cInstance(int ground_size_, std::vector<std::array<int, 3>> sets_)
    : ground_size(ground_size_), sets(std::move(sets_)) {
    if (ground_size <= 0 || ground_size % 3 != 0)
        throw std::invalid_argument("x3c: ground set size must be a positive multiple of 3");
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (s[0] < 0 || s[2] >= ground_size || s[0] == s[1] || s[1] == s[2])
            throw std::invalid_argument("x3c: sets must hold 3 distinct elements in range");
    }
}

bool X3cInstance::is_exact_cover(const std::vector<int>& set_indices) const {
    if (static_cast<int>(set_indices.size()) != cover_size()) return false;
    std::vector<char> hit(ground_size, 0);
    for (int idx : set_indices) {
        if (idx < 0 || idx >= static_cast<int>(sets.size())) return false;
        for (int e : sets[idx]) {
            if (hit[e]) return false;
            hit[e] = 1;
        }
    }
    return true;
}

PaddedX3c pad_x3c_for_exjump(const X3cInstance& x) {
    const long long balance = 3ll * static_cast<long long>(x.sets.size()) - x.ground_size;
    int k = 0;
    for (;; ++k) {
        const long long r = x.ground_size + 3ll * k;
        const long long s = static_cast<long long>(x.sets.size()) + k;
        if (r > 3 && 4 * r > 9 * s + 30) break;
    }
    std::vector<std::array<int, 3>> sets = x.sets;
    for (int i = 0; i < k; ++i) {
        int base = x.ground_size + 3 * i;
        sets.push_back({base, base + 1, base + 2});
    }
    return {X3cInstance(x.ground_size + 3 * k, std::move(sets)), k, balance < 0};
}

PaddedX3c pad_x3c_for_dynconv(const X3cInstance& x) {
    auto satisfied = [](long long r, long long s) { return 3 * s > 2 * r; };
    int k = 0;
    long long extra_sets = 0;
    while (!satisfied(x.ground_size + 3ll * k,
                      static_cast<long long>(x.sets.size()) + extra_sets)) {
        ++k;
        const long long fresh = 3ll * k;
        extra_sets = fresh * (fresh - 1) * (fresh - 2) / 6;
    }
    std::vector<std::array<int, 3>> sets = x.sets;
    const int fresh = 3 * k;
    for (int a = 0; a < fresh; ++a)
        for (int b = a + 1; b < fresh; ++b)
            for (int c = b + 1; c < fresh; ++c)
                sets.push_back({x.ground_size + a, x.ground_size + b, x.ground_size + c});
    return {X3cInstance(x.ground_size + fresh, std::move(sets)), k, false};
}

WeightedCompleteGraph::WeightedCompleteGraph(int t_, std::vector<std::vector<Rational>> weights_)
    : t(t_), weights(std::move(weights_)) {
    if (t < 1) throw std::invalid_argument("weighted graph: needs at least one vertex");
    if (static_cast<int>(weights.size()) != t)
        throw std::invalid_argument("weighted graph: matrix must be t x t (complete)");
    for (int i = 0; i < t; ++i) {
        if (static_cast<int>(weights[i].size()) != t)
            throw std::invalid_argument("weighted graph: matrix must be t x t (complete)");
        if (!weights[i][i].is_zero())
            throw std::invalid_argument("weighted graph: diagonal must be zero");
        for (int j = 0; j < t; ++j)
            if (!(weights[i][j] == weights[j][i]))
                throw std::invalid_argument("weighted graph: weights must be symmetric");
    }
}

GadgetOutput gadget_cat_and_mouse(const TopologyGraph& topology) {
    if (!topology.connected())
        throw std::invalid_argument("cat-and-mouse: topology not connected");
    Distance diam = topology.diameter();
    if (diam != kInfiniteDistance && diam < 3)
        throw std::invalid_argument("diameter too small");
    UtilityMatrix u(2);
    u.set(0, 1, Rational(1));
    u.set(1, 0, Rational(-1));
    TdgInstance instance(std::move(u), topology, DistanceFactor::reciprocal());
    GadgetOutput out{std::move(instance), std::nullopt, std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "cat-and-mouse";
    out.metadata["agent.cat"] = "0";
    out.metadata["agent.mouse"] = "1";
    out.metadata["diameter"] = std::to_string(diam);
    return out;
}

GadgetOutput gadget_tree_counterexample() {
    // Center node 0 with three length-3 branches; friendship is a 6-cycle.
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5},
                                              {5, 6}, {0, 7}, {7, 8}, {8, 9}};
    TopologyGraph topo(10, std::move(edges));
    UtilityMatrix u(6);
    for (int i = 0; i < 6; ++i) u.set(i, (i + 1) % 6, Rational(1));
    TdgInstance instance(std::move(u), std::move(topo), DistanceFactor::reciprocal());
    GadgetOutput out{std::move(instance), std::nullopt, std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "tree-counterexample";
    out.metadata["center"] = "0";
    out.metadata["branches"] = "1-3;4-6;7-9";
    return out;
}

GadgetOutput gadget_exponential_family(int k) {
    if (k < 1) throw std::invalid_argument("exponential family: k must be >= 1");
    const int n = 2 * k + 1;
    // Agent layout: chain agent a_0 = 0, then a_j = 2j-1 and bait b_j = 2j.
    const auto a = [](int j) { return j == 0 ? 0 : 2 * j - 1; };
    const auto b = [](int j) { return 2 * j; };
    UtilityMatrix u(n);
    for (int j = 1; j <= k; ++j) {
        u.set(a(j), b(j), Rational(1));
        u.set(a(j), a(j - 1), Rational(2));
    }
    TopologyGraph topo = TopologyGraph::disjoint_cliques(n, n);
    TdgInstance instance(std::move(u), std::move(topo), DistanceFactor::reciprocal());

    // Everyone starts alone in her own clique.
    std::vector<int> placement(n);
    for (int i = 0; i < n; ++i) placement[i] = i * n;
    Assignment initial(placement);

    // Order-j script: the order-(j-1) script with two extra jumps by a_j
    // (first to b_j, then back after a_{j-1}) inserted after every a_{j-1}
    // jump; the order-1 base is a_1 joining b_1 and then a_0.
    struct Join {
        int jumper;
        int companion;
    };
    std::vector<Join> abstract = {{a(1), b(1)}, {a(1), a(0)}};
    for (int j = 2; j <= k; ++j) {
        std::vector<Join> next;
        for (const Join& step : abstract) {
            next.push_back(step);
            if (step.jumper == a(j - 1)) {
                next.push_back({a(j), b(j)});
                next.push_back({a(j), a(j - 1)});
            }
        }
        abstract = std::move(next);
    }

    // Materialize "join X" as a jump to the lowest empty node of X's clique.
    std::vector<int> pos = placement;
    std::vector<char> occupied(n * n, 0);
    for (int node : pos) occupied[node] = 1;
    std::vector<Move> script;
    script.reserve(abstract.size());
    for (const Join& step : abstract) {
        const int clique = pos[step.companion] / n;
        int node = -1;
        for (int v = clique * n; v < (clique + 1) * n; ++v)
            if (!occupied[v]) {
                node = v;
                break;
            }
        if (node == -1) throw std::logic_error("exponential family: clique full");
        occupied[pos[step.jumper]] = 0;
        occupied[node] = 1;
        pos[step.jumper] = node;
        script.push_back({step.jumper, node});
    }

    GadgetOutput out{std::move(instance), std::move(initial), std::nullopt, std::move(script), {}};
    out.metadata["name"] = "exponential";
    out.metadata["k"] = std::to_string(k);
    out.metadata["components"] = std::to_string(n) + " cliques of size " + std::to_string(n);
    out.metadata["agent.chain_tip"] = std::to_string(a(k));
    for (int j = 0; j <= k; ++j) out.metadata["agent.a" + std::to_string(j)] = std::to_string(a(j));
    for (int j = 1; j <= k; ++j) out.metadata["agent.b" + std::to_string(j)] = std::to_string(b(j));
    return out;
}

GadgetOutput gadget_exjump(const X3cInstance& x, const std::optional<std::vector<int>>& cover) {
    const int R = x.ground_size;
    const int S = static_cast<int>(x.sets.size());
    if (R <= 3) throw std::invalid_argument("exjump: requires |R| > 3");
    if (3 * S <= R) throw std::invalid_argument("exjump: requires 3|S| > |R|");
    if (4 * R <= 9 * S + 30)
        throw std::invalid_argument("exjump: requires |R| > 3|S| - |R|/3 + 10");

    const int third = R / 3;
    // Agents: element agents, then one agent per set, then the disturber.
    const auto agent_a = [&](int r) { return r; };
    const auto agent_b = [&](int s) { return R + s; };
    const int agent_c = R + S;
    const int n = R + S + 1;

    UtilityMatrix u(n);
    for (int r = 0; r < R; ++r) u.set(agent_a(r), agent_a((r + 1) % R), Rational(1));
    const Rational penalty(-6, R - 3);
    for (int s = 0; s < S; ++s) {
        for (int r = 0; r < R; ++r) {
            const auto& set = x.sets[s];
            bool member = std::find(set.begin(), set.end(), r) != set.end();
            u.set(agent_b(s), agent_a(r), member ? Rational(1) : penalty);
        }
        u.set(agent_b(s), agent_c, Rational(-10));
        u.set(agent_c, agent_b(s), Rational(1));
    }

    // Nodes: two escape cliques of size |S|+2, a spare clique of size
    // |S| - |R|/3, and the cover component: a |R|-clique with |R|/3 pockets
    // each attached to one consecutive element triple.
    const int v1 = 0;
    const int v2 = v1 + S + 2;
    const int v3 = v2 + S + 2;
    const int v4 = v3 + (S - third);
    const int pockets = v4 + R;
    const int total = pockets + third;
    std::vector<std::pair<int, int>> edges;
    auto add_clique = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            for (int j = i + 1; j < hi; ++j) edges.push_back({i, j});
    };
    add_clique(v1, v2);
    add_clique(v2, v3);
    add_clique(v3, v4);
    add_clique(v4, v4 + R);
    for (int i = 0; i < third; ++i)
        for (int j = 0; j < 3; ++j) edges.push_back({v4 + 3 * i + j, pockets + i});
    TopologyGraph topo(total, std::move(edges));
    TdgInstance instance(std::move(u), std::move(topo), DistanceFactor::reciprocal());

    GadgetOutput out{std::move(instance), std::nullopt, std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "exjump";
    out.metadata["R"] = std::to_string(R);
    out.metadata["S"] = std::to_string(S);
    out.metadata["component.v1"] = range_str(v1, v2 - 1);
    out.metadata["component.v2"] = range_str(v2, v3 - 1);
    out.metadata["component.v3"] = range_str(v3, v4 - 1);
    out.metadata["component.v4"] = range_str(v4, total - 1);
    out.metadata["agent.disturber"] = std::to_string(agent_c);

    if (cover) {
        if (!x.is_exact_cover(*cover))
            throw std::invalid_argument("exjump: supplied cover is not an exact cover");
        std::vector<int> cover_sorted = *cover;
        std::sort(cover_sorted.begin(), cover_sorted.end());
        std::set<int> in_cover(cover_sorted.begin(), cover_sorted.end());

        std::vector<int> pos(n, -1);
        // Elements of the i-th cover set occupy the i-th clique triple, the
        // set agent sits in the pocket attached to that triple.
        for (int i = 0; i < third; ++i) {
            const auto& set = x.sets[cover_sorted[i]];
            for (int j = 0; j < 3; ++j) pos[agent_a(set[j])] = v4 + 3 * i + j;
            pos[agent_b(cover_sorted[i])] = pockets + i;
        }
        int spare = v3;
        for (int s = 0; s < S; ++s)
            if (!in_cover.count(s)) pos[agent_b(s)] = spare++;
        pos[agent_c] = v1;
        out.witness_assignment = Assignment(pos);
        out.metadata["cover"] = std::to_string(cover_sorted.size()) + " sets";
    }
    return out;
}

namespace {

Rational factor_margin_epsilon(const DistanceFactor& factor) {
    const Rational f1 = factor_at(factor, 1);
    const Rational f2 = factor_at(factor, 2);
    return (f1 - f2) / (Rational(2) * (Rational(2) * f1 + f2));
}

}  // namespace

GadgetOutput gadget_dynconv(const X3cInstance& x, const DistanceFactor& factor,
                            const std::optional<std::vector<int>>& cover) {
    const int R = x.ground_size;
    const int S = static_cast<int>(x.sets.size());
    if (3 * S <= 2 * R) throw std::invalid_argument("dynconv: requires 3|S| > 2|R|");
    const int third = R / 3;
    const Rational eps = factor_margin_epsilon(factor);

    // Agents: the three cyclers, the disruptor, two stationary magnets, the
    // blockers, then element agents and set agents.
    const int alpha1 = 0, alpha2 = 1, alpha3 = 2, delta = 3, rho1 = 4, rho2 = 5;
    const auto gamma = [&](int i) { return 6 + i; };
    const auto agent_a = [&](int r) { return 6 + R + r; };
    const auto agent_b = [&](int s) { return 6 + 2 * R + s; };
    const int n = 6 + 2 * R + S;

    UtilityMatrix u(n);
    u.set(alpha1, alpha2, Rational(1));
    u.set(alpha2, alpha3, Rational(1));
    u.set(alpha3, alpha1, Rational(1));
    u.set(delta, alpha1, Rational(2ll * (S - third) + 1, 2));
    const Rational set_pull = (Rational(1) + eps) / Rational(3);
    for (int s = 0; s < S; ++s) {
        u.set(delta, agent_b(s), Rational(1));
        u.set(agent_b(s), delta, Rational(1));
        for (int e : x.sets[s]) u.set(agent_b(s), agent_a(e), set_pull);
    }
    for (int r = 0; r < R; ++r) u.set(agent_a(r), rho1, Rational(1));
    for (int i = 0; i < R; ++i) u.set(gamma(i), rho2, Rational(1));

    // Component one: hub pair z1-z2, element seats x_i off z2, and one
    // 4-clique pocket per cover slot hanging off z1 (three gate nodes + one
    // pocket seat).
    const int z1 = 0, z2 = 1;
    const auto x_node = [&](int i) { return 2 + i; };
    const auto y_node = [&](int i, int j) { return 2 + R + 4 * i + j; };  // j in 0..3
    const int v1_size = 2 + R + 4 * third;
    const auto w_node = [&](int i) { return v1_size + i; };  // i in 0..S
    const int v3_base = v1_size + S + 1;
    const auto t_node = [&](int i) { return v3_base + i; };  // i in 0..3
    const int v4_base = v3_base + 4;
    const auto q_node = [&](int i) { return v4_base + i; };
    const int total = v4_base + R;

    std::vector<std::pair<int, int>> edges;
    edges.push_back({z1, z2});
    for (int i = 0; i < R; ++i) edges.push_back({x_node(i), z2});
    for (int i = 0; i < third; ++i) {
        for (int jj = 0; jj < 4; ++jj)
            for (int kk = jj + 1; kk < 4; ++kk) edges.push_back({y_node(i, jj), y_node(i, kk)});
        for (int jj = 0; jj < 3; ++jj) edges.push_back({y_node(i, jj), z1});
    }
    for (int i = 0; i <= S; ++i)
        for (int j = i + 1; j <= S; ++j) edges.push_back({w_node(i), w_node(j)});
    edges.push_back({t_node(0), t_node(1)});
    edges.push_back({t_node(1), t_node(2)});
    edges.push_back({t_node(2), t_node(3)});
    edges.push_back({t_node(3), t_node(0)});
    for (int i = 0; i < R; ++i)
        for (int j = i + 1; j < R; ++j) edges.push_back({q_node(i), q_node(j)});
    TopologyGraph topo(total, std::move(edges));
    TdgInstance instance(std::move(u), std::move(topo), factor);

    std::vector<int> pos(n, -1);
    for (int r = 0; r < R; ++r) pos[agent_a(r)] = x_node(r);
    pos[rho1] = z1;
    pos[rho2] = z2;
    for (int s = 0; s < S; ++s) pos[agent_b(s)] = w_node(s);
    pos[delta] = w_node(S);
    pos[alpha1] = t_node(0);
    pos[alpha2] = t_node(1);
    pos[alpha3] = t_node(2);
    for (int i = 0; i < R; ++i) pos[gamma(i)] = q_node(i);
    Assignment initial(pos);

    GadgetOutput out{std::move(instance), std::move(initial), std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "dynconv";
    out.metadata["R"] = std::to_string(R);
    out.metadata["S"] = std::to_string(S);
    out.metadata["epsilon"] = eps.str();
    out.metadata["agent.delta"] = std::to_string(delta);
    out.metadata["component.v1"] = range_str(0, v1_size - 1);
    out.metadata["component.v2"] = range_str(v1_size, v3_base - 1);
    out.metadata["component.v3"] = range_str(v3_base, v4_base - 1);
    out.metadata["component.v4"] = range_str(v4_base, total - 1);

    if (cover) {
        if (!x.is_exact_cover(*cover))
            throw std::invalid_argument("dynconv: supplied cover is not an exact cover");
        std::vector<int> cover_sorted = *cover;
        std::sort(cover_sorted.begin(), cover_sorted.end());
        std::vector<Move> script;
        for (int i = 0; i < third; ++i)
            for (int j = 0; j < 3; ++j)
                script.push_back({agent_a(x.sets[cover_sorted[i]][j]), y_node(i, j)});
        for (int i = 0; i < third; ++i) script.push_back({agent_b(cover_sorted[i]), y_node(i, 3)});
        script.push_back({delta, t_node(3)});
        for (int i = 0; i < R; ++i) script.push_back({gamma(i), x_node(i)});
        out.script = std::move(script);
    }
    return out;
}

GadgetOutput gadget_dyncycle(const X3cInstance& x, const DistanceFactor& factor,
                             const std::optional<std::vector<int>>& cover) {
    const int R = x.ground_size;
    const int S = static_cast<int>(x.sets.size());
    const int third = R / 3;
    const Rational eps = factor_margin_epsilon(factor);

    const int alpha1 = 0, alpha2 = 1, alpha3 = 2, delta = 3, rho1 = 4, rho2 = 5, sigma = 6;
    const auto sigma_i = [&](int i) { return 7 + i; };  // i in 0..third-1
    const auto agent_a = [&](int r) { return 7 + third + r; };
    const auto agent_b = [&](int s) { return 7 + third + R + s; };
    const int n = 7 + third + R + S;

    UtilityMatrix u(n);
    u.set(alpha1, alpha2, Rational(1));
    u.set(alpha2, alpha3, Rational(1));
    u.set(alpha3, alpha1, Rational(1));
    for (int i = 0; i < third; ++i) u.set(delta, sigma_i(i), Rational(1));
    u.set(delta, alpha1, Rational(2ll * third - 1, 2));
    for (int i = 0; i < third; ++i) u.set(sigma_i(i), sigma, Rational(1));
    const Rational set_pull = (Rational(1) + eps) / Rational(3);
    for (int s = 0; s < S; ++s) {
        u.set(agent_b(s), sigma, Rational(1));
        for (int e : x.sets[s]) u.set(agent_b(s), agent_a(e), set_pull);
    }
    for (int r = 0; r < R; ++r) u.set(agent_a(r), rho1, Rational(1));

    const int z1 = 0, z2 = 1;
    const auto x_node = [&](int i) { return 2 + i; };
    const auto y_node = [&](int i, int j) { return 2 + R + 4 * i + j; };
    const int v1_size = 2 + R + 4 * third;
    const auto w_node = [&](int i) { return v1_size + i; };  // i in 0..S+1
    const int v3_base = v1_size + S + 2;
    const auto t_node = [&](int i) { return v3_base + i; };
    const auto leaf_node = [&](int i) { return v3_base + 4 + i; };  // pendant off t4
    const int total = v3_base + 4 + third;

    std::vector<std::pair<int, int>> edges;
    edges.push_back({z1, z2});
    for (int i = 0; i < R; ++i) edges.push_back({x_node(i), z2});
    for (int i = 0; i < third; ++i) {
        for (int jj = 0; jj < 4; ++jj)
            for (int kk = jj + 1; kk < 4; ++kk) edges.push_back({y_node(i, jj), y_node(i, kk)});
        for (int jj = 0; jj < 3; ++jj) edges.push_back({y_node(i, jj), z1});
    }
    for (int i = 0; i <= S + 1; ++i)
        for (int j = i + 1; j <= S + 1; ++j) edges.push_back({w_node(i), w_node(j)});
    edges.push_back({t_node(0), t_node(1)});
    edges.push_back({t_node(1), t_node(2)});
    edges.push_back({t_node(2), t_node(3)});
    edges.push_back({t_node(3), t_node(0)});
    for (int i = 0; i < third; ++i) edges.push_back({t_node(3), leaf_node(i)});
    TopologyGraph topo(total, std::move(edges));
    TdgInstance instance(std::move(u), std::move(topo), factor);

    std::vector<int> pos(n, -1);
    for (int r = 0; r < R; ++r) pos[agent_a(r)] = x_node(r);
    pos[rho1] = z1;
    pos[rho2] = z2;
    for (int s = 0; s < S; ++s) pos[agent_b(s)] = w_node(s);
    pos[sigma] = w_node(S);
    pos[alpha1] = t_node(0);
    pos[alpha2] = t_node(1);
    pos[alpha3] = t_node(2);
    for (int i = 0; i < third; ++i) pos[sigma_i(i)] = leaf_node(i);
    pos[delta] = t_node(3);
    Assignment initial(pos);

    GadgetOutput out{std::move(instance), std::move(initial), std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "dyncycle";
    out.metadata["R"] = std::to_string(R);
    out.metadata["S"] = std::to_string(S);
    out.metadata["epsilon"] = eps.str();
    out.metadata["agent.delta"] = std::to_string(delta);
    out.metadata["component.v1"] = range_str(0, v1_size - 1);
    out.metadata["component.v2"] = range_str(v1_size, v3_base - 1);
    out.metadata["component.v3"] = range_str(v3_base, total - 1);
    out.metadata["cycle_after_prefix"] =
        "the three cyclers rotate forever on the 4-cycle once the disruptor leaves";

    if (cover) {
        if (!x.is_exact_cover(*cover))
            throw std::invalid_argument("dyncycle: supplied cover is not an exact cover");
        std::vector<int> cover_sorted = *cover;
        std::sort(cover_sorted.begin(), cover_sorted.end());
        std::vector<Move> script;
        for (int i = 0; i < third; ++i)
            for (int j = 0; j < 3; ++j)
                script.push_back({agent_a(x.sets[cover_sorted[i]][j]), y_node(i, j)});
        for (int i = 0; i < third; ++i) script.push_back({agent_b(cover_sorted[i]), y_node(i, 3)});
        // The escorts take the vacated seats, then the disruptor follows them.
        for (int i = 0; i < third; ++i) script.push_back({sigma_i(i), w_node(cover_sorted[i])});
        script.push_back({delta, w_node(S + 1)});
        out.script = std::move(script);
    }
    return out;
}

GadgetOutput gadget_maxcut_reduction(const WeightedCompleteGraph& g) {
    if (g.t < 2) throw std::invalid_argument("maxcut: needs at least 2 vertices");
    UtilityMatrix u(g.t);
    for (int i = 0; i < g.t; ++i)
        for (int j = 0; j < g.t; ++j)
            if (i != j) u.set(i, j, -g.weight(i, j));
    TdgInstance instance(std::move(u), TopologyGraph::disjoint_cliques(2, g.t),
                         DistanceFactor::reciprocal());
    GadgetOutput out{std::move(instance), std::nullopt, std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "maxcut";
    out.metadata["t"] = std::to_string(g.t);
    out.metadata["component.a"] = range_str(0, g.t - 1);
    out.metadata["component.b"] = range_str(g.t, 2 * g.t - 1);
    return out;
}

GadgetOutput gadget_graph_partitioning_reduction(const WeightedCompleteGraph& g) {
    if (g.t % 2 != 0)
        throw std::invalid_argument("graph-partitioning: vertex count must be even");
    const int half = g.t / 2;
    UtilityMatrix u(g.t);
    for (int i = 0; i < g.t; ++i)
        for (int j = 0; j < g.t; ++j)
            if (i != j) u.set(i, j, g.weight(i, j));
    TdgInstance instance(std::move(u), TopologyGraph::disjoint_cliques(2, half),
                         DistanceFactor::reciprocal());
    GadgetOutput out{std::move(instance), std::nullopt, std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "graph-partitioning";
    out.metadata["t"] = std::to_string(half);
    out.metadata["component.a"] = range_str(0, half - 1);
    out.metadata["component.b"] = range_str(half, g.t - 1);
    return out;
}

GadgetOutput gadget_roommates_no_swap() {
    UtilityMatrix u(4);
    const int table[4][4] = {{0, 3, 2, 1}, {2, 0, 1, 3}, {3, 1, 0, 2}, {1, 2, 3, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) u.set(i, j, Rational(table[i][j]));
    TopologyGraph topo(4, {{0, 1}, {2, 3}});
    TdgInstance instance(std::move(u), std::move(topo), DistanceFactor::reciprocal());
    GadgetOutput out{std::move(instance), std::nullopt, std::nullopt, std::nullopt, {}};
    out.metadata["name"] = "roommates";
    out.metadata["rooms"] = "0-1;2-3";
    return out;
}

GadgetOutput gadget_swap_cycle() {
    // Agents 0..2 and 3..5 each form a friendship 3-cycle on a 6-cycle.
    UtilityMatrix u(6);
    for (int i = 0; i < 3; ++i) {
        u.set(i, (i + 1) % 3, Rational(1));
        u.set(3 + i, 3 + (i + 1) % 3, Rational(1));
    }
    TdgInstance instance(std::move(u), TopologyGraph::cycle(6), DistanceFactor::reciprocal());
    Assignment initial(std::vector<int>{0, 1, 2, 3, 4, 5});
    Assignment witness(std::vector<int>{0, 1, 2, 5, 4, 3});
    GadgetOutput out{std::move(instance), std::move(initial), std::move(witness), std::nullopt,
                     {}};
    out.metadata["name"] = "swap-cycle";
    out.metadata["group.a"] = "0-2";
    out.metadata["group.b"] = "3-5";
    return out;
}

}  // namespace tdg
