#include "tdg/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "tdg/stability.hpp"

namespace tdg {

namespace {

// Partial-placement utility: only placed co-agents contribute.
Rational partial_utility(const TdgInstance& instance, const std::vector<int>& pos, int agent,
                         int node) {
    Rational sum(0);
    for (const auto& [j, u] : instance.nonzero_row(agent)) {
        if (pos[j] < 0) continue;
        Distance d = instance.distances().at(node, pos[j]);
        if (d != kInfiniteDistance) sum += instance.factor_value(d) * u;
    }
    return sum;
}

// Empty node maximizing the agent's utility against placed agents; ties go to
// the lowest node index.
int best_empty_node(const TdgInstance& instance, const std::vector<int>& pos,
                    const std::vector<char>& occupied, int agent) {
    int best = -1;
    Rational best_value(0);
    for (int v = 0; v < instance.node_count(); ++v) {
        if (occupied[v]) continue;
        Rational value = partial_utility(instance, pos, agent, v);
        if (best == -1 || value > best_value) {
            best = v;
            best_value = std::move(value);
        }
    }
    if (best == -1) throw std::logic_error("solver: no empty node left");
    return best;
}

SolverReport finish(const TdgInstance& instance, SolveMethod method,
                    std::vector<PreconditionCheck> checks, const std::vector<int>& pos,
                    std::optional<std::vector<int>> relabeling = std::nullopt) {
    Assignment lambda(pos);
    if (!is_jump_stable(instance, lambda))
        throw std::logic_error("solver produced an unstable assignment");
    return {SolverReport::Status::Assigned, method, std::move(lambda), std::move(checks),
            std::move(relabeling)};
}

SolverReport not_applicable(SolveMethod method, std::vector<PreconditionCheck> checks) {
    return {SolverReport::Status::NotApplicable, method, std::nullopt, std::move(checks),
            std::nullopt};
}

bool friendship_is_acyclic(const FriendshipGraph& fg) {
    try {
        topological_order(fg);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// The unique friend of each agent under out-degree <= 1, or -1. Returns
// false when some agent has two friends or any negative entry exists.
bool functional_friends(const UtilityMatrix& u, std::vector<int>& friend_of) {
    const int n = u.n();
    friend_of.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (u.at(i, j).negative()) return false;
            if (u.at(i, j).positive()) {
                if (friend_of[i] != -1) return false;
                friend_of[i] = j;
            }
        }
    return true;
}

bool topology_is_cycle(const TopologyGraph& g) {
    if (g.node_count() < 3 || !g.connected()) return false;
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool topology_is_path(const TopologyGraph& g) {
    if (g.node_count() == 1) return g.edge_count() == 0;
    if (!g.connected()) return false;
    int ones = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        int d = g.degree(v);
        if (d == 1)
            ++ones;
        else if (d != 2)
            return false;
    }
    return ones == 2;
}

}  // namespace

SolverReport solve_acyclic(const TdgInstance& instance) {
    FriendshipGraph fg = friendship_graph(instance.utilities());
    std::vector<PreconditionCheck> checks;
    checks.push_back({"friendship acyclic", friendship_is_acyclic(fg)});
    checks.push_back({"utilities non-negative", instance.utilities().non_negative()});
    for (const auto& c : checks)
        if (!c.passed) return not_applicable(SolveMethod::AcyclicGreedy, std::move(checks));

    std::vector<int> order = topological_order(fg);
    std::vector<int> pos(instance.n(), -1);
    std::vector<char> occupied(instance.node_count(), 0);
    for (int agent : order) {
        int v = best_empty_node(instance, pos, occupied, agent);
        pos[agent] = v;
        occupied[v] = 1;
    }
    return finish(instance, SolveMethod::AcyclicGreedy, std::move(checks), pos);
}

SolverReport solve_path(const TdgInstance& instance) {
    FriendshipGraph fg = friendship_graph(instance.utilities());
    bool few_friends = true;
    for (int i = 0; i < instance.n(); ++i)
        if (fg.out_degree(i) > 2) few_friends = false;
    std::vector<PreconditionCheck> checks;
    checks.push_back({"topology is a path", topology_is_path(instance.topology())});
    checks.push_back({"at most two friends per agent", few_friends});
    checks.push_back({"utilities non-negative", instance.utilities().non_negative()});
    for (const auto& c : checks)
        if (!c.passed) return not_applicable(SolveMethod::PathGreedy, std::move(checks));

    // Order the path's nodes from the lower-indexed endpoint.
    const TopologyGraph& g = instance.topology();
    std::vector<int> path_nodes;
    if (g.node_count() == 1) {
        path_nodes = {0};
    } else {
        int left = -1;
        for (int v = 0; v < g.node_count(); ++v)
            if (g.degree(v) == 1) {
                left = v;
                break;
            }
        path_nodes.push_back(left);
        int prev = -1, cur = left;
        while (static_cast<int>(path_nodes.size()) < g.node_count()) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
            path_nodes.push_back(cur);
        }
    }

    std::vector<int> pos(instance.n(), -1);
    std::vector<char> assigned(instance.n(), 0);
    int previous_agent = -1;
    for (int slot = 0; slot < instance.n(); ++slot) {
        int pick = -1;
        if (slot == 0) {
            pick = 0;  // lowest-index seed
        } else {
            const Rational* best_u = nullptr;
            for (int j : fg.friends_of(previous_agent)) {
                if (assigned[j]) continue;
                const Rational& u = instance.utilities().at(previous_agent, j);
                if (!best_u || u > *best_u || (u == *best_u && j < pick)) {
                    pick = j;
                    best_u = &u;
                }
            }
            if (pick == -1)
                for (int j = 0; j < instance.n(); ++j)
                    if (!assigned[j]) {
                        pick = j;
                        break;
                    }
        }
        pos[pick] = path_nodes[slot];
        assigned[pick] = 1;
        previous_agent = pick;
    }
    return finish(instance, SolveMethod::PathGreedy, std::move(checks), pos);
}

namespace {

// Block layouts for a friendship cycle of length m placed on m (or m+1)
// consecutive topology nodes. role_at[p] is the cycle position (0-based,
// following the friendship direction) sitting on the p-th block node.

std::vector<int> long_cycle_layout(int m) {
    std::vector<int> role_at(m, -1);
    if (m % 2 == 0) {
        for (int role = 1; role <= m / 2; ++role) role_at[m / 2 - role] = role - 1;
        for (int role = m / 2 + 1; role <= m; ++role) role_at[role - 1] = role - 1;
    } else {
        int h = m / 2;
        for (int role = 1; role <= h; ++role) role_at[2 * role - 2] = role - 1;
        role_at[m - 2] = h;      // role h+1
        role_at[m - 1] = h + 1;  // role h+2
        for (int role = h + 3; role <= m; ++role) role_at[2 * (m + 1 - role) - 1] = role - 1;
    }
    return role_at;
}

// Layouts for m in {3, 5}; these need an occupied anchor node on one side.
// Forward: anchor directly after the block. Reflected: directly before.
std::vector<int> short_cycle_layout(int m, bool reflected) {
    std::vector<int> fwd = m == 3 ? std::vector<int>{2, 1, 0} : std::vector<int>{0, 4, 1, 3, 2};
    if (!reflected) return fwd;
    std::reverse(fwd.begin(), fwd.end());
    return fwd;
}

// Cycle position adjacent to the forward anchor node.
int anchor_adjacent_role(int m) { return m == 3 ? 0 : 2; }

}  // namespace

SolverReport solve_cycle_on_cycle(const TdgInstance& instance) {
    const int n = instance.n();
    std::vector<int> friend_of;
    const bool functional = functional_friends(instance.utilities(), friend_of);
    std::vector<PreconditionCheck> checks;
    checks.push_back({"topology is a cycle", topology_is_cycle(instance.topology())});
    checks.push_back({"at most one friend per agent, zero otherwise", functional});
    for (const auto& c : checks)
        if (!c.passed) return not_applicable(SolveMethod::CycleOnCycle, std::move(checks));

    const int nodes = instance.node_count();
    if (nodes == n) {
        // Fully occupied cycle: no empty node, every assignment is stable.
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[i] = i;
        return finish(instance, SolveMethod::CycleOnCycle, std::move(checks), pos);
    }

    // Decompose the functional friendship graph into its cycles.
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::vector<int>> cycles;
    std::vector<char> on_cycle(n, 0);
    for (int start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        std::vector<int> chain;
        int v = start;
        while (v != -1 && state[v] == 0) {
            state[v] = 1;
            chain.push_back(v);
            v = friend_of[v];
        }
        if (v != -1 && state[v] == 1) {
            auto it = std::find(chain.begin(), chain.end(), v);
            std::vector<int> cycle(it, chain.end());
            int lowest = static_cast<int>(
                std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
            std::rotate(cycle.begin(), cycle.begin() + lowest, cycle.end());
            for (int a : cycle) on_cycle[a] = 1;
            cycles.push_back(std::move(cycle));
        }
        for (int a : chain) state[a] = 2;
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    std::vector<int> acyclic_agents;
    for (int i = 0; i < n; ++i)
        if (!on_cycle[i]) acyclic_agents.push_back(i);

    if (cycles.size() == 1 && acyclic_agents.empty()) {
        const int m = static_cast<int>(cycles[0].size());
        if (m == 3 || m == 5)
            return {SolverReport::Status::NonExistent, SolveMethod::CycleOnCycle, std::nullopt,
                    std::move(checks), std::nullopt};
    }

    std::vector<int> pos(n, -1);
    std::vector<char> occupied(nodes, 0);
    auto place = [&](int agent, int node) {
        pos[agent] = node % nodes;
        occupied[node % nodes] = 1;
    };

    int cur = 0;
    const bool single_short =
        cycles.size() == 1 && (cycles[0].size() == 3 || cycles[0].size() == 5);

    if (single_short) {
        // One short cycle: borrow an acyclic agent with no acyclic friend as
        // the anchor, rotated next to her own friend when she has one.
        std::vector<int> cycle = cycles[0];
        const int m = static_cast<int>(cycle.size());
        int anchor = -1;
        for (int a : acyclic_agents)
            if (friend_of[a] == -1 || on_cycle[friend_of[a]]) {
                anchor = a;
                break;
            }
        if (anchor == -1) throw std::logic_error("cycle solver: no anchor agent available");
        if (friend_of[anchor] != -1) {
            int want = anchor_adjacent_role(m);
            int at = static_cast<int>(
                std::find(cycle.begin(), cycle.end(), friend_of[anchor]) - cycle.begin());
            std::vector<int> rotated(m);
            for (int j = 0; j < m; ++j) rotated[j] = cycle[((at - want + j) % m + m) % m];
            cycle = std::move(rotated);
        }
        std::vector<int> layout = short_cycle_layout(m, false);
        for (int p = 0; p < m; ++p) place(cycle[layout[p]], cur + p);
        place(anchor, cur + m);
        cur += m + 1;
    } else {
        for (std::size_t idx = 0; idx < cycles.size(); ++idx) {
            const std::vector<int>& cycle = cycles[idx];
            const int m = static_cast<int>(cycle.size());
            if (m == 3 || m == 5) {
                // First block keeps its anchor in front (filled by the next
                // block's first node); later blocks mirror the layout so the
                // anchor is the previous block's already-occupied last node.
                std::vector<int> layout = short_cycle_layout(m, idx != 0);
                for (int p = 0; p < m; ++p) place(cycle[layout[p]], cur + p);
            } else {
                std::vector<int> layout = long_cycle_layout(m);
                for (int p = 0; p < m; ++p) place(cycle[layout[p]], cur + p);
            }
            cur += m;
        }
    }

    // Remaining agents greedily, each after her friend.
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) done[i] = pos[i] != -1;
    int remaining = 0;
    for (int i = 0; i < n; ++i)
        if (!done[i]) ++remaining;
    while (remaining > 0) {
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && (friend_of[i] == -1 || done[friend_of[i]])) {
                pick = i;
                break;
            }
        if (pick == -1) throw std::logic_error("cycle solver: stuck placing acyclic agents");
        int v = best_empty_node(instance, pos, occupied, pick);
        place(pick, v);
        done[pick] = 1;
        --remaining;
    }
    return finish(instance, SolveMethod::CycleOnCycle, std::move(checks), pos);
}

namespace {

struct ExtendedStar {
    int center = -1;
    std::vector<std::vector<int>> branches;  // node lists, center-adjacent first
};

bool decompose_extended_star(const TopologyGraph& g, ExtendedStar& out) {
    const int n = g.node_count();
    if (!g.connected() || g.edge_count() != static_cast<std::size_t>(n - 1)) return false;
    int center = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) {
            if (center != -1) return false;
            center = v;
        }
    if (center == -1) return false;
    out.center = center;
    out.branches.clear();
    for (int first : g.neighbors(center)) {
        std::vector<int> branch{first};
        int prev = center, cur = first;
        while (g.degree(cur) == 2) {
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
            branch.push_back(cur);
        }
        out.branches.push_back(std::move(branch));
    }
    std::sort(out.branches.begin(), out.branches.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    return true;
}

// Single directed cycle through all agents: follow the unique friends from
// agent 0 and demand the walk closes after n steps.
bool full_cycle_order(const std::vector<int>& friend_of, std::vector<int>& order) {
    const int n = static_cast<int>(friend_of.size());
    order.clear();
    std::vector<char> seen(n, 0);
    int v = 0;
    for (int step = 0; step < n; ++step) {
        if (v == -1 || seen[v]) return false;
        seen[v] = 1;
        order.push_back(v);
        v = friend_of[v];
    }
    return v == 0;
}

}  // namespace

SolverReport solve_extended_star(const TdgInstance& instance) {
    const int n = instance.n();
    ExtendedStar star;
    const bool star_ok = decompose_extended_star(instance.topology(), star);
    const int k = star_ok ? static_cast<int>(star.branches.size()) : 0;
    std::vector<int> friend_of;
    std::vector<int> cycle_order;
    const bool functional = functional_friends(instance.utilities(), friend_of);
    const bool cycle_ok = functional && full_cycle_order(friend_of, cycle_order);

    std::vector<PreconditionCheck> checks;
    checks.push_back({"topology is an extended star with >= 3 branches", star_ok && k >= 3});
    checks.push_back({"n >= 5k+1", star_ok && k >= 3 && n >= 5 * k + 1});
    checks.push_back({"friendship graph is a single directed cycle", cycle_ok});
    checks.push_back({"utilities non-negative", instance.utilities().non_negative()});
    for (const auto& c : checks)
        if (!c.passed) return not_applicable(SolveMethod::ExtendedStar, std::move(checks));

    // cycle_order[p] is the agent playing position p; position 0 is agent 0.
    std::vector<std::vector<int>*> type1, type2;
    for (auto& b : star.branches)
        (b.size() <= 4 ? type1 : type2).push_back(&b);
    if (type2.empty()) throw std::logic_error("star solver: no long branch despite n >= 5k+1");

    int type1_total = 0;
    for (auto* b : type1) type1_total += static_cast<int>(b->size());
    int to_distribute = n - 1 - type1_total;

    // Five agents per long branch, then hand out the leftover one at a time
    // starting from the last branch, capped by branch capacity.
    std::vector<int> take(type2.size(), 5);
    int leftover = to_distribute - 5 * static_cast<int>(type2.size());
    if (leftover < 0) throw std::logic_error("star solver: not enough agents for long branches");
    while (leftover > 0) {
        bool progress = false;
        for (int i = static_cast<int>(type2.size()) - 1; i >= 0 && leftover > 0; --i) {
            if (take[i] < static_cast<int>(type2[i]->size())) {
                ++take[i];
                --leftover;
                progress = true;
            }
        }
        if (!progress) throw std::logic_error("star solver: branch capacity exhausted");
    }

    std::vector<int> pos(n, -1);
    int cursor = 0;  // next cycle position to place
    auto agent_at = [&](int cycle_pos) { return cycle_order[cycle_pos]; };

    for (auto* b : type1) {
        const int size = static_cast<int>(b->size());
        for (int i = 0; i < size; ++i) pos[agent_at(cursor + i)] = (*b)[size - 1 - i];
        cursor += size;
    }
    for (std::size_t bi = 0; bi < type2.size(); ++bi) {
        const std::vector<int>& b = *type2[bi];
        const int r = take[bi];
        if (r % 2 == 0) {
            const int s = r / 2;
            for (int i = 0; i < s; ++i) pos[agent_at(cursor + i)] = b[2 * i];
            for (int i = 0; i < s; ++i) pos[agent_at(cursor + s + i)] = b[2 * s - 1 - 2 * i];
        } else {
            const int s = r / 2;
            for (int i = 0; i < s; ++i) pos[agent_at(cursor + i)] = b[2 * i + 1];
            for (int i = 0; i <= s; ++i) pos[agent_at(cursor + s + i)] = b[2 * s - 2 * i];
        }
        cursor += r;
    }
    if (cursor != n - 1) throw std::logic_error("star solver: distribution mismatch");
    pos[agent_at(n - 1)] = star.center;

    return finish(instance, SolveMethod::ExtendedStar, std::move(checks), pos,
                  std::move(cycle_order));
}

}  // namespace tdg
