#include "tdg/oracle.hpp"

#include <gmp.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "tdg/stability.hpp"

namespace tdg {

namespace {

// |V|! / (|V|-n)! as a decimal string, and a saturating int64 companion.
std::string assignment_count_str(int nodes, int n) {
    mpz_t c;
    mpz_init_set_ui(c, 1);
    for (int i = 0; i < n; ++i) mpz_mul_ui(c, c, static_cast<unsigned long>(nodes - i));
    char* raw = mpz_get_str(nullptr, 10, c);
    std::string s(raw);
    std::free(raw);
    mpz_clear(c);
    return s;
}

bool budget_allows(int nodes, int n, long long budget) {
    long long count = 1;
    for (int i = 0; i < n; ++i) {
        count *= (nodes - i);
        if (count > budget || count < 0) return false;
    }
    return true;
}

using StablePredicate = bool (*)(const TdgInstance&, const Assignment&);

// Depth-first lexicographic enumeration with an injectivity mask. Returns the
// first stable completion of the given placement prefix, or nullopt.
std::optional<Assignment> first_stable_from_prefix(const TdgInstance& instance,
                                                   std::vector<int>& placement,
                                                   std::vector<char>& used, int depth,
                                                   StablePredicate stable,
                                                   const std::atomic<bool>* abort_flag) {
    const int n = instance.n();
    if (depth == n) {
        Assignment lambda(placement);
        if (stable(instance, lambda)) return lambda;
        return std::nullopt;
    }
    for (int v = 0; v < instance.node_count(); ++v) {
        if (used[v]) continue;
        if (abort_flag && abort_flag->load(std::memory_order_relaxed)) return std::nullopt;
        used[v] = 1;
        placement[depth] = v;
        auto found =
            first_stable_from_prefix(instance, placement, used, depth + 1, stable, abort_flag);
        used[v] = 0;
        if (found) return found;
    }
    return std::nullopt;
}

OracleResult exists_stable(const TdgInstance& instance, const OracleBudget& budget, int threads,
                           StablePredicate stable) {
    const int n = instance.n();
    const int nodes = instance.node_count();
    if (!budget_allows(nodes, n, budget.max_assignments))
        throw std::runtime_error("oracle budget exceeded: " + assignment_count_str(nodes, n) +
                                 " assignments > " + std::to_string(budget.max_assignments));

    if (threads <= 1 || n == 1) {
        std::vector<int> placement(n, 0);
        std::vector<char> used(nodes, 0);
        auto found = first_stable_from_prefix(instance, placement, used, 0, stable, nullptr);
        if (found) return {true, std::move(found)};
        return {false, std::nullopt};
    }

    // Split on the first agent's node; the smallest first-node witness is the
    // global lexicographic first. Workers past an already-found prefix abort.
    std::vector<std::optional<Assignment>> per_prefix(nodes);
    std::atomic<int> next(0);
    std::atomic<int> best_prefix(nodes);
    std::atomic<bool> dummy_abort(false);
    auto worker = [&]() {
        std::vector<int> placement(n, 0);
        std::vector<char> used(nodes, 0);
        for (;;) {
            int v = next.fetch_add(1);
            if (v >= nodes) return;
            if (v > best_prefix.load()) continue;
            placement[0] = v;
            used[v] = 1;
            auto found =
                first_stable_from_prefix(instance, placement, used, 1, stable, &dummy_abort);
            used[v] = 0;
            if (found) {
                per_prefix[v] = std::move(found);
                int cur = best_prefix.load();
                while (v < cur && !best_prefix.compare_exchange_weak(cur, v)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (int v = 0; v < nodes; ++v)
        if (per_prefix[v]) return {true, per_prefix[v]};
    return {false, std::nullopt};
}

bool jump_stable_pred(const TdgInstance& i, const Assignment& a) { return is_jump_stable(i, a); }
bool swap_stable_pred(const TdgInstance& i, const Assignment& a) { return is_swap_stable(i, a); }

}  // namespace

OracleResult exists_jump_stable(const TdgInstance& instance, const OracleBudget& budget,
                                int threads) {
    return exists_stable(instance, budget, threads, &jump_stable_pred);
}

OracleResult exists_swap_stable(const TdgInstance& instance, const OracleBudget& budget,
                                int threads) {
    return exists_stable(instance, budget, threads, &swap_stable_pred);
}

namespace {

// Total weight of edges crossing the 2-partition encoded by side bits.
Rational cut_value(const WeightedCompleteGraph& g, unsigned mask) {
    Rational cut(0);
    for (int x = 0; x < g.t; ++x)
        for (int y = x + 1; y < g.t; ++y)
            if (((mask >> x) & 1u) != ((mask >> y) & 1u)) cut += g.weight(x, y);
    return cut;
}

// Runs `body` over every injective placement of n agents on `nodes` nodes,
// in lexicographic order.
template <typename Body>
void enumerate_placements(int depth, int n, int nodes, std::vector<int>& placement,
                          std::vector<char>& used, Body&& body) {
    if (depth == n) {
        body(placement);
        return;
    }
    for (int v = 0; v < nodes; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        placement[depth] = v;
        enumerate_placements(depth + 1, n, nodes, placement, used, body);
        used[v] = 0;
    }
}

template <typename Body>
void for_each_assignment(int n, int nodes, Body&& body) {
    std::vector<int> placement(n, 0);
    std::vector<char> used(nodes, 0);
    enumerate_placements(0, n, nodes, placement, used, body);
}

}  // namespace

bool verify_local_optimum_correspondence(const WeightedCompleteGraph& g,
                                         const OracleBudget& budget) {
    GadgetOutput reduction = gadget_maxcut_reduction(g);
    const TdgInstance& instance = reduction.instance;
    const int t = g.t;
    if (!budget_allows(instance.node_count(), t, budget.max_assignments))
        throw std::runtime_error("oracle budget exceeded: " +
                                 assignment_count_str(instance.node_count(), t) + " assignments > " +
                                 std::to_string(budget.max_assignments));

    // Flip-local optimality per partition bitmask: no single vertex strictly
    // increases the cut by changing sides.
    std::vector<char> flip_opt(1u << t, 1);
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        Rational base = cut_value(g, mask);
        for (int x = 0; x < t; ++x)
            if (cut_value(g, mask ^ (1u << x)) > base) {
                flip_opt[mask] = 0;
                break;
            }
    }

    bool ok = true;
    for_each_assignment(t, instance.node_count(), [&](const std::vector<int>& placement) {
        if (!ok) return;
        unsigned mask = 0;  // bit x set when vertex x's agent sits in the second clique
        for (int x = 0; x < t; ++x)
            if (placement[x] >= t) mask |= 1u << x;
        Assignment lambda(placement);
        if (is_jump_stable(instance, lambda) != static_cast<bool>(flip_opt[mask])) ok = false;
    });
    return ok;
}

bool verify_swap_partition_correspondence(const WeightedCompleteGraph& g,
                                          const OracleBudget& budget) {
    GadgetOutput reduction = gadget_graph_partitioning_reduction(g);
    const TdgInstance& instance = reduction.instance;
    const int n = g.t;  // all vertices become agents
    const int t = n / 2;
    if (!budget_allows(instance.node_count(), n, budget.max_assignments))
        throw std::runtime_error("oracle budget exceeded: " +
                                 assignment_count_str(instance.node_count(), n) +
                                 " assignments > " + std::to_string(budget.max_assignments));

    // Swap-local optimality per balanced partition: no cross pair strictly
    // decreases the cut by swapping sides.
    std::vector<char> swap_opt(1u << n, 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != t) continue;
        Rational base = cut_value(g, mask);
        bool opt = true;
        for (int x = 0; x < n && opt; ++x)
            for (int y = 0; y < n && opt; ++y) {
                if (((mask >> x) & 1u) == 0 || ((mask >> y) & 1u) != 0) continue;
                unsigned swapped = mask ^ (1u << x) ^ (1u << y);
                if (cut_value(g, swapped) < base) opt = false;
            }
        swap_opt[mask] = opt;
    }

    // The local-search objectives correspond pointwise: phi is at a swap
    // local maximum exactly when the induced cut is at a swap local minimum
    // (each swap changes phi by -2 times the cut change). Swap stability is
    // the one-directional consequence: a phi local maximum admits no swap
    // where both sides strictly gain. The converse is false in general, so
    // stability itself cannot stand in for cut optimality here.
    bool ok = true;
    for_each_assignment(n, instance.node_count(), [&](const std::vector<int>& placement) {
        if (!ok) return;
        unsigned mask = 0;
        for (int x = 0; x < n; ++x)
            if (placement[x] >= t) mask |= 1u << x;
        Assignment lambda(placement);
        bool phi_local_max = true;
        for (int i = 0; i < n && phi_local_max; ++i)
            for (int j = i + 1; j < n && phi_local_max; ++j) {
                Rational di = instance.agent_utility_after_swap(lambda, i, j, i) -
                              instance.agent_utility(lambda, i);
                Rational dj = instance.agent_utility_after_swap(lambda, i, j, j) -
                              instance.agent_utility(lambda, j);
                if ((di + dj).positive()) phi_local_max = false;
            }
        if (phi_local_max != static_cast<bool>(swap_opt[mask])) ok = false;
        if (phi_local_max && !is_swap_stable(instance, lambda)) ok = false;
    });
    return ok;
}

}  // namespace tdg
