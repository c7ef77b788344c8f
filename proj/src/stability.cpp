#include "tdg/stability.hpp"

#include <stdexcept>

namespace tdg {

namespace {

std::vector<int> empty_nodes(const TdgInstance& instance, const Assignment& lambda) {
    std::vector<char> occupied(instance.node_count(), 0);
    for (int a = 0; a < lambda.n(); ++a) occupied[lambda.node_of(a)] = 1;
    std::vector<int> empties;
    empties.reserve(instance.node_count() - lambda.n());
    for (int v = 0; v < instance.node_count(); ++v)
        if (!occupied[v]) empties.push_back(v);
    return empties;
}

}  // namespace

std::vector<Deviation> beneficial_jumps(const TdgInstance& instance, const Assignment& lambda) {
    instance.validate_assignment(lambda);
    std::vector<Deviation> out;
    const std::vector<int> empties = empty_nodes(instance, lambda);
    if (empties.empty()) return out;
    for (int agent = 0; agent < instance.n(); ++agent) {
        if (instance.nonzero_row(agent).empty()) continue;  // utility is 0 everywhere
        const Rational current = instance.agent_utility(lambda, agent);
        for (int v : empties) {
            Rational candidate = instance.agent_utility_with_agent_at(lambda, agent, v);
            if (candidate > current)
                out.push_back({Deviation::Kind::Jump, agent, v, candidate - current, Rational(0)});
        }
    }
    return out;
}

bool is_jump_stable(const TdgInstance& instance, const Assignment& lambda) {
    instance.validate_assignment(lambda);
    const std::vector<int> empties = empty_nodes(instance, lambda);
    if (empties.empty()) return true;
    for (int agent = 0; agent < instance.n(); ++agent) {
        if (instance.nonzero_row(agent).empty()) continue;
        const Rational current = instance.agent_utility(lambda, agent);
        for (int v : empties)
            if (instance.agent_utility_with_agent_at(lambda, agent, v) > current) return false;
    }
    return true;
}

std::vector<Deviation> beneficial_swaps(const TdgInstance& instance, const Assignment& lambda) {
    instance.validate_assignment(lambda);
    std::vector<Deviation> out;
    std::vector<Rational> current;
    current.reserve(instance.n());
    for (int a = 0; a < instance.n(); ++a) current.push_back(instance.agent_utility(lambda, a));
    for (int i = 0; i < instance.n(); ++i)
        for (int j = i + 1; j < instance.n(); ++j) {
            Rational ui = instance.agent_utility_after_swap(lambda, i, j, i);
            if (!(ui > current[i])) continue;
            Rational uj = instance.agent_utility_after_swap(lambda, i, j, j);
            if (!(uj > current[j])) continue;
            out.push_back({Deviation::Kind::Swap, i, j, ui - current[i], uj - current[j]});
        }
    return out;
}

bool is_swap_stable(const TdgInstance& instance, const Assignment& lambda) {
    instance.validate_assignment(lambda);
    std::vector<Rational> current;
    current.reserve(instance.n());
    for (int a = 0; a < instance.n(); ++a) current.push_back(instance.agent_utility(lambda, a));
    for (int i = 0; i < instance.n(); ++i)
        for (int j = i + 1; j < instance.n(); ++j) {
            if (!(instance.agent_utility_after_swap(lambda, i, j, i) > current[i])) continue;
            if (instance.agent_utility_after_swap(lambda, i, j, j) > current[j]) return false;
        }
    return true;
}

Rational potential_phi(const TdgInstance& instance, const Assignment& lambda) {
    instance.validate_assignment(lambda);
    Rational sum(0);
    for (int a = 0; a < instance.n(); ++a) sum += instance.agent_utility(lambda, a);
    return sum;
}

std::vector<Rational> potential_lambda_vec(const TdgInstance& instance, const Assignment& lambda,
                                           const std::vector<int>& order) {
    instance.validate_assignment(lambda);
    if (!is_topological_order(friendship_graph(instance.utilities()), order))
        throw std::invalid_argument("no topological order");
    std::vector<Rational> vec;
    vec.reserve(order.size());
    for (int agent : order) vec.push_back(instance.agent_utility(lambda, agent));
    return vec;
}

}  // namespace tdg
