#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "tdg/stability.hpp"

using namespace tdg;

namespace {

// Independent re-check of the definitions with plain double loops; the
// production paths use cached rows and early exits, this one does not.
bool naive_jump_stable(const TdgInstance& inst, const Assignment& lambda) {
    for (int agent = 0; agent < inst.n(); ++agent) {
        Rational current(0);
        for (int j = 0; j < inst.n(); ++j)
            if (j != agent)
                current += factor_at(inst.factor(),
                                     inst.distances().at(lambda.node_of(agent), lambda.node_of(j))) *
                           inst.utilities().at(agent, j);
        for (int v = 0; v < inst.node_count(); ++v) {
            if (lambda.occupies(v)) continue;
            Rational moved(0);
            for (int j = 0; j < inst.n(); ++j)
                if (j != agent)
                    moved += factor_at(inst.factor(), inst.distances().at(v, lambda.node_of(j))) *
                             inst.utilities().at(agent, j);
            if (moved > current) return false;
        }
    }
    return true;
}

bool naive_swap_stable(const TdgInstance& inst, const Assignment& lambda) {
    for (int i = 0; i < inst.n(); ++i)
        for (int j = 0; j < inst.n(); ++j) {
            if (i == j) continue;
            Assignment swapped = swap_agents(lambda, i, j);
            if (utility(inst, swapped, i) > utility(inst, lambda, i) &&
                utility(inst, swapped, j) > utility(inst, lambda, j))
                return false;
        }
    return true;
}

TdgInstance cat_and_mouse_on_path(int nodes) {
    UtilityMatrix u(2);
    u.set(0, 1, Rational(1));
    u.set(1, 0, Rational(-1));
    return TdgInstance(std::move(u), TopologyGraph::path(nodes), DistanceFactor::reciprocal());
}

}  // namespace

TEST_CASE("beneficial_jumps on the chase instance") {
    TdgInstance inst = cat_and_mouse_on_path(4);
    // Both agents at one end, evader next to the chaser: the evader can flee.
    Assignment lambda({0, 1});
    std::vector<Deviation> devs = beneficial_jumps(inst, lambda);
    REQUIRE(devs.size() == 2);
    CHECK(devs[0].agent == 1);
    CHECK(devs[0].target == 2);
    CHECK(devs[0].gain == Rational(1, 2));  // -1 -> -1/2
    CHECK(devs[1].agent == 1);
    CHECK(devs[1].target == 3);
    CHECK(devs[1].gain == Rational(2, 3));  // -1 -> -1/3
}

TEST_CASE("full occupancy means no deviations") {
    UtilityMatrix u(3);
    u.set(0, 1, Rational(1));
    u.set(1, 2, Rational(1));
    u.set(2, 0, Rational(1));
    TdgInstance inst(std::move(u), TopologyGraph::cycle(3), DistanceFactor::reciprocal());
    CHECK(beneficial_jumps(inst, Assignment({0, 1, 2})).empty());
    CHECK(is_jump_stable(inst, Assignment({0, 1, 2})));
}

TEST_CASE("indifferent agents never deviate") {
    UtilityMatrix u(1);
    TdgInstance inst(std::move(u), TopologyGraph::path(3), DistanceFactor::reciprocal());
    CHECK(beneficial_jumps(inst, Assignment({1})).empty());
}

TEST_CASE("friendship 3-cycle on a 4-cycle topology is never stable") {
    UtilityMatrix u(3);
    u.set(0, 1, Rational(1));
    u.set(1, 2, Rational(1));
    u.set(2, 0, Rational(1));
    TdgInstance inst(std::move(u), TopologyGraph::cycle(4), DistanceFactor::reciprocal());
    std::vector<int> placement{0, 1, 2};
    std::sort(placement.begin(), placement.end());
    int unstable = 0, total = 0;
    // All injective placements of 3 agents on 4 nodes.
    std::vector<int> nodes{0, 1, 2, 3};
    do {
        Assignment lambda({nodes[0], nodes[1], nodes[2]});
        ++total;
        if (!is_jump_stable(inst, lambda)) ++unstable;
    } while (std::next_permutation(nodes.begin(), nodes.end()));
    CHECK(total == 24);
    CHECK(unstable == 24);
}

TEST_CASE("deviation order is deterministic: agent then node ascending") {
    testgen::Rng rng(555);
    for (int iter = 0; iter < 20; ++iter) {
        TdgInstance inst = testgen::random_symmetric_instance(rng.next(), 5, 7);
        Assignment lambda = testgen::random_assignment(rng.next(), inst);
        auto devs = beneficial_jumps(inst, lambda);
        for (std::size_t i = 1; i < devs.size(); ++i) {
            bool ordered = devs[i - 1].agent < devs[i].agent ||
                           (devs[i - 1].agent == devs[i].agent &&
                            devs[i - 1].target < devs[i].target);
            CHECK(ordered);
        }
    }
}

TEST_CASE("checker equivalences against the naive double loop") {
    testgen::Rng rng(8181);
    for (int iter = 0; iter < 60; ++iter) {
        TdgInstance inst = testgen::random_symmetric_instance(rng.next(), 5, 7);
        Assignment lambda = testgen::random_assignment(rng.next(), inst);
        CHECK(is_jump_stable(inst, lambda) == beneficial_jumps(inst, lambda).empty());
        CHECK(is_jump_stable(inst, lambda) == naive_jump_stable(inst, lambda));
        CHECK(is_swap_stable(inst, lambda) == beneficial_swaps(inst, lambda).empty());
        CHECK(is_swap_stable(inst, lambda) == naive_swap_stable(inst, lambda));
    }
}

TEST_CASE("swap gains require both sides to strictly improve") {
    // Two rooms; agents 0,1 together and 2,3 together; 1 and 2 both prefer
    // the exchange (the roommates pattern).
    UtilityMatrix u(4);
    u.set(0, 1, Rational(3));
    u.set(1, 3, Rational(3));
    u.set(1, 0, Rational(2));
    u.set(2, 0, Rational(3));
    u.set(2, 3, Rational(2));
    u.set(3, 2, Rational(3));
    TdgInstance inst(std::move(u), TopologyGraph(4, {{0, 1}, {2, 3}}),
                     DistanceFactor::reciprocal());
    Assignment lambda({0, 1, 2, 3});
    auto devs = beneficial_swaps(inst, lambda);
    REQUIRE(devs.size() == 1);
    CHECK(devs[0].agent == 1);
    CHECK(devs[0].target == 2);
    CHECK(devs[0].gain.positive());
    CHECK(devs[0].gain_other.positive());
    CHECK(!is_swap_stable(inst, lambda));
}

TEST_CASE("single agent has no swaps") {
    UtilityMatrix u(1);
    TdgInstance inst(std::move(u), TopologyGraph::path(2), DistanceFactor::reciprocal());
    CHECK(beneficial_swaps(inst, Assignment({0})).empty());
    CHECK(is_swap_stable(inst, Assignment({0})));
}

TEST_CASE("all-zero utilities make every assignment stable both ways") {
    TdgInstance inst(UtilityMatrix(3), TopologyGraph::path(5), DistanceFactor::reciprocal());
    testgen::Rng rng(112);
    for (int iter = 0; iter < 10; ++iter) {
        Assignment lambda = testgen::random_assignment(rng, 3, 5);
        CHECK(is_jump_stable(inst, lambda));
        CHECK(is_swap_stable(inst, lambda));
    }
}

TEST_CASE("potential phi") {
    UtilityMatrix u(2);
    u.set(0, 1, Rational(1));
    u.set(1, 0, Rational(1));
    TdgInstance inst(std::move(u), TopologyGraph::path(3), DistanceFactor::reciprocal());
    CHECK(potential_phi(inst, Assignment({0, 1})) == Rational(2));
    CHECK(potential_phi(inst, Assignment({0, 2})) == Rational(1));
    CHECK(potential_phi(TdgInstance(UtilityMatrix(2), TopologyGraph::path(3),
                                    DistanceFactor::reciprocal()),
                        Assignment({0, 1})) == Rational(0));
}

TEST_CASE("phi doubling identity for jumps on symmetric instances") {
    testgen::Rng rng(4242);
    for (int iter = 0; iter < 50; ++iter) {
        TdgInstance inst = testgen::random_symmetric_instance(rng.next(), 6, 8);
        Assignment lambda = testgen::random_assignment(rng.next(), inst);
        Rational phi = potential_phi(inst, lambda);
        for (const auto& d : beneficial_jumps(inst, lambda)) {
            Assignment moved = jump(lambda, d.agent, d.target);
            CHECK(potential_phi(inst, moved) - phi == Rational(2) * d.gain);
        }
        // Also for non-beneficial jumps: the identity is sign-agnostic.
        for (int v = 0; v < inst.node_count(); ++v) {
            if (lambda.occupies(v)) continue;
            Assignment moved = jump(lambda, 0, v);
            Rational delta = utility(inst, moved, 0) - utility(inst, lambda, 0);
            CHECK(potential_phi(inst, moved) - phi == Rational(2) * delta);
            break;
        }
    }
}

TEST_CASE("phi doubling identity for swaps on symmetric instances") {
    testgen::Rng rng(515151);
    for (int iter = 0; iter < 50; ++iter) {
        TdgInstance inst = testgen::random_symmetric_instance(rng.next(), 6, 8);
        Assignment lambda = testgen::random_assignment(rng.next(), inst);
        Rational phi = potential_phi(inst, lambda);
        for (int i = 0; i < inst.n(); ++i)
            for (int j = i + 1; j < inst.n(); ++j) {
                Assignment swapped = swap_agents(lambda, i, j);
                Rational di = utility(inst, swapped, i) - utility(inst, lambda, i);
                Rational dj = utility(inst, swapped, j) - utility(inst, lambda, j);
                CHECK(potential_phi(inst, swapped) - phi == Rational(2) * (di + dj));
            }
    }
}

TEST_CASE("lambda potential vector") {
    SUBCASE("two agents, one arc") {
        UtilityMatrix u(2);
        u.set(1, 0, Rational(1));
        TdgInstance inst(std::move(u), TopologyGraph::path(3), DistanceFactor::reciprocal());
        auto vec = potential_lambda_vec(inst, Assignment({0, 1}), {0, 1});
        REQUIRE(vec.size() == 2);
        CHECK(vec[0] == Rational(0));  // the liked agent wants nothing
        CHECK(vec[1] == Rational(1));
        CHECK_THROWS_WITH_AS(potential_lambda_vec(inst, Assignment({0, 1}), {1, 0}),
                             "no topological order", std::invalid_argument);
    }
    SUBCASE("cyclic friendship has no valid order") {
        UtilityMatrix u(2);
        u.set(0, 1, Rational(1));
        u.set(1, 0, Rational(1));
        TdgInstance inst(std::move(u), TopologyGraph::path(3), DistanceFactor::reciprocal());
        CHECK_THROWS_WITH_AS(potential_lambda_vec(inst, Assignment({0, 1}), {0, 1}),
                             "no topological order", std::invalid_argument);
    }
}

TEST_CASE("beneficial jumps strictly lex-increase the lambda vector on acyclic instances") {
    testgen::Rng rng(606060);
    int exercised = 0;
    for (int iter = 0; iter < 60; ++iter) {
        TdgInstance inst = testgen::random_dag_instance(rng.next(), 6, 8);
        std::vector<int> order = topological_order(friendship_graph(inst.utilities()));
        Assignment lambda = testgen::random_assignment(rng.next(), inst);
        auto before = potential_lambda_vec(inst, lambda, order);
        for (const auto& d : beneficial_jumps(inst, lambda)) {
            auto after = potential_lambda_vec(inst, jump(lambda, d.agent, d.target), order);
            CHECK(std::lexicographical_compare(before.begin(), before.end(), after.begin(),
                                               after.end()));
            ++exercised;
        }
    }
    CHECK(exercised > 50);  // the generator produces real deviations
}
