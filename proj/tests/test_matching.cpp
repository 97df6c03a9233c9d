#include "oracles.hpp"

#include "paireddom/errors.hpp"
#include "paireddom/generators.hpp"
#include "paireddom/matching.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace paireddom;

TEST_CASE("small fixed graphs")
{
    CHECK(maximum_matching(Graph(0, {})).size() == 0);
    CHECK(maximum_matching(Graph(1, {})).size() == 0);
    CHECK(maximum_matching(gen_path(5)).size() == 2);
    CHECK(maximum_matching(gen_cycle(5)).size() == 2);
    CHECK(maximum_matching(gen_cycle(6)).size() == 3);
    CHECK(maximum_matching(gen_star(6)).size() == 1);
    CHECK(maximum_matching(gen_complete(7)).size() == 3);
}

TEST_CASE("blossom contraction is needed")
{
    // Triangle 0-1-2 with tails 2-3 and 0-4-5: greedy from the triangle can
    // block the augmenting path through the odd cycle.
    const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
    const auto m = maximum_matching(g);
    CHECK(m.size() == 3);
    CHECK(is_valid_matching(g, m));
}

TEST_CASE("Petersen graph has a perfect matching")
{
    const auto cubic = catalog_cubic();
    const Graph& petersen = cubic.back().graph;
    REQUIRE(petersen.order() == 10);
    CHECK(maximum_matching_size_bitmask(petersen) == 5);
    const auto m = maximum_matching(petersen);
    CHECK(m.size() == 5);
    CHECK(is_valid_matching(petersen, m));
    CHECK(m.matched_vertices() == petersen.vertices());
}

TEST_CASE("validity checker rejects bad matchings")
{
    const Graph g = gen_path(4);
    CHECK(is_valid_matching(g, Matching{{{0, 1}, {2, 3}}}));
    CHECK_FALSE(is_valid_matching(g, Matching{{{0, 2}}}));
    CHECK_FALSE(is_valid_matching(g, Matching{{{0, 1}, {1, 2}}}));
    CHECK_FALSE(is_valid_matching(g, Matching{{{3, 4}}}));
}

TEST_CASE("perfect matching on induced subgraphs")
{
    const Graph g = gen_path(6);
    const auto pm = perfect_matching(g, VertexSet{1, 2, 4, 5});
    REQUIRE(pm.has_value());
    CHECK(pm->pairs == std::vector<Edge>{{1, 2}, {4, 5}});
    CHECK_FALSE(perfect_matching(g, VertexSet{0, 2}).has_value());
    CHECK_FALSE(perfect_matching(g, VertexSet{0, 1, 2}).has_value());
    CHECK(has_perfect_matching(g, VertexSet{}));
}

TEST_CASE("bitmask oracle refuses large inputs")
{
    CHECK_THROWS_AS(maximum_matching_size_bitmask(gen_path(bitmask_matching_cap + 1)), CapExceededError);
}

TEST_CASE("bitmask oracle agrees with the recursive reference")
{
    for (std::size_t n = 0; n <= 5; ++n)
        oracle::for_each_labeled_graph(n, [](const Graph& g) {
            CHECK(maximum_matching_size_bitmask(g) == oracle::max_matching(g));
        });
}

TEST_CASE("differential: blossom against bitmask DP on random graphs")
{
    std::mt19937_64 rng(20240611);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 15);
        const double p = 0.1 + 0.1 * static_cast<double>(rng() % 6);
        const Graph g = oracle::random_graph(n, p, rng);
        const auto m = maximum_matching(g);
        INFO("n=" << n << " edges=" << serialize(g));
        CHECK(is_valid_matching(g, m));
        CHECK(m.size() == maximum_matching_size_bitmask(g));
    }
}

TEST_CASE("matching size is invariant under relabeling")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 10);
        const Graph g = oracle::random_graph(n, 0.3, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(perm[u], perm[v]);
        CHECK(maximum_matching(Graph(n, edges)).size() == maximum_matching(g).size());
    }
}
