#include <doctest.h>

#include <random>
#include <set>

#include "altermatic/colorer.hpp"
#include "altermatic/errors.hpp"
#include "altermatic/kneser.hpp"
#include "oracles.hpp"

using namespace altermatic;

namespace {

SimpleGraph complete(std::size_t n)
{
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution coin(density);
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

int colors_used(const Coloring& c) { return static_cast<int>(std::set<int>(c.assignment.begin(), c.assignment.end()).size()); }

} // namespace

TEST_CASE("is_proper")
{
    const auto petersen = kneser_graph(complete_uniform(5, 2));
    const auto chi = chromatic_number(petersen);
    CHECK(is_proper(petersen, chi.witness));
    CHECK_FALSE(is_proper(petersen, Coloring::from_assignment(std::vector<int>(10, 1))));
    CHECK(is_proper(SimpleGraph(0), Coloring{}));
    CHECK_THROWS_AS(is_proper(petersen, Coloring::from_assignment({1, 2})), ArgumentError);
    CHECK_THROWS_AS(Coloring::from_assignment({1, 0}), ArgumentError);
}

TEST_CASE("chromatic_at_most")
{
    const auto petersen = kneser_graph(complete_uniform(5, 2));
    CHECK_FALSE(chromatic_at_most(petersen, 2));
    CHECK(chromatic_at_most(petersen, 3));
    CHECK(oracle::chromatic_exhaustive(petersen) == 3);

    CHECK(chromatic_at_most(SimpleGraph(4), 1));
    CHECK_FALSE(chromatic_at_most(SimpleGraph(4), 0));
    CHECK(chromatic_at_most(SimpleGraph(0), 0));
    CHECK_FALSE(chromatic_at_most(complete(4), 3));
    CHECK(chromatic_at_most(complete(4), 4));
}

TEST_CASE("chromatic_number")
{
    CHECK(chromatic_number(kneser_graph(complete_uniform(5, 2))).chi == 3);
    CHECK(chromatic_number(kneser_graph(complete_uniform(4, 2))).chi == 2);
    CHECK(chromatic_number(SimpleGraph(0)).chi == 0);
    CHECK(chromatic_number(SimpleGraph(3)).chi == 1);
    CHECK(chromatic_number(complete(5)).chi == 5);
}

TEST_CASE("chromatic_number matches exhaustive search on small graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const double density = 0.2 + 0.1 * (trial % 7);
        const auto g = random_graph(rng, n, density);
        const auto result = chromatic_number(g);
        REQUIRE(result.chi == oracle::chromatic_exhaustive(g));
        CHECK(is_proper(g, result.witness));
        CHECK(colors_used(result.witness) == result.chi);
        CHECK(result.witness.palette == result.chi);
        // Monotone in t.
        for (int t = 0; t <= static_cast<int>(n); ++t)
            CHECK(chromatic_at_most(g, t) == (t >= result.chi));
    }
}

TEST_CASE("Kneser graphs have chi = m - 2r + 2")
{
    for (auto [m, r] : {std::pair{4, 2}, {5, 2}, {6, 2}, {7, 2}, {6, 3}, {7, 3}, {5, 1}, {9, 3}}) {
        const auto g = kneser_graph(complete_uniform(m, r));
        const auto result = chromatic_number(g);
        CHECK_MESSAGE(result.chi == m - 2 * r + 2, "m=" << m << " r=" << r);
        CHECK(is_proper(g, result.witness));
    }
}

TEST_CASE("witnesses are deterministic")
{
    const auto g = kneser_graph(complete_uniform(6, 2));
    CHECK(chromatic_number(g).witness == chromatic_number(g).witness);
    CHECK(greedy_dsatur(g) == greedy_dsatur(g));
}

TEST_CASE("greedy bounds bracket chi")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_graph(rng, 12, 0.4);
        const auto greedy = greedy_dsatur(g);
        const auto clique = greedy_clique(g);
        const int chi = chromatic_number(g).chi;
        CHECK(is_proper(g, greedy));
        CHECK(static_cast<int>(clique.size()) <= chi);
        CHECK(chi <= greedy.palette);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                CHECK(g.adjacent(clique[i], clique[j]));
    }
}
