#include <doctest.h>

#include <random>

#include "altermatic/altermatic.hpp"
#include "altermatic/errors.hpp"
#include "altermatic/kneser.hpp"
#include "oracles.hpp"

using namespace altermatic;

TEST_CASE("feasible")
{
    const auto h = complete_uniform(4, 2);
    const auto id = LinearOrder::identity(4);
    CHECK(feasible(h, SignVector::zero(4), id, 1));
    CHECK(feasible(h, SignVector::zero(4), LinearOrder({4, 3, 2, 1}), 1));
    CHECK_FALSE(feasible(h, SignVector::from_word("RR00"), id, 1));
    // Restriction keeps {1,2} and {3,4}; they are disjoint so KG needs 2 colors.
    CHECK_FALSE(feasible(h, SignVector::from_word("RRBB"), id, 2));
    CHECK(feasible(h, SignVector::from_word("RRBB"), id, 3));
    CHECK(feasible(h, SignVector::from_word("RB00"), id, 1));
    CHECK_THROWS_AS(feasible(h, SignVector::zero(4), id, 0), ArgumentError);
}

TEST_CASE("feasibility is closed under taking sub-words, n <= 6")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 4 + trial % 3;
        const auto h = oracle::random_instance(rng, n, 8, 1, 3);
        const auto sigma = oracle::random_order(rng, n);
        for (int k = 1; k <= 3; ++k) {
            for (const auto& y : oracle::all_words(n)) {
                if (!feasible(h, y, sigma, k))
                    continue;
                for (const auto& x : oracle::sub_words(y))
                    REQUIRE(feasible(h, x, sigma, k));
            }
        }
    }
}

TEST_CASE("alt_sigma on worked instances")
{
    SUBCASE("KG(4,2), k = 1")
    {
        const auto r = alt_sigma(complete_uniform(4, 2), LinearOrder::identity(4), 1);
        CHECK(r.alt_value == 2);
        CHECK(oracle::alt_sigma_enumerate(complete_uniform(4, 2), LinearOrder::identity(4), 1) == 2);
        CHECK(alt(r.witness) == 2);
        CHECK(feasible(complete_uniform(4, 2), r.witness, r.sigma, 1));
        CHECK(r.bound == 4 - 2 + 0);
    }
    SUBCASE("KG(6,3), k = 1")
    {
        const auto h = complete_uniform(6, 3);
        CHECK(oracle::alt_sigma_enumerate(h, LinearOrder::identity(6), 1) == 4);
        CHECK(alt_sigma(h, LinearOrder::identity(6), 1).alt_value == 4);
    }
    SUBCASE("no edges")
    {
        const Hypergraph h(5, {});
        const auto r = alt_sigma(h, LinearOrder::identity(5), 1);
        CHECK(r.alt_value == 5);
        CHECK(r.bound == 0);
    }
}

TEST_CASE("alt_sigma reaches n once k exceeds chi")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = oracle::random_instance(rng, 5, 7, 1, 3);
        const int chi = chromatic_number(kneser_graph(h)).chi;
        const auto sigma = oracle::random_order(rng, 5);
        CHECK(alt_sigma(h, sigma, chi + 1).alt_value == 5);
        CHECK(alt_min(h, chi + 1).alt_value == 5);
        CHECK(alt_min(h, chi + 1).bound == chi);
    }
}

TEST_CASE("pruned search equals the 3^n scan")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + trial % 4;
        const auto h = oracle::random_instance(rng, n, 2 + trial % 9, 1, 3);
        const auto sigma = oracle::random_order(rng, n);
        for (int k = 1; k <= 3; ++k) {
            const auto r = alt_sigma(h, sigma, k);
            REQUIRE(r.alt_value == oracle::alt_sigma_enumerate(h, sigma, k));
            CHECK(alt(r.witness) == r.alt_value);
            CHECK(feasible(h, r.witness, sigma, k));
        }
    }
}

TEST_CASE("alt_sigma is nondecreasing in k and bounds chi for every ordering")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + trial % 3;
        const auto h = oracle::random_instance(rng, n, 9, 1, 3);
        const int chi = chromatic_number(kneser_graph(h)).chi;
        const auto sigma = oracle::random_order(rng, n);
        int previous = -1;
        for (int k = 1; k <= chi + 1; ++k) {
            const auto r = alt_sigma(h, sigma, k);
            CHECK(r.alt_value >= previous);
            CHECK(chi >= n - r.alt_value + k - 1);
            previous = r.alt_value;
        }
    }
}

TEST_CASE("complete uniform families: alt_sigma = 2r - 2 for every ordering")
{
    for (auto [m, r] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
        const auto h = complete_uniform(m, r);
        const auto report = alt_min(h, 1);
        CHECK(report.alt_value == 2 * r - 2);
        CHECK(report.bound == m - 2 * r + 2);
        std::mt19937_64 rng(static_cast<std::uint64_t>(m * 10 + r));
        for (int i = 0; i < 5; ++i)
            CHECK(alt_sigma(h, oracle::random_order(rng, m), 1).alt_value == 2 * r - 2);
    }
}

TEST_CASE("alt_min modes")
{
    const auto h = complete_uniform(5, 2);
    const auto ex = alt_min(h, 1);
    CHECK(ex.alt_value == 2);
    CHECK(ex.sigma_mode == SigmaMode::exhaustive);
    CHECK(ex.orderings_evaluated == 120);
    CHECK(lower_bound(h, 1, ex) == 3);

    AltMinOptions sampled;
    sampled.mode = SigmaMode::sampled;
    sampled.samples = 5;
    sampled.seed = 3;
    const auto sa = alt_min(h, 1, sampled);
    CHECK(sa.sigma_mode == SigmaMode::sampled);
    CHECK(sa.orderings_evaluated == 6);
    CHECK(sa.alt_value >= ex.alt_value);

    AltMinOptions capped;
    capped.factorial_cap = 4;
    CHECK_THROWS_AS(alt_min(h, 1, capped), ArgumentError);

    CHECK(alt_min(Hypergraph(4, {}), 1).alt_value == 4);
    CHECK(lower_bound(Hypergraph(4, {}), 1, alt_min(Hypergraph(4, {}), 1)) == 0);
}

TEST_CASE("sampled mode never reports below the exact minimum")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        const auto h = oracle::random_instance(rng, 6, 10, 1, 3);
        for (int k = 1; k <= 2; ++k) {
            const int exact = alt_min(h, k).alt_value;
            AltMinOptions opt;
            opt.mode = SigmaMode::sampled;
            opt.samples = 10;
            opt.seed = static_cast<std::uint64_t>(trial);
            CHECK(alt_min(h, k, opt).alt_value >= exact);
        }
    }
}

TEST_CASE("OpenMP alt_min and the serial reference agree exactly")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + trial % 3;
        const auto h = oracle::random_instance(rng, n, 4 + trial, 1, 3);
        for (int k = 1; k <= 2; ++k) {
            AltMinOptions opt;
            if (trial % 2 == 1) {
                opt.mode = SigmaMode::sampled;
                opt.samples = 12;
                opt.seed = static_cast<std::uint64_t>(trial);
            }
            const auto a = alt_min(h, k, opt);
            const auto b = alt_min_serial(h, k, opt);
            CHECK(a.alt_value == b.alt_value);
            CHECK(a.sigma == b.sigma);
            CHECK(a.witness == b.witness);
            CHECK(a.orderings_evaluated == b.orderings_evaluated);
        }
    }
}

TEST_CASE("exhaustive ties resolve to the first ordering in lexicographic order")
{
    const auto h = complete_uniform(5, 2);
    CHECK(alt_min(h, 1).sigma.is_identity());
    CHECK(alt_min_serial(h, 1).sigma.is_identity());
}

TEST_CASE("verify_theorem")
{
    SUBCASE("KG(5,2), k = 1 is tight")
    {
        const auto t = verify_theorem(complete_uniform(5, 2), 1);
        CHECK(t.bound == 3);
        CHECK(t.chi == 3);
        CHECK(t.holds);
        CHECK(t.tight);
        REQUIRE(t.report.exact_chi.has_value());
        CHECK(*t.report.exact_chi == 3);
    }
    SUBCASE("SG(5,2), k = 1")
    {
        const auto t = verify_theorem(schrijver_hypergraph(5, 2), 1);
        CHECK(t.chi == 3);
        CHECK(t.holds);
    }
    SUBCASE("random n = 6, k = 2")
    {
        const auto h = random_hypergraph(6, 9, {1, 3}, 12345);
        CHECK(verify_theorem(h, 2).holds);
    }
    SUBCASE("k out of range")
    {
        CHECK_THROWS_AS(verify_theorem(complete_uniform(4, 2), 4), ArgumentError);
        CHECK_NOTHROW(verify_theorem(complete_uniform(4, 2), 3));
        CHECK_THROWS_AS(verify_theorem(complete_uniform(4, 2), 0), ArgumentError);
    }
    SUBCASE("k = chi + 1 gives the chromatic number")
    {
        const auto t = verify_theorem(complete_uniform(6, 2), 5);
        CHECK(t.report.alt_value == 6);
        CHECK(t.bound == 4);
        CHECK(t.tight);
    }
}
