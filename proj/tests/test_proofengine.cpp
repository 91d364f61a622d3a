#include <doctest.h>

#include <random>

#include "altermatic/altermatic.hpp"
#include "altermatic/errors.hpp"
#include "altermatic/kneser.hpp"
#include "altermatic/proofengine.hpp"
#include "oracles.hpp"

using namespace altermatic;

namespace {

int level(const LambdaOutcome& o)
{
    REQUIRE(std::holds_alternative<SignedLevel>(o));
    return std::get<SignedLevel>(o).value;
}

// Proper coloring of KG(H) with chi colors, as edge colors of H.
Coloring optimal_coloring(const Hypergraph& h) { return chromatic_number(kneser_graph(h)).witness; }

Coloring random_surjective(std::mt19937_64& rng, std::size_t len, int palette)
{
    std::vector<int> a(len);
    std::uniform_int_distribution<int> pick(1, palette);
    for (auto& x : a)
        x = pick(rng);
    for (int c = 1; c <= palette && static_cast<std::size_t>(c) <= len; ++c)
        a[static_cast<std::size_t>(c - 1)] = c;
    std::shuffle(a.begin(), a.end(), rng);
    return Coloring::from_assignment(std::move(a));
}

} // namespace

TEST_CASE("hbar")
{
    const auto h = Hypergraph::from_lists(3, {{1, 2}, {3}});
    const auto c = Coloring::from_assignment({2, 1});
    CHECK(hbar(make_set(std::vector{1, 2}), h, c).value == 2);
    CHECK(hbar(make_set(std::vector{1, 2}), h, c).attaining == std::vector<std::size_t>{0});
    CHECK(hbar(vertex_bit(3), h, c).value == 1);
    CHECK(hbar(vertex_bit(1), h, c).value == 0);
    CHECK(hbar(vertex_bit(1), h, c).attaining.empty());
    CHECK(hbar(full_set(3), h, c).value == 2);
    CHECK_THROWS_AS(hbar(full_set(3), h, Coloring::from_assignment({1})), ArgumentError);
}

TEST_CASE("lambda on worked instances")
{
    const auto h = complete_uniform(4, 2);
    const auto c = optimal_coloring(h);
    const auto id = LinearOrder::identity(4);
    CHECK(level(lambda(SignVector::zero(4), h, c, 2, 1, id)) == 1);
    CHECK(level(lambda(SignVector::from_word("0R00"), h, c, 2, 1, id)) == 2);
    CHECK(level(lambda(SignVector::from_word("0B00"), h, c, 2, 1, id)) == -2);
    CHECK(level(lambda(SignVector::from_word("RB00"), h, c, 2, 1, id)) == 3);
    CHECK(level(lambda(SignVector::from_word("BR00"), h, c, 2, 1, id)) == -3);
}

TEST_CASE("lambda reports a tie as a witness")
{
    const auto h = complete_uniform(4, 2);
    // Edges: {1,2} {1,3} {1,4} {2,3} {2,4} {3,4}.
    const auto c = Coloring::from_assignment({2, 1, 3, 4, 1, 5});
    const auto out = lambda(SignVector::from_word("RBRB"), h, c, 2, 1, LinearOrder::identity(4));
    REQUIRE(std::holds_alternative<Witness>(out));
    const auto& w = std::get<Witness>(out);
    CHECK(w.origin == Witness::Origin::tie);
    CHECK(w.color == 1);
    CHECK(std::min(w.edge_a, w.edge_b) == 1);
    CHECK(std::max(w.edge_a, w.edge_b) == 4);
    CHECK(verify_witness(h, c, w));
}

TEST_CASE("verify_witness")
{
    const auto h = complete_uniform(4, 2);
    const auto c = Coloring::from_assignment({1, 1, 1, 1, 1, 1});
    Witness w;
    w.edge_a = 0;
    w.edge_b = 5;
    w.color = 1;
    CHECK(verify_witness(h, c, w));
    w.edge_b = 1; // {1,3} meets {1,2}
    CHECK_FALSE(verify_witness(h, c, w));
    w.edge_b = 5;
    w.color = 2;
    CHECK_FALSE(verify_witness(h, c, w));
    w.edge_b = 17;
    CHECK_FALSE(verify_witness(h, c, w));
}

TEST_CASE("lambda invariants with optimal colorings, exhaustive over nested pairs")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 3 + trial % 3;
        const auto h = oracle::random_instance(rng, n, 3 + trial, 1, 3);
        const auto c = optimal_coloring(h);
        const auto sigma = oracle::random_order(rng, n);
        for (int k = 1; k <= 2; ++k) {
            ProofContext ctx(h, c, k, sigma);
            CHECK(level(ctx.lambda(SignVector::zero(n))) == 1);
            for (const auto& y : oracle::all_words(n)) {
                const int ly = level(ctx.lambda(y));
                if (alt(y) > ctx.alt_sigma_value())
                    CHECK(std::abs(ly) >= ctx.alt_sigma_value() + 2);
                for (const auto& x : oracle::sub_words(y)) {
                    const int lx = level(ctx.lambda(x));
                    REQUIRE(std::abs(lx) <= std::abs(ly));
                    REQUIRE(lx + ly != 0);
                }
            }
        }
    }
}

TEST_CASE("neighbors of the first sequences")
{
    const auto h = complete_uniform(4, 2);
    ProofContext ctx(h, optimal_coloring(h), 1, LinearOrder::identity(4));
    CHECK(ctx.alt_sigma_value() == 2);

    const auto first = ctx.neighbors(PermissibleSequence{});
    REQUIRE(std::holds_alternative<NeighborSet>(first));
    const auto& n0 = std::get<NeighborSet>(first);
    REQUIRE(n0.sequences.size() == 1);
    CHECK(n0.sequences[0].steps == std::vector<int>{1});

    const auto second = ctx.neighbors(PermissibleSequence{{1}});
    REQUIRE(std::holds_alternative<NeighborSet>(second));
    const auto& n1 = std::get<NeighborSet>(second);
    CHECK(n1.rule == 2);
    CHECK(n1.index == 1);
    CHECK(n1.lambdas == std::vector<int>{1, 2});
    REQUIRE(n1.sequences.size() == 2);
    CHECK(n1.sequences[0].steps == std::vector<int>{1, 2});
    CHECK(n1.sequences[1].steps.empty());
}

TEST_CASE("neighbors rejects sequences that are not permissible")
{
    const auto h = complete_uniform(4, 2);
    ProofContext ctx(h, optimal_coloring(h), 1, LinearOrder::identity(4));
    CHECK_THROWS_AS(ctx.neighbors(PermissibleSequence{{3}}), ArgumentError);
    CHECK_THROWS_AS(ctx.neighbors(PermissibleSequence{{1, 1}}), ArgumentError);
    CHECK_THROWS_AS(ctx.neighbors(PermissibleSequence{{1, 7}}), ArgumentError);
    CHECK_THROWS_AS(ctx.neighbors(PermissibleSequence{{0}}), ArgumentError);
}

TEST_CASE("permissible sequence pairs")
{
    const PermissibleSequence p{{2, -4, 1}};
    CHECK(p.pair(0, 4) == SignVector::zero(4));
    CHECK(p.pair(1, 4).to_word() == "0R00");
    CHECK(p.pair(2, 4).to_word() == "0R0B");
    CHECK(p.pair(3, 4).to_word() == "RR0B");
}

TEST_CASE("audit graph: symmetry and a single degree-one start, n <= 4")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + trial % 3;
        const auto h = oracle::random_instance(rng, n, 1 + trial % 5, 1, 2);
        const auto sigma = oracle::random_order(rng, n);
        const Coloring c = trial % 2 == 0 ? optimal_coloring(h) : random_surjective(rng, h.edge_count(), 2);
        for (int k = 1; k <= 2; ++k) {
            ProofContext ctx(h, c, k, sigma);
            const auto stats = enumerate_audit_graph(ctx);
            CHECK(stats.asymmetric.empty());
            CHECK(stats.anomalies.empty());
            CHECK(stats.empty_sequence_degree == 1);
            REQUIRE(stats.empty_sequence_neighbors.size() == 1);
            CHECK(stats.empty_sequence_neighbors[0].steps == std::vector<int>{1});
            for (const auto& w : stats.witnesses)
                CHECK(verify_witness(h, c, w));
        }
    }
}

TEST_CASE("audit graph without edges")
{
    const Hypergraph h(3, {});
    ProofContext ctx(h, Coloring{}, 1, LinearOrder::identity(3));
    CHECK(ctx.alt_sigma_value() == 3);
    const auto stats = enumerate_audit_graph(ctx);
    CHECK(stats.empty_sequence_degree == 1);
    CHECK(stats.asymmetric.empty());
    CHECK(stats.witnesses.empty());
    CHECK(stats.anomalies.empty());
}

TEST_CASE("audit: one color on KG(4,2)")
{
    const auto h = complete_uniform(4, 2);
    const auto c = Coloring::from_assignment(std::vector<int>(6, 1));
    const auto r = audit(h, c, 1, LinearOrder::identity(4));
    REQUIRE(r.kind == AuditResult::Kind::witness);
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(h, c, *r.witness));
    CHECK((h.edge(r.witness->edge_a) | h.edge(r.witness->edge_b)) == full_set(4));
    CHECK(r.palette_bound == 1);
}

TEST_CASE("audit: min-capped coloring of KG(6,2)")
{
    const auto h = complete_uniform(6, 2);
    std::vector<int> a;
    for (VertexSet e : h.edges())
        a.push_back(std::min(min_vertex(e), 3));
    const auto c = Coloring::from_assignment(a);
    const auto r = audit(h, c, 1, LinearOrder::identity(6));
    CHECK(r.palette_bound == 3);
    REQUIRE(r.kind == AuditResult::Kind::witness);
    CHECK(verify_witness(h, c, *r.witness));
}

TEST_CASE("audit: optimal colorings pass")
{
    for (auto [m, r] : {std::pair{4, 2}, {5, 2}, {6, 2}}) {
        const auto h = complete_uniform(m, r);
        const auto c = optimal_coloring(h);
        const auto res = audit(h, c, 1, LinearOrder::identity(m));
        CHECK(res.kind == AuditResult::Kind::proper_within_bound);
        CHECK_FALSE(res.witness.has_value());
        CHECK(res.palette > res.palette_bound);
    }
}

TEST_CASE("audit: random improper colorings within the bound always give a witness")
{
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + trial % 3;
        const auto h = oracle::random_instance(rng, n, 6 + trial % 6, 1, 3);
        const auto sigma = oracle::random_order(rng, n);
        for (int k = 1; k <= 2; ++k) {
            const int alt_i = alt_sigma(h, sigma, k).alt_value;
            const int bound = n - alt_i + k - 2;
            if (bound < 1 || h.edge_count() == 0)
                continue;
            const auto c = random_surjective(rng, h.edge_count(), std::min<int>(bound, static_cast<int>(h.edge_count())));
            const auto res = audit(h, c, k, sigma);
            REQUIRE(res.kind == AuditResult::Kind::witness);
            CHECK(verify_witness(h, c, *res.witness));
        }
    }
}

TEST_CASE("audit is deterministic")
{
    const auto h = complete_uniform(5, 2);
    std::mt19937_64 rng(5);
    const auto c = random_surjective(rng, h.edge_count(), 2);
    const auto a = audit(h, c, 1, LinearOrder({2, 5, 1, 4, 3}));
    const auto b = audit(h, c, 1, LinearOrder({2, 5, 1, 4, 3}));
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->edge_a == b.witness->edge_a);
    CHECK(a.witness->edge_b == b.witness->edge_b);
    CHECK(a.witness->context == b.witness->context);
    CHECK(a.steps == b.steps);
    CHECK(a.last == b.last);
}

TEST_CASE("audit errors")
{
    const auto h = complete_uniform(5, 2);
    const auto c = Coloring::from_assignment(std::vector<int>(10, 1));
    CHECK_THROWS_AS(audit(h, Coloring::from_assignment({1, 2}), 1, LinearOrder::identity(5)), ArgumentError);
    CHECK_THROWS_AS(audit(h, c, 1, LinearOrder::identity(4)), ArgumentError);
    CHECK_THROWS_AS(audit(h, c, 0, LinearOrder::identity(5)), ArgumentError);

    // A proper coloring with many colors walks until a boundary; cap it at one step.
    const auto opt = optimal_coloring(complete_uniform(6, 2));
    CHECK_THROWS_AS(audit(complete_uniform(6, 2), opt, 1, LinearOrder::identity(6), 1), ResourceError);
}
