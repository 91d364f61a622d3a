#include "altermatic/selftest.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "altermatic/altermatic.hpp"
#include "altermatic/colorer.hpp"
#include "altermatic/kneser.hpp"
#include "altermatic/proofengine.hpp"

namespace altermatic {

namespace {

// Max alt over all 3^n words whose restriction has no edge (k = 1), scanning words directly.
int enumerate_alt_k1(const Hypergraph& h)
{
    const int n = h.vertex_count();
    int best = 0;
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    while (true) {
        VertexSet r = 0, b = 0;
        for (int i = 0; i < n; ++i) {
            if (digit[static_cast<std::size_t>(i)] == 1)
                r |= vertex_bit(i + 1);
            if (digit[static_cast<std::size_t>(i)] == 2)
                b |= vertex_bit(i + 1);
        }
        const bool ok = std::none_of(h.edges().begin(), h.edges().end(),
                                     [&](VertexSet e) { return is_subset(e, r) || is_subset(e, b); });
        // Longest alternating subsequence via the sign-change count, recomputed here by hand.
        int changes = 0, last = 0, nonzero = 0;
        for (int i = 0; i < n; ++i) {
            const int d = digit[static_cast<std::size_t>(i)];
            if (d == 0)
                continue;
            ++nonzero;
            if (last != 0 && d != last)
                ++changes;
            last = d;
        }
        if (ok)
            best = std::max(best, nonzero == 0 ? 0 : changes + 1);
        int i = 0;
        while (i < n && ++digit[static_cast<std::size_t>(i)] == 3)
            digit[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return best;
    }
}

SelftestCase check(std::string name, const std::function<std::string()>& body)
{
    SelftestCase c{std::move(name), false, {}};
    try {
        c.detail = body();
        c.passed = c.detail.empty();
        if (c.passed)
            c.detail = "ok";
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

std::string expect_eq(const std::string& what, long long got, long long want)
{
    if (got == want)
        return {};
    return what + " = " + std::to_string(got) + ", expected " + std::to_string(want);
}

} // namespace

std::vector<SelftestCase> run_selftest()
{
    std::vector<SelftestCase> out;

    out.push_back(check("alt and support of RRBB0R0RB", [] {
        const auto x = SignVector::from_word("RRBB0R0RB");
        auto e = expect_eq("alt", alt(x), 4);
        return e.empty() ? expect_eq("support", support_size(x), 7) : e;
    }));

    out.push_back(check("chromatic numbers of KG(4,2), KG(5,2), SG(5,2)", [] {
        auto e = expect_eq("chi KG(4,2)", chromatic_number(kneser_graph(complete_uniform(4, 2))).chi, 2);
        if (e.empty())
            e = expect_eq("chi KG(5,2)", chromatic_number(kneser_graph(complete_uniform(5, 2))).chi, 3);
        if (e.empty())
            e = expect_eq("chi SG(5,2)", chromatic_number(kneser_graph(schrijver_hypergraph(5, 2))).chi, 3);
        return e;
    }));

    out.push_back(check("pruned alt_sigma matches full enumeration (k = 1)", [] {
        for (auto h : {complete_uniform(4, 2), complete_uniform(5, 2), complete_uniform(6, 3),
                       schrijver_hypergraph(6, 2), random_hypergraph(6, 5, {1, 3}, 11)}) {
            const int n = h.vertex_count();
            auto e = expect_eq("alt_sigma n=" + std::to_string(n),
                               alt_sigma(h, LinearOrder::identity(n), 1).alt_value, enumerate_alt_k1(h));
            if (!e.empty())
                return e;
        }
        return std::string{};
    }));

    out.push_back(check("altermatic bound on KG(5,2) is 3", [] {
        const auto r = alt_min(complete_uniform(5, 2), 1);
        auto e = expect_eq("alt", r.alt_value, 2);
        return e.empty() ? expect_eq("bound", r.bound, 3) : e;
    }));

    out.push_back(check("parallel and serial alt_min agree", [] {
        const auto h = random_hypergraph(6, 8, {1, 3}, 5);
        for (int k : {1, 2}) {
            const auto a = alt_min(h, k), b = alt_min_serial(h, k);
            if (a.alt_value != b.alt_value || a.sigma != b.sigma || a.witness != b.witness)
                return "reports differ at k = " + std::to_string(k);
        }
        return std::string{};
    }));

    out.push_back(check("audit finds a monochromatic disjoint pair on KG(4,2) with one color", [] {
        const auto h = complete_uniform(4, 2);
        const Coloring ones = Coloring::from_assignment(std::vector<int>(h.edge_count(), 1));
        const auto r = audit(h, ones, 1, LinearOrder::identity(4));
        if (r.kind != AuditResult::Kind::witness || !r.witness || !verify_witness(h, ones, *r.witness))
            return std::string("no verified witness");
        return std::string{};
    }));

    out.push_back(check("audit accepts an optimal proper coloring of KG(5,2)", [] {
        const auto h = complete_uniform(5, 2);
        const auto chi = chromatic_number(kneser_graph(h));
        const auto r = audit(h, chi.witness, 1, LinearOrder::identity(5));
        return r.kind == AuditResult::Kind::proper_within_bound ? std::string{} : std::string("unexpected witness");
    }));

    return out;
}

} // namespace altermatic
