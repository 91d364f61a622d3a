#include "altermatic/altermatic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "altermatic/errors.hpp"
#include "altermatic/kneser.hpp"

namespace altermatic {

std::string to_string(SigmaMode mode) { return mode == SigmaMode::exhaustive ? "exhaustive" : "sampled"; }

FeasibilityOracle::FeasibilityOracle(const Hypergraph& h, int k) : k_(k), kneser_(kneser_graph(h))
{
    if (k < 1)
        throw ArgumentError("k must be a positive integer");
}

bool FeasibilityOracle::feasible(const Hypergraph& positioned, VertexSet reds, VertexSet blues)
{
    const auto edges = positioned.edges();
    if (k_ == 1) {
        for (VertexSet e : edges)
            if (is_subset(e, reds) || is_subset(e, blues))
                return false;
        return true;
    }
    DynamicBitset kept(edges.size());
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (is_subset(edges[i], reds) || is_subset(edges[i], blues)) {
            kept.set(i);
            members.push_back(i);
        }
    }
    if (members.size() <= static_cast<std::size_t>(k_ - 1))
        return true;
    if (auto it = memo_.find(kept); it != memo_.end())
        return it->second;
    const bool ok = chromatic_at_most(kneser_.induced(members), k_ - 1);
    memo_.emplace(std::move(kept), ok);
    return ok;
}

bool feasible(const Hypergraph& h, const SignVector& x, const LinearOrder& sigma, int k)
{
    if (k < 1)
        throw ArgumentError("k must be a positive integer");
    const Restriction r = restrict(h, x, sigma);
    if (k == 1)
        return r.edges.empty();
    return chromatic_at_most(kneser_graph(r.edges), k - 1);
}

namespace {

void check_ordering(const Hypergraph& h, const LinearOrder& sigma)
{
    if (sigma.size() != h.vertex_count())
        throw ArgumentError("ordering length " + std::to_string(sigma.size()) + " differs from vertex count " +
                            std::to_string(h.vertex_count()));
}

// DFS over words, one position per level, branch order 0, R, B. Every node on the
// stack is feasible; infeasible children are cut (feasibility is closed under ⊆).
class AltSearch {
public:
    AltSearch(const Hypergraph& positioned, FeasibilityOracle& oracle)
        : positioned_(positioned), oracle_(oracle), n_(positioned.vertex_count())
    {
    }

    void run() { visit(0, 0, 0, 0, 0); }

    int best() const noexcept { return best_; }
    SignVector witness() const { return SignVector(n_, best_reds_, best_blues_); }

private:
    void visit(int depth, VertexSet reds, VertexSet blues, int cur_alt, int last_sign)
    {
        if (cur_alt > best_) {
            best_ = cur_alt;
            best_reds_ = reds;
            best_blues_ = blues;
        }
        if (depth == n_ || best_ == n_ || cur_alt + (n_ - depth) <= best_)
            return;
        const VertexSet p = vertex_bit(depth + 1);
        visit(depth + 1, reds, blues, cur_alt, last_sign);
        for (int sign : {1, -1}) {
            const int next_alt = cur_alt + (sign != last_sign ? 1 : 0);
            if (next_alt + (n_ - depth - 1) <= best_)
                continue;
            const VertexSet r = sign > 0 ? reds | p : reds;
            const VertexSet b = sign < 0 ? blues | p : blues;
            if (oracle_.feasible(positioned_, r, b))
                visit(depth + 1, r, b, next_alt, sign);
        }
    }

    const Hypergraph& positioned_;
    FeasibilityOracle& oracle_;
    int n_;
    int best_ = 0;
    VertexSet best_reds_ = 0;
    VertexSet best_blues_ = 0;
};

AltReport make_report(const Hypergraph& h, const LinearOrder& sigma, int k, int value, SignVector witness)
{
    AltReport r;
    r.alt_value = value;
    r.witness = witness;
    r.sigma = sigma;
    r.k = k;
    r.bound = h.vertex_count() - value + k - 1;
    return r;
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

// rank-th permutation of [n] in lexicographic order.
LinearOrder unrank_permutation(int n, std::uint64_t rank)
{
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> perm;
    perm.reserve(pool.size());
    for (int i = n; i >= 1; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        perm.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return LinearOrder(std::move(perm));
}

void check_mode(const Hypergraph& h, const AltMinOptions& options)
{
    if (options.mode == SigmaMode::exhaustive && h.vertex_count() > options.factorial_cap)
        throw ArgumentError("exhaustive ordering search needs n <= " + std::to_string(options.factorial_cap) +
                            " (n = " + std::to_string(h.vertex_count()) + "); use sampled mode");
}

std::size_t ordering_count(const Hypergraph& h, const AltMinOptions& options)
{
    return options.mode == SigmaMode::exhaustive ? static_cast<std::size_t>(factorial(h.vertex_count()))
                                                 : options.samples + 1;
}

AltReport finish_min(const Hypergraph& h, int k, const AltMinOptions& options, const LinearOrder& sigma,
                     std::size_t evaluated)
{
    AltReport r = alt_sigma(h, sigma, k);
    r.sigma_mode = options.mode;
    r.orderings_evaluated = evaluated;
    return r;
}

} // namespace

AltReport alt_sigma(const Hypergraph& h, const LinearOrder& sigma, int k, FeasibilityOracle& oracle)
{
    check_ordering(h, sigma);
    if (k != oracle.k())
        throw ArgumentError("feasibility oracle was built for a different k");
    const Hypergraph positioned = h.relabeled_by_position(sigma.perm());
    AltSearch search(positioned, oracle);
    search.run();
    return make_report(h, sigma, k, search.best(), search.witness());
}

AltReport alt_sigma(const Hypergraph& h, const LinearOrder& sigma, int k)
{
    FeasibilityOracle oracle(h, k);
    return alt_sigma(h, sigma, k, oracle);
}

std::vector<LinearOrder> sampled_orderings(int n, std::size_t samples, std::uint64_t seed)
{
    std::vector<LinearOrder> out;
    out.reserve(samples + 1);
    out.push_back(LinearOrder::identity(n));
    std::mt19937_64 rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < samples; ++i) {
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        out.emplace_back(perm);
    }
    return out;
}

AltReport alt_min_serial(const Hypergraph& h, int k, const AltMinOptions& options)
{
    check_mode(h, options);
    FeasibilityOracle oracle(h, k);
    const int n = h.vertex_count();
    std::optional<AltReport> best;
    auto consider = [&](const LinearOrder& sigma) {
        AltReport r = alt_sigma(h, sigma, k, oracle);
        if (!best || r.alt_value < best->alt_value)
            best = std::move(r);
    };
    if (options.mode == SigmaMode::exhaustive) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            consider(LinearOrder(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        for (const auto& sigma : sampled_orderings(n, options.samples, options.seed))
            consider(sigma);
    }
    best->sigma_mode = options.mode;
    best->orderings_evaluated = ordering_count(h, options);
    return *best;
}

AltReport alt_min(const Hypergraph& h, int k, const AltMinOptions& options)
{
    check_mode(h, options);
    if (k < 1)
        throw ArgumentError("k must be a positive integer");
    const int n = h.vertex_count();
    const std::size_t count = ordering_count(h, options);
    std::vector<LinearOrder> samples;
    if (options.mode == SigmaMode::sampled)
        samples = sampled_orderings(n, options.samples, options.seed);
    std::vector<int> values(count, 0);

    auto ordering_at = [&](std::size_t i) {
        return options.mode == SigmaMode::exhaustive ? unrank_permutation(n, i) : samples[i];
    };

#pragma omp parallel
    {
        FeasibilityOracle oracle(h, k);
        const auto total = static_cast<std::int64_t>(count);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < total; ++i)
            values[static_cast<std::size_t>(i)] =
                alt_sigma(h, ordering_at(static_cast<std::size_t>(i)), k, oracle).alt_value;
    }

    const auto winner = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    return finish_min(h, k, options, ordering_at(winner), count);
}

int lower_bound(const Hypergraph& h, int k, const AltReport& report)
{
    return h.vertex_count() - report.alt_value + k - 1;
}

TheoremCheck verify_theorem(const Hypergraph& h, int k, const AltMinOptions& options)
{
    if (k < 1)
        throw ArgumentError("k must be a positive integer");
    auto chi = chromatic_number(kneser_graph(h));
    if (k > chi.chi + 1)
        throw ArgumentError("k = " + std::to_string(k) + " exceeds chi(KG(H)) + 1 = " + std::to_string(chi.chi + 1));
    TheoremCheck out;
    out.report = alt_min(h, k, options);
    out.report.exact_chi = chi.chi;
    out.bound = lower_bound(h, k, out.report);
    out.chi = chi.chi;
    out.holds = out.chi >= out.bound;
    out.tight = out.chi == out.bound;
    out.chi_witness = std::move(chi.witness);
    return out;
}

} // namespace altermatic
