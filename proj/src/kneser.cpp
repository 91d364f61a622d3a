#include "altermatic/kneser.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "altermatic/errors.hpp"

namespace altermatic {

namespace {

// Visits every r-subset of [m] in lexicographic order.
template <typename F>
void for_each_subset(int m, int r, F&& f)
{
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        f(make_set(idx));
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i + 1)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    double b = 1.0;
    for (int i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

void sort_lex(std::vector<VertexSet>& edges) { std::sort(edges.begin(), edges.end(), lex_less); }

} // namespace

SimpleGraph kneser_graph(std::span<const VertexSet> edges)
{
    SimpleGraph g(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if ((edges[i] & edges[j]) == 0)
                g.add_edge(i, j);
    return g;
}

SimpleGraph kneser_graph(const Hypergraph& h) { return kneser_graph(h.edges()); }

Hypergraph complete_uniform(int m, int r)
{
    if (r < 1 || m < r || m > kMaxVertices)
        throw ArgumentError("complete_uniform requires 1 <= r <= m <= " + std::to_string(kMaxVertices));
    std::vector<VertexSet> edges;
    for_each_subset(m, r, [&](VertexSet s) { edges.push_back(s); });
    return Hypergraph(m, std::move(edges));
}

Hypergraph schrijver_hypergraph(int m, int r)
{
    if (r < 1 || m < 2 * r || m > kMaxVertices)
        throw ArgumentError("schrijver_hypergraph requires r >= 1 and m >= 2r");
    std::vector<VertexSet> edges;
    const VertexSet wrap = vertex_bit(1) | vertex_bit(m);
    for_each_subset(m, r, [&](VertexSet s) {
        if ((s & (s >> 1)) == 0 && (s & wrap) != wrap)
            edges.push_back(s);
    });
    return Hypergraph(m, std::move(edges));
}

Hypergraph random_hypergraph(int n, std::size_t edge_count, SizeRange sizes, std::uint64_t seed)
{
    if (n < 1 || n > kMaxVertices)
        throw ArgumentError("random_hypergraph: n out of range");
    if (sizes.min < 1 || sizes.max < sizes.min || sizes.max > n)
        throw ArgumentError("random_hypergraph: edge size range must satisfy 1 <= min <= max <= n");
    if (edge_count == 0)
        throw ArgumentError("random_hypergraph: edge count must be positive");

    double available = 0.0;
    for (int s = sizes.min; s <= sizes.max; ++s)
        available += binomial(n, s);
    if (static_cast<double>(edge_count) > available)
        throw ArgumentError("random_hypergraph: only " + std::to_string(static_cast<long long>(available)) +
                            " subsets have a size in range, " + std::to_string(edge_count) + " requested");

    std::mt19937_64 rng(seed);
    std::vector<VertexSet> chosen;

    if (available <= 1 << 20) {
        std::vector<VertexSet> pool;
        pool.reserve(static_cast<std::size_t>(available));
        for (int s = sizes.min; s <= sizes.max; ++s)
            for_each_subset(n, s, [&](VertexSet e) { pool.push_back(e); });
        sort_lex(pool);
        std::sample(pool.begin(), pool.end(), std::back_inserter(chosen), static_cast<std::ptrdiff_t>(edge_count),
                    rng);
    } else {
        // Sample a size weighted by its subset count, then a uniform subset of that size.
        std::vector<double> weights;
        for (int s = sizes.min; s <= sizes.max; ++s)
            weights.push_back(binomial(n, s));
        std::discrete_distribution<int> pick_size(weights.begin(), weights.end());
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            verts[static_cast<std::size_t>(v)] = v + 1;
        std::unordered_set<VertexSet> seen;
        while (chosen.size() < edge_count) {
            const int s = sizes.min + pick_size(rng);
            std::shuffle(verts.begin(), verts.end(), rng);
            const VertexSet e = make_set(std::span<const int>(verts.data(), static_cast<std::size_t>(s)));
            if (seen.insert(e).second)
                chosen.push_back(e);
        }
    }
    sort_lex(chosen);
    return Hypergraph(n, std::move(chosen));
}

} // namespace altermatic
