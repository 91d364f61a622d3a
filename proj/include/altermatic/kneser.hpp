#pragma once

#include <cstdint>
#include <span>

#include "altermatic/hypercore.hpp"

namespace altermatic {

/// KG(H): vertex i is the i-th edge of H; i ~ j iff the edges are disjoint.
SimpleGraph kneser_graph(const Hypergraph& h);
SimpleGraph kneser_graph(std::span<const VertexSet> edges);

/// All r-subsets of [m] in lexicographic order. KG of the result is KG(m, r).
Hypergraph complete_uniform(int m, int r);

/// Stable r-subsets of the m-cycle (no i,i+1 and not both 1 and m), lexicographic.
/// Requires m >= 2r.
Hypergraph schrijver_hypergraph(int m, int r);

struct SizeRange {
    int min = 1;
    int max = 1;
};

/// `edge_count` distinct edges drawn uniformly without replacement among the subsets of [n]
/// whose size lies in `sizes`, returned in lexicographic order. Deterministic for a given seed.
Hypergraph random_hypergraph(int n, std::size_t edge_count, SizeRange sizes, std::uint64_t seed);

} // namespace altermatic
