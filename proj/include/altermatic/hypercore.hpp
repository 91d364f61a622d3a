#pragma once

// Core domain types: hypergraphs over [n], sign vectors in {R,0,B}^n, linear
// orderings of the vertex set, and simple graphs.
//
// Vertices are 1-based. A vertex subset is a 64-bit mask with bit (v-1) set for
// vertex v, so n is capped at kMaxVertices.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altermatic/bitset.hpp"
#include "altermatic/limits.hpp"

namespace altermatic {

using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) noexcept { return VertexSet{1} << (v - 1); }
constexpr VertexSet full_set(int n) noexcept { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
constexpr int set_size(VertexSet s) noexcept { return std::popcount(s); }
constexpr bool is_subset(VertexSet a, VertexSet b) noexcept { return (a & ~b) == 0; }
constexpr int min_vertex(VertexSet s) noexcept { return std::countr_zero(s) + 1; }

VertexSet make_set(std::span<const int> vertices);
std::vector<int> set_elements(VertexSet s);
std::string format_set(VertexSet s); // "{1,3,4}"

/// Lexicographic order on the sorted element lists.
bool lex_less(VertexSet a, VertexSet b) noexcept;

/// A simple hypergraph on [n]: distinct nonempty edges, in a fixed order.
/// Edge order defines the vertex indices of the Kneser graph.
class Hypergraph {
public:
    /// Throws ArgumentError on empty, out-of-range or duplicate edges, or n outside [1, kMaxVertices].
    Hypergraph(int n, std::vector<VertexSet> edges);

    static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const VertexSet> edges() const noexcept { return edges_; }
    VertexSet edge(std::size_t i) const { return edges_[i]; }

    /// Renames vertex v to pos(v), where pos is the inverse of `perm` (perm[j-1] = vertex at position j).
    /// Edge order is kept.
    Hypergraph relabeled_by_position(std::span<const int> perm) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_;
    std::vector<VertexSet> edges_;
};

/// X = (X^R, X^B), an element of {R,0,B}^n.
struct SignVector {
    int n = 0;
    VertexSet reds = 0;
    VertexSet blues = 0;

    SignVector() = default;
    SignVector(int n, VertexSet reds, VertexSet blues);

    /// Word over {R,B,0} of length n, e.g. "RRBB0R0RB". Commas and spaces are ignored.
    static SignVector from_word(std::string_view word);
    static SignVector zero(int n) { return SignVector(n, 0, 0); }

    std::string to_word() const;
    VertexSet support() const noexcept { return reds | blues; }
    bool empty() const noexcept { return support() == 0; }
    SignVector mirrored() const { return SignVector(n, blues, reds); }

    friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// Linear ordering v_{i_1} < ... < v_{i_n}; perm holds (i_1, ..., i_n).
class LinearOrder {
public:
    /// Throws ArgumentError unless perm is a permutation of [n].
    explicit LinearOrder(std::vector<int> perm);

    static LinearOrder identity(int n);
    /// Space-separated vertex ids, e.g. "2 3 1".
    static LinearOrder parse(std::string_view text, int n);

    int size() const noexcept { return static_cast<int>(perm_.size()); }
    std::span<const int> perm() const noexcept { return perm_; }
    /// Vertex at 1-based position j.
    int at(int j) const { return perm_[static_cast<std::size_t>(j - 1)]; }
    bool is_identity() const noexcept;
    std::string to_string() const;

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

private:
    std::vector<int> perm_;
};

/// Undirected loopless graph with bit-matrix adjacency. Vertices are 0-based indices.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t vcount);

    std::size_t vertex_count() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept;

    /// Throws ArgumentError on loops or out-of-range endpoints.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const noexcept { return rows_[u].test(v); }
    std::size_t degree(std::size_t u) const noexcept { return rows_[u].count(); }
    const DynamicBitset& row(std::size_t u) const noexcept { return rows_[u]; }

    SimpleGraph induced(std::span<const std::size_t> vertices) const;

private:
    std::vector<DynamicBitset> rows_;
};

/// Length of a longest alternating subsequence of the nonzero entries, by one scan.
int alt(const SignVector& x) noexcept;

/// Number of nonzero entries |X|.
int support_size(const SignVector& x) noexcept;

/// X ⊆ Y componentwise. Throws ArgumentError if lengths differ.
bool subset_of(const SignVector& x, const SignVector& y);

/// X_σ: position j of the word labels vertex σ(j).
SignVector apply_order(const SignVector& x, const LinearOrder& sigma);

/// H restricted to X_σ: edges of H lying inside X^R_σ or inside X^B_σ, in H's order.
struct Restriction {
    VertexSet vertices = 0;                 // X^R_σ ∪ X^B_σ
    std::vector<VertexSet> edges;
    std::vector<std::size_t> source_index;  // index of each retained edge in H
};

Restriction restrict(const Hypergraph& h, const SignVector& x, const LinearOrder& sigma);

} // namespace altermatic
