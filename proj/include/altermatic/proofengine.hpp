#pragma once

// Constructive form of the path-following argument behind the altermatic bound.
//
// Given a coloring h of the edges of H (a coloring of KG(H)), sign vectors are
// labeled by a signed level λ(X). Permissible sequences (nested chains of
// sign vectors growing by one signed vertex per step, whose final signed
// support is covered by their λ values) form a graph in which the empty
// sequence has degree one and, as long as h behaves like a proper coloring
// with few colors, every other sequence has degree two. Walking that graph
// from the empty sequence must therefore hit a place where h misbehaves: two
// disjoint hyperedges with the same color.
//
// Everything here works in word space under a fixed ordering σ: position j
// of a sign vector stands for vertex σ(j). Internally the hypergraph is
// relabeled so that positions and vertices coincide.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "altermatic/colorer.hpp"
#include "altermatic/hypercore.hpp"

namespace altermatic {

/// Two disjoint hyperedges with the same color.
struct Witness {
    enum class Origin {
        tie,        // h̄(X^R) = h̄(X^B) > 0 while evaluating λ
        antipodal,  // λ(X) = -λ(Y) for nested X ⊆ Y
        level_drop, // alt(X) > alt_σ but fewer than k colors on H|X
        scan,       // found by a direct pair scan after the walk stopped
    };

    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
    int color = 0;
    SignVector context; // word at which the violation surfaced
    Origin origin = Origin::tie;
};

std::string to_string(Witness::Origin origin);

/// Independent check: edges disjoint, both colored `color`.
bool verify_witness(const Hypergraph& h, const Coloring& edge_colors, const Witness& w);

struct HbarResult {
    int value = 0;                      // max color of an edge inside M, 0 if none
    std::vector<std::size_t> attaining; // ascending edge indices with that color
};

/// h̄(M) over the edges of H contained in M. Throws ArgumentError if c does not color every edge.
HbarResult hbar(VertexSet m, const Hypergraph& h, const Coloring& c);

struct SignedLevel {
    int value = 0;
    friend bool operator==(const SignedLevel&, const SignedLevel&) = default;
};

using LambdaOutcome = std::variant<SignedLevel, Witness>;

/// A chain (A_0,B_0) ⊆ ... ⊆ (A_m,B_m) stored as signed vertex insertions:
/// step s_i > 0 adds s_i to A, s_i < 0 adds -s_i to B.
struct PermissibleSequence {
    std::vector<int> steps;

    int length() const noexcept { return static_cast<int>(steps.size()); }
    /// (A_i, B_i) as a word of length n.
    SignVector pair(int i, int n) const;
    std::string to_string() const;

    friend bool operator==(const PermissibleSequence&, const PermissibleSequence&) = default;
    friend bool operator<(const PermissibleSequence& a, const PermissibleSequence& b) { return a.steps < b.steps; }
};

/// Rules produced an inconsistent state that no coloring defect explains.
struct Anomaly {
    std::string what;
    PermissibleSequence at;
    std::vector<int> lambdas;
};

struct NeighborSet {
    std::vector<PermissibleSequence> sequences; // 0, 1 or 2 entries
    std::vector<int> lambdas;                   // λ_0 .. λ_m of the input
    int rule = 0;                               // 1: λ_i = λ_{i+1}; 2: λ_i not covered
    int index = 0;                              // the i of the rule
    bool boundary = false;                      // an append fell outside [n] and was dropped
};

using NeighborOutcome = std::variant<NeighborSet, Witness, Anomaly>;
using ChainOutcome = std::variant<std::vector<int>, Witness, Anomaly>;

/// Fixed (H, coloring of E(H), k, σ, alt_σ(H,k)) with a per-instance λ cache.
/// Not thread-safe; build one per thread.
class ProofContext {
public:
    /// Computes alt_σ(H,k) itself.
    ProofContext(const Hypergraph& h, Coloring edge_colors, int k, const LinearOrder& sigma);
    ProofContext(const Hypergraph& h, Coloring edge_colors, int k, const LinearOrder& sigma, int alt_sigma_value);

    int n() const noexcept { return positioned_.vertex_count(); }
    int k() const noexcept { return k_; }
    int alt_sigma_value() const noexcept { return alt_i_; }
    const LinearOrder& sigma() const noexcept { return sigma_; }
    const Hypergraph& hypergraph() const noexcept { return original_; }
    const Coloring& coloring() const noexcept { return colors_; }
    /// Largest palette for which a completed walk is impossible: n - alt_σ + k - 2.
    int palette_bound() const noexcept { return n() - alt_i_ + k_ - 2; }

    LambdaOutcome lambda(const SignVector& word);

    /// λ along the chain, with nested-antipode and monotonicity checks.
    ChainOutcome evaluate(const PermissibleSequence& p);

    bool is_permissible(const PermissibleSequence& p, const std::vector<int>& lambdas) const;

    /// Neighbors under the two rules. Throws ArgumentError if p is malformed or not permissible.
    NeighborOutcome neighbors(const PermissibleSequence& p);

private:
    struct WordHash {
        std::size_t operator()(const std::pair<VertexSet, VertexSet>& k) const noexcept
        {
            return std::hash<VertexSet>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
        }
    };

    LambdaOutcome compute_lambda(const SignVector& word) const;
    std::optional<Witness> disjoint_pair_inside(const SignVector& word, Witness::Origin origin) const;
    void check_steps(const PermissibleSequence& p) const;

    Hypergraph original_;
    Hypergraph positioned_;
    Coloring colors_;
    int k_;
    LinearOrder sigma_;
    int alt_i_;
    std::unordered_map<std::pair<VertexSet, VertexSet>, LambdaOutcome, WordHash> cache_;
};

/// λ(X) without caching.
LambdaOutcome lambda(const SignVector& word, const Hypergraph& h, const Coloring& edge_colors, int alt_sigma_value,
                     int k, const LinearOrder& sigma);

struct AuditResult {
    enum class Kind { witness, proper_within_bound };
    Kind kind = Kind::witness;
    std::optional<Witness> witness;
    std::uint64_t steps = 0;
    int alt_sigma_value = 0;
    int palette = 0;
    int palette_bound = 0;
    PermissibleSequence last; // where the walk stopped
};

/// Raised when the neighbor rules break down without a coloring defect to show for it.
class AuditAnomaly : public std::logic_error {
public:
    explicit AuditAnomaly(Anomaly a);
    const Anomaly& anomaly() const noexcept { return anomaly_; }

private:
    Anomaly anomaly_;
};

/// Walks the sequence graph from the empty sequence. Returns a verified Witness, or
/// proper_within_bound once the walk stops at a boundary and c is proper on KG(H).
/// Throws ResourceError past step_cap, ArgumentError on a malformed coloring,
/// AuditAnomaly if the rules break down.
AuditResult audit(const Hypergraph& h, const Coloring& edge_colors, int k, const LinearOrder& sigma,
                  std::uint64_t step_cap = 10'000'000);
AuditResult audit(ProofContext& ctx, std::uint64_t step_cap = 10'000'000);

struct AuditGraphStats {
    std::size_t vertex_count = 0;
    std::map<int, std::size_t> degree_histogram; // over vertices whose neighbors were computed
    std::size_t empty_sequence_degree = 0;
    std::vector<PermissibleSequence> empty_sequence_neighbors;
    std::vector<Witness> witnesses;
    std::vector<Anomaly> anomalies;
    std::vector<std::pair<PermissibleSequence, PermissibleSequence>> asymmetric; // Q ∈ N(P) but P ∉ N(Q)
};

/// Enumerates every permissible sequence and its neighbors. Throws ResourceError if
/// the number of candidate sequences exceeds size_cap.
AuditGraphStats enumerate_audit_graph(ProofContext& ctx, std::size_t size_cap = 1'000'000);

} // namespace altermatic
