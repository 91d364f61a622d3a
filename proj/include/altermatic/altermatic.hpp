#pragma once

// alt_σ(H,k), alt(H,k) and the lower bound n - alt(H,k) + k - 1 on χ(KG(H)).
//
// Sign vectors handed to and returned from this module are words: position j
// of X refers to the j-th vertex of σ. apply_order() maps them to vertex space.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "altermatic/bitset.hpp"
#include "altermatic/colorer.hpp"
#include "altermatic/hypercore.hpp"

namespace altermatic {

enum class SigmaMode { exhaustive, sampled };

std::string to_string(SigmaMode mode);

struct AltReport {
    int alt_value = 0;
    SignVector witness;  // word attaining alt_value under sigma
    LinearOrder sigma = LinearOrder::identity(1);
    int k = 1;
    int bound = 0;       // n - alt_value + k - 1
    std::optional<int> exact_chi;
    SigmaMode sigma_mode = SigmaMode::exhaustive;
    std::size_t orderings_evaluated = 1;
};

/// Decides "χ(KG(H|X_σ)) ≤ k-1" (for k = 1: H|X_σ has no edge), memoized on the
/// set of retained edge indices. Works in position space: the hypergraph is
/// relabeled once so that position j of a word is vertex j.
class FeasibilityOracle {
public:
    FeasibilityOracle(const Hypergraph& h, int k);

    int k() const noexcept { return k_; }

    /// `positioned` must be H relabeled by the ordering in use; reds/blues are word positions.
    bool feasible(const Hypergraph& positioned, VertexSet reds, VertexSet blues);

    std::size_t cache_size() const noexcept { return memo_.size(); }

private:
    int k_;
    SimpleGraph kneser_;
    std::unordered_map<DynamicBitset, bool, DynamicBitsetHash> memo_;
};

/// Whether X (a word under σ) satisfies the restricted chromatic condition.
bool feasible(const Hypergraph& h, const SignVector& x, const LinearOrder& sigma, int k);

/// alt_σ(H,k) by depth-first search in σ-order with infeasibility and alt-bound cuts.
AltReport alt_sigma(const Hypergraph& h, const LinearOrder& sigma, int k);
AltReport alt_sigma(const Hypergraph& h, const LinearOrder& sigma, int k, FeasibilityOracle& oracle);

struct AltMinOptions {
    SigmaMode mode = SigmaMode::exhaustive;
    std::size_t samples = 32;   // sampled mode: random orderings in addition to the identity
    std::uint64_t seed = 0;
    int factorial_cap = 8;      // exhaustive mode: largest n accepted
};

/// alt(H,k) = min over orderings of alt_σ(H,k). Ties go to the first ordering in
/// enumeration order (lexicographic permutations; sampled: identity, then draws).
/// Evaluates orderings concurrently with OpenMP when available.
AltReport alt_min(const Hypergraph& h, int k, const AltMinOptions& options = {});

/// Single-threaded reference for alt_min; returns the identical report.
AltReport alt_min_serial(const Hypergraph& h, int k, const AltMinOptions& options = {});

/// The orderings alt_min visits in sampled mode, in order.
std::vector<LinearOrder> sampled_orderings(int n, std::size_t samples, std::uint64_t seed);

int lower_bound(const Hypergraph& h, int k, const AltReport& report);

struct TheoremCheck {
    int bound = 0;
    int chi = 0;
    bool holds = false;
    bool tight = false;
    AltReport report;
    Coloring chi_witness;
};

/// Computes the bound via alt_min and χ(KG(H)) exactly; holds = (χ ≥ bound).
/// Throws ArgumentError if k > χ + 1.
TheoremCheck verify_theorem(const Hypergraph& h, int k, const AltMinOptions& options = {});

} // namespace altermatic
