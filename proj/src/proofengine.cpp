#include "altermatic/proofengine.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "altermatic/altermatic.hpp"
#include "altermatic/errors.hpp"
#include "altermatic/kneser.hpp"

namespace altermatic {

std::string to_string(Witness::Origin origin)
{
    switch (origin) {
    case Witness::Origin::tie:
        return "tie";
    case Witness::Origin::antipodal:
        return "antipodal";
    case Witness::Origin::level_drop:
        return "level_drop";
    case Witness::Origin::scan:
        return "scan";
    }
    return "unknown";
}

bool verify_witness(const Hypergraph& h, const Coloring& edge_colors, const Witness& w)
{
    if (edge_colors.assignment.size() != h.edge_count())
        return false;
    if (w.edge_a >= h.edge_count() || w.edge_b >= h.edge_count() || w.edge_a == w.edge_b)
        return false;
    return (h.edge(w.edge_a) & h.edge(w.edge_b)) == 0 && edge_colors.assignment[w.edge_a] == w.color &&
           edge_colors.assignment[w.edge_b] == w.color;
}

namespace {

void check_coloring(const Hypergraph& h, const Coloring& c)
{
    if (c.assignment.size() != h.edge_count())
        throw ArgumentError("coloring has " + std::to_string(c.assignment.size()) + " entries for " +
                            std::to_string(h.edge_count()) + " hyperedges");
    for (int x : c.assignment)
        if (x < 1)
            throw ArgumentError("colors must be positive integers");
}

HbarResult hbar_unchecked(VertexSet m, std::span<const VertexSet> edges, const Coloring& c)
{
    HbarResult r;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!is_subset(edges[i], m))
            continue;
        const int color = c.assignment[i];
        if (color > r.value) {
            r.value = color;
            r.attaining.clear();
        }
        if (color == r.value)
            r.attaining.push_back(i);
    }
    return r;
}

} // namespace

HbarResult hbar(VertexSet m, const Hypergraph& h, const Coloring& c)
{
    check_coloring(h, c);
    return hbar_unchecked(m, h.edges(), c);
}

SignVector PermissibleSequence::pair(int i, int n) const
{
    VertexSet a = 0, b = 0;
    for (int j = 0; j < i; ++j) {
        const int s = steps[static_cast<std::size_t>(j)];
        if (s > 0)
            a |= vertex_bit(s);
        else
            b |= vertex_bit(-s);
    }
    return SignVector(n, a, b);
}

std::string PermissibleSequence::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i != 0)
            out += ' ';
        if (steps[i] > 0)
            out += '+';
        out += std::to_string(steps[i]);
    }
    return out + "]";
}

AuditAnomaly::AuditAnomaly(Anomaly a)
    : std::logic_error("audit rules broke down at " + a.at.to_string() + ": " + a.what), anomaly_(std::move(a))
{
}

// ---------------------------------------------------------------------------

ProofContext::ProofContext(const Hypergraph& h, Coloring edge_colors, int k, const LinearOrder& sigma)
    : ProofContext(h, std::move(edge_colors), k, sigma, alt_sigma(h, sigma, k).alt_value)
{
}

ProofContext::ProofContext(const Hypergraph& h, Coloring edge_colors, int k, const LinearOrder& sigma,
                           int alt_sigma_value)
    : original_(h),
      positioned_(h.relabeled_by_position(sigma.perm())),
      colors_(std::move(edge_colors)),
      k_(k),
      sigma_(sigma),
      alt_i_(alt_sigma_value)
{
    if (k < 1)
        throw ArgumentError("k must be a positive integer");
    if (sigma.size() != h.vertex_count())
        throw ArgumentError("ordering length differs from vertex count");
    if (alt_sigma_value < 0 || alt_sigma_value > h.vertex_count())
        throw ArgumentError("alt_sigma value out of range");
    check_coloring(h, colors_);
}

std::optional<Witness> ProofContext::disjoint_pair_inside(const SignVector& word, Witness::Origin origin) const
{
    const auto edges = positioned_.edges();
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (is_subset(edges[i], word.reds) || is_subset(edges[i], word.blues))
            inside.push_back(i);
    for (std::size_t x = 0; x < inside.size(); ++x)
        for (std::size_t y = x + 1; y < inside.size(); ++y) {
            const std::size_t a = inside[x], b = inside[y];
            if ((edges[a] & edges[b]) == 0 && colors_.assignment[a] == colors_.assignment[b])
                return Witness{a, b, colors_.assignment[a], word, origin};
        }
    return std::nullopt;
}

LambdaOutcome ProofContext::compute_lambda(const SignVector& word) const
{
    const int a = alt(word);
    if (a <= alt_i_) {
        const bool positive = word.blues == 0 || (word.reds & vertex_bit(min_vertex(word.support())));
        return SignedLevel{positive ? a + 1 : -(a + 1)};
    }
    const auto edges = positioned_.edges();
    const HbarResult red = hbar_unchecked(word.reds, edges, colors_);
    const HbarResult blue = hbar_unchecked(word.blues, edges, colors_);
    const int top = std::max(red.value, blue.value);
    if (top > 0 && red.value == blue.value)
        return Witness{red.attaining.front(), blue.attaining.front(), top, word, Witness::Origin::tie};
    if (top < k_) {
        // X is infeasible yet H|X carries fewer than k colors: the coloring is improper on it.
        if (auto w = disjoint_pair_inside(word, Witness::Origin::level_drop))
            return *w;
        throw ArgumentError("alt_sigma value " + std::to_string(alt_i_) + " is inconsistent: word " +
                            word.to_word() + " has larger alt yet a (k-1)-colorable restriction");
    }
    const int magnitude = alt_i_ + top - k_ + 2;
    return SignedLevel{red.value > blue.value ? magnitude : -magnitude};
}

LambdaOutcome ProofContext::lambda(const SignVector& word)
{
    if (word.n != n())
        throw ArgumentError("sign vector length differs from vertex count");
    const auto key = std::make_pair(word.reds, word.blues);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    LambdaOutcome out = compute_lambda(word);
    cache_.emplace(key, out);
    return out;
}

LambdaOutcome lambda(const SignVector& word, const Hypergraph& h, const Coloring& edge_colors, int alt_sigma_value,
                     int k, const LinearOrder& sigma)
{
    ProofContext ctx(h, edge_colors, k, sigma, alt_sigma_value);
    return ctx.lambda(word);
}

void ProofContext::check_steps(const PermissibleSequence& p) const
{
    if (p.length() > n())
        throw ArgumentError("sequence longer than n");
    VertexSet used = 0;
    for (int s : p.steps) {
        const int v = std::abs(s);
        if (s == 0 || v > n() || (used & vertex_bit(v)))
            throw ArgumentError("sequence steps must be distinct nonzero signed vertices in [-n, n]: " +
                                p.to_string());
        used |= vertex_bit(v);
    }
}

ChainOutcome ProofContext::evaluate(const PermissibleSequence& p)
{
    check_steps(p);
    const int m = p.length();
    std::vector<int> lambdas;
    std::vector<SignVector> pairs;
    lambdas.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        pairs.push_back(p.pair(i, n()));
        LambdaOutcome out = lambda(pairs.back());
        if (auto* w = std::get_if<Witness>(&out))
            return *w;
        lambdas.push_back(std::get<SignedLevel>(out).value);
    }
    for (int i = 0; i < m; ++i)
        if (std::abs(lambdas[static_cast<std::size_t>(i)]) > std::abs(lambdas[static_cast<std::size_t>(i) + 1]))
            return Anomaly{"|lambda| decreases along the chain", p, lambdas};
    for (int i = 0; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const int li = lambdas[static_cast<std::size_t>(i)];
            if (li != -lambdas[static_cast<std::size_t>(j)])
                continue;
            if (std::abs(li) < alt_i_ + 2)
                return Anomaly{"antipodal lambda values in the low range", p, lambdas};
            // Same h̄ level on opposite sides of nested words: X_i's attaining side
            // sits inside X_j's same side, X_j attains on the other side.
            const SignVector& small = pairs[static_cast<std::size_t>(i)];
            const SignVector& large = pairs[static_cast<std::size_t>(j)];
            const auto edges = positioned_.edges();
            const VertexSet small_side = li > 0 ? small.reds : small.blues;
            const VertexSet large_side = li > 0 ? large.blues : large.reds;
            const HbarResult x = hbar_unchecked(small_side, edges, colors_);
            const HbarResult y = hbar_unchecked(large_side, edges, colors_);
            if (x.value != y.value || x.value == 0)
                return Anomaly{"antipodal lambda values without a matching color level", p, lambdas};
            return Witness{x.attaining.front(), y.attaining.front(), x.value, large, Witness::Origin::antipodal};
        }
    }
    return lambdas;
}

bool ProofContext::is_permissible(const PermissibleSequence& p, const std::vector<int>& lambdas) const
{
    for (int s : p.steps)
        if (std::find(lambdas.begin(), lambdas.end(), s) == lambdas.end())
            return false;
    return true;
}

NeighborOutcome ProofContext::neighbors(const PermissibleSequence& p)
{
    ChainOutcome chain = evaluate(p);
    if (auto* w = std::get_if<Witness>(&chain))
        return *w;
    if (auto* a = std::get_if<Anomaly>(&chain))
        return *a;
    NeighborSet out;
    out.lambdas = std::get<std::vector<int>>(std::move(chain));
    const auto& lam = out.lambdas;
    if (!is_permissible(p, lam))
        throw ArgumentError("sequence " + p.to_string() + " is not permissible");

    // Signed steps are exactly A_m ∪ -B_m.
    const int m = p.length();
    std::vector<int> equal, uncovered;
    for (int i = 0; i < m; ++i)
        if (lam[static_cast<std::size_t>(i)] == lam[static_cast<std::size_t>(i) + 1])
            equal.push_back(i);
    for (int i = 0; i <= m; ++i)
        if (std::find(p.steps.begin(), p.steps.end(), lam[static_cast<std::size_t>(i)]) == p.steps.end())
            uncovered.push_back(i);

    // Replacing pair i by (A_{i-1} ∪ (A_{i+1} \ A_i), ...) swaps insertions i and i+1.
    auto swapped = [&](int i) {
        PermissibleSequence q = p;
        std::swap(q.steps[static_cast<std::size_t>(i) - 1], q.steps[static_cast<std::size_t>(i)]);
        return q;
    };
    auto truncated = [&] {
        PermissibleSequence q = p;
        q.steps.pop_back();
        return q;
    };

    if (equal.size() == 1 && uncovered.empty()) {
        const int i = equal.front();
        out.rule = 1;
        out.index = i;
        if (i == 0)
            return Anomaly{"lambda_0 = lambda_1", p, lam};
        out.sequences.push_back(swapped(i));
        out.sequences.push_back(i < m - 1 ? swapped(i + 1) : truncated());
    } else if (equal.empty() && uncovered.size() == 1) {
        const int i = uncovered.front();
        const int value = lam[static_cast<std::size_t>(i)];
        out.rule = 2;
        out.index = i;
        if (std::abs(value) > n()) {
            out.boundary = true;
        } else {
            const SignVector last = p.pair(m, n());
            if (last.support() & vertex_bit(std::abs(value)))
                return Anomaly{"appended vertex already used", p, lam};
            PermissibleSequence q = p;
            q.steps.push_back(value);
            out.sequences.push_back(std::move(q));
        }
        if (i == 0) {
            // Mirror. For the empty sequence it is the sequence itself and is dropped.
            if (m > 0) {
                PermissibleSequence q = p;
                for (int& s : q.steps)
                    s = -s;
                out.sequences.push_back(std::move(q));
            }
        } else if (i == m) {
            out.sequences.push_back(truncated());
        } else {
            out.sequences.push_back(swapped(i));
        }
    } else {
        return Anomaly{"neither or both neighbor rules apply (" + std::to_string(equal.size()) + " equal, " +
                           std::to_string(uncovered.size()) + " uncovered)",
                       p, lam};
    }

    for (const auto& q : out.sequences) {
        ChainOutcome qc = evaluate(q);
        if (auto* w = std::get_if<Witness>(&qc))
            return *w;
        if (auto* a = std::get_if<Anomaly>(&qc))
            return *a;
        if (!is_permissible(q, std::get<std::vector<int>>(qc)))
            return Anomaly{"neighbor " + q.to_string() + " is not permissible", p, lam};
    }
    if (out.sequences.size() == 2 && out.sequences[0] == out.sequences[1])
        return Anomaly{"both neighbors coincide", p, lam};
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Witness> scan_for_pair(const Hypergraph& h, const Coloring& c)
{
    for (std::size_t a = 0; a < h.edge_count(); ++a)
        for (std::size_t b = a + 1; b < h.edge_count(); ++b)
            if ((h.edge(a) & h.edge(b)) == 0 && c.assignment[a] == c.assignment[b])
                return Witness{a, b, c.assignment[a], SignVector::zero(h.vertex_count()), Witness::Origin::scan};
    return std::nullopt;
}

AuditResult witness_result(ProofContext& ctx, Witness w, std::uint64_t steps, const PermissibleSequence& at)
{
    if (!verify_witness(ctx.hypergraph(), ctx.coloring(), w))
        throw AuditAnomaly(Anomaly{"witness failed re-verification (edges " + std::to_string(w.edge_a) + ", " +
                                       std::to_string(w.edge_b) + ")",
                                   at,
                                   {}});
    AuditResult r;
    r.kind = AuditResult::Kind::witness;
    r.witness = std::move(w);
    r.steps = steps;
    r.alt_sigma_value = ctx.alt_sigma_value();
    r.palette = ctx.coloring().palette;
    r.palette_bound = ctx.palette_bound();
    r.last = at;
    return r;
}

} // namespace

AuditResult audit(ProofContext& ctx, std::uint64_t step_cap)
{
    PermissibleSequence previous;
    PermissibleSequence current;
    std::uint64_t steps = 0;
    bool at_start = true;

    while (true) {
        if (++steps > step_cap)
            throw ResourceError("audit walk exceeded the step cap of " + std::to_string(step_cap));
        NeighborOutcome out = ctx.neighbors(current);
        if (auto* w = std::get_if<Witness>(&out))
            return witness_result(ctx, std::move(*w), steps, current);
        if (auto* a = std::get_if<Anomaly>(&out))
            throw AuditAnomaly(std::move(*a));
        auto& nbrs = std::get<NeighborSet>(out).sequences;

        std::optional<PermissibleSequence> next;
        if (at_start) {
            if (nbrs.size() != 1)
                throw AuditAnomaly(Anomaly{"empty sequence does not have exactly one neighbor", current, {}});
            next = nbrs.front();
            at_start = false;
        } else {
            auto back = std::find(nbrs.begin(), nbrs.end(), previous);
            if (back == nbrs.end())
                throw AuditAnomaly(
                    Anomaly{"neighbor relation is not symmetric (came from " + previous.to_string() + ")", current,
                            std::get<NeighborSet>(out).lambdas});
            nbrs.erase(back);
            if (!nbrs.empty())
                next = nbrs.front();
        }

        if (!next) {
            // Walk ended at a boundary sequence; only possible with a large palette.
            AuditResult r;
            r.steps = steps;
            r.alt_sigma_value = ctx.alt_sigma_value();
            r.palette = ctx.coloring().palette;
            r.palette_bound = ctx.palette_bound();
            r.last = current;
            if (is_proper(kneser_graph(ctx.hypergraph()), ctx.coloring())) {
                r.kind = AuditResult::Kind::proper_within_bound;
                return r;
            }
            auto w = scan_for_pair(ctx.hypergraph(), ctx.coloring());
            return witness_result(ctx, std::move(*w), steps, current);
        }
        if (next->steps.empty())
            throw AuditAnomaly(Anomaly{"walk returned to the empty sequence", current, {}});
        previous = std::move(current);
        current = std::move(*next);
    }
}

AuditResult audit(const Hypergraph& h, const Coloring& edge_colors, int k, const LinearOrder& sigma,
                  std::uint64_t step_cap)
{
    check_coloring(h, edge_colors);
    ProofContext ctx(h, edge_colors, k, sigma);
    return audit(ctx, step_cap);
}

// ---------------------------------------------------------------------------

AuditGraphStats enumerate_audit_graph(ProofContext& ctx, std::size_t size_cap)
{
    const int n = ctx.n();
    AuditGraphStats stats;

    // Candidates: all injective signed step sequences of length <= n.
    std::vector<PermissibleSequence> vertices;
    std::size_t candidates = 0;
    PermissibleSequence cur;
    auto grow = [&](auto&& self, VertexSet used) -> void {
        if (++candidates > size_cap)
            throw ResourceError("audit graph enumeration exceeded " + std::to_string(size_cap) + " candidates");
        ChainOutcome chain = ctx.evaluate(cur);
        if (auto* w = std::get_if<Witness>(&chain))
            stats.witnesses.push_back(*w);
        else if (auto* a = std::get_if<Anomaly>(&chain))
            stats.anomalies.push_back(*a);
        else if (ctx.is_permissible(cur, std::get<std::vector<int>>(chain)))
            vertices.push_back(cur);
        if (cur.length() == n)
            return;
        for (int v = 1; v <= n; ++v) {
            if (used & vertex_bit(v))
                continue;
            for (int s : {v, -v}) {
                cur.steps.push_back(s);
                self(self, used | vertex_bit(v));
                cur.steps.pop_back();
            }
        }
    };
    grow(grow, 0);
    stats.vertex_count = vertices.size();

    std::map<PermissibleSequence, std::vector<PermissibleSequence>> adjacency;
    for (const auto& p : vertices) {
        NeighborOutcome out = ctx.neighbors(p);
        if (auto* w = std::get_if<Witness>(&out)) {
            stats.witnesses.push_back(*w);
            continue;
        }
        if (auto* a = std::get_if<Anomaly>(&out)) {
            stats.anomalies.push_back(*a);
            continue;
        }
        auto& seqs = std::get<NeighborSet>(out).sequences;
        ++stats.degree_histogram[static_cast<int>(seqs.size())];
        if (p.steps.empty()) {
            stats.empty_sequence_degree = seqs.size();
            stats.empty_sequence_neighbors = seqs;
        }
        adjacency.emplace(p, std::move(seqs));
    }
    for (const auto& [p, nbrs] : adjacency) {
        for (const auto& q : nbrs) {
            auto it = adjacency.find(q);
            if (it == adjacency.end())
                continue; // q's own computation hit a violation
            if (std::find(it->second.begin(), it->second.end(), p) == it->second.end())
                stats.asymmetric.emplace_back(p, q);
        }
    }
    return stats;
}

} // namespace altermatic
