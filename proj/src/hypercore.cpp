#include "altermatic/hypercore.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "altermatic/errors.hpp"

namespace altermatic {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    std::uint64_t value = 0;
    const char* end = raw + std::char_traits<char>::length(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ArgumentError(std::string("environment variable ") + name + " is not a nonnegative integer");
    return value;
}

} // namespace

Limits Limits::from_env()
{
    Limits l;
    l.n_cap = static_cast<int>(std::min<std::uint64_t>(env_or("ALTERMATIC_N_CAP", l.n_cap), kMaxVertices));
    l.factorial_cap = static_cast<int>(std::min<std::uint64_t>(env_or("ALTERMATIC_FACTORIAL_CAP", l.factorial_cap), 20));
    l.step_cap = env_or("ALTERMATIC_STEP_CAP", l.step_cap);
    return l;
}

VertexSet make_set(std::span<const int> vertices)
{
    VertexSet s = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertices)
            throw ArgumentError("vertex " + std::to_string(v) + " out of range");
        s |= vertex_bit(v);
    }
    return s;
}

std::vector<int> set_elements(VertexSet s)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s != 0) {
        out.push_back(min_vertex(s));
        s &= s - 1;
    }
    return out;
}

std::string format_set(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int v : set_elements(s)) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool lex_less(VertexSet a, VertexSet b) noexcept
{
    while (a != 0 && b != 0) {
        int x = min_vertex(a), y = min_vertex(b);
        if (x != y)
            return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// ---------------------------------------------------------------------------

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges))
{
    if (n < 1 || n > kMaxVertices)
        throw ArgumentError("vertex count must lie in [1, " + std::to_string(kMaxVertices) + "], got " +
                            std::to_string(n));
    std::unordered_set<VertexSet> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        VertexSet e = edges_[i];
        if (e == 0)
            throw ArgumentError("edge " + std::to_string(i) + " is empty");
        if (!is_subset(e, full_set(n)))
            throw ArgumentError("edge " + std::to_string(i) + " is not a subset of [n]");
        if (!seen.insert(e).second)
            throw ArgumentError("duplicate edge " + format_set(e));
    }
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<int>>& edges)
{
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (const auto& e : edges)
        masks.push_back(make_set(e));
    return Hypergraph(n, std::move(masks));
}

Hypergraph Hypergraph::relabeled_by_position(std::span<const int> perm) const
{
    std::vector<int> pos(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t j = 0; j < perm.size(); ++j)
        pos[static_cast<std::size_t>(perm[j])] = static_cast<int>(j) + 1;
    std::vector<VertexSet> out;
    out.reserve(edges_.size());
    for (VertexSet e : edges_) {
        VertexSet m = 0;
        for (int v : set_elements(e))
            m |= vertex_bit(pos[static_cast<std::size_t>(v)]);
        out.push_back(m);
    }
    return Hypergraph(n_, std::move(out));
}

// ---------------------------------------------------------------------------

SignVector::SignVector(int n_, VertexSet reds_, VertexSet blues_) : n(n_), reds(reds_), blues(blues_)
{
    if (n < 0 || n > kMaxVertices)
        throw ArgumentError("sign vector length out of range");
    if ((reds & blues) != 0)
        throw ArgumentError("sign vector has a position that is both R and B");
    if (!is_subset(reds | blues, full_set(n)))
        throw ArgumentError("sign vector entries outside [n]");
}

SignVector SignVector::from_word(std::string_view word)
{
    VertexSet r = 0, b = 0;
    int pos = 0;
    for (char ch : word) {
        if (ch == ',' || ch == ' ')
            continue;
        ++pos;
        if (pos > kMaxVertices)
            throw ArgumentError("sign vector too long");
        switch (ch) {
        case 'R':
        case 'r':
        case '+':
            r |= vertex_bit(pos);
            break;
        case 'B':
        case 'b':
        case '-':
            b |= vertex_bit(pos);
            break;
        case '0':
            break;
        default:
            throw ArgumentError(std::string("invalid sign vector symbol '") + ch + "'");
        }
    }
    return SignVector(pos, r, b);
}

std::string SignVector::to_word() const
{
    std::string w(static_cast<std::size_t>(n), '0');
    for (int v = 1; v <= n; ++v) {
        if (reds & vertex_bit(v))
            w[static_cast<std::size_t>(v - 1)] = 'R';
        else if (blues & vertex_bit(v))
            w[static_cast<std::size_t>(v - 1)] = 'B';
    }
    return w;
}

// ---------------------------------------------------------------------------

LinearOrder::LinearOrder(std::vector<int> perm) : perm_(std::move(perm))
{
    const int n = static_cast<int>(perm_.size());
    if (n > kMaxVertices)
        throw ArgumentError("ordering too long");
    VertexSet seen = 0;
    for (int v : perm_) {
        if (v < 1 || v > n || (seen & vertex_bit(v)))
            throw ArgumentError("ordering is not a permutation of [" + std::to_string(n) + "]");
        seen |= vertex_bit(v);
    }
}

LinearOrder LinearOrder::identity(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i + 1;
    return LinearOrder(std::move(p));
}

LinearOrder LinearOrder::parse(std::string_view text, int n)
{
    std::vector<int> p;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ArgumentError("invalid ordering entry '" + tok + "'");
        p.push_back(v);
    }
    if (static_cast<int>(p.size()) != n)
        throw ArgumentError("ordering has " + std::to_string(p.size()) + " entries, expected " + std::to_string(n));
    return LinearOrder(std::move(p));
}

bool LinearOrder::is_identity() const noexcept
{
    for (std::size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::string LinearOrder::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (i != 0)
            out += ' ';
        out += std::to_string(perm_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(std::size_t vcount) : rows_(vcount, DynamicBitset(vcount)) {}

std::size_t SimpleGraph::edge_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& r : rows_)
        total += r.count();
    return total / 2;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v)
{
    if (u >= rows_.size() || v >= rows_.size())
        throw ArgumentError("graph edge endpoint out of range");
    if (u == v)
        throw ArgumentError("loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
}

SimpleGraph SimpleGraph::induced(std::span<const std::size_t> vertices) const
{
    SimpleGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                g.add_edge(i, j);
    return g;
}

// ---------------------------------------------------------------------------

int alt(const SignVector& x) noexcept
{
    // Longest alternating subsequence = number of maximal same-sign runs among nonzero entries.
    int runs = 0;
    int last = 0; // +1 red, -1 blue
    VertexSet s = x.support();
    while (s != 0) {
        VertexSet low = s & (~s + 1);
        int sign = (x.reds & low) ? 1 : -1;
        if (sign != last)
            ++runs;
        last = sign;
        s &= s - 1;
    }
    return runs;
}

int support_size(const SignVector& x) noexcept { return set_size(x.support()); }

bool subset_of(const SignVector& x, const SignVector& y)
{
    if (x.n != y.n)
        throw ArgumentError("sign vectors have different lengths");
    return is_subset(x.reds, y.reds) && is_subset(x.blues, y.blues);
}

SignVector apply_order(const SignVector& x, const LinearOrder& sigma)
{
    if (sigma.size() != x.n)
        throw ArgumentError("ordering length differs from sign vector length");
    VertexSet r = 0, b = 0;
    for (int j = 1; j <= x.n; ++j) {
        if (x.reds & vertex_bit(j))
            r |= vertex_bit(sigma.at(j));
        else if (x.blues & vertex_bit(j))
            b |= vertex_bit(sigma.at(j));
    }
    return SignVector(x.n, r, b);
}

Restriction restrict(const Hypergraph& h, const SignVector& x, const LinearOrder& sigma)
{
    if (x.n != h.vertex_count())
        throw ArgumentError("sign vector length differs from the hypergraph's vertex count");
    const SignVector xs = apply_order(x, sigma);
    Restriction out;
    out.vertices = xs.support();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        VertexSet e = h.edge(i);
        if (is_subset(e, xs.reds) || is_subset(e, xs.blues)) {
            out.edges.push_back(e);
            out.source_index.push_back(i);
        }
    }
    return out;
}

} // namespace altermatic
