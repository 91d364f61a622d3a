#include "altermatic/colorer.hpp"

#include <algorithm>

#include "altermatic/errors.hpp"

namespace altermatic {

Coloring Coloring::from_assignment(std::vector<int> assignment)
{
    int palette = 0;
    for (int c : assignment) {
        if (c < 1)
            throw ArgumentError("colors must be positive integers");
        palette = std::max(palette, c);
    }
    return Coloring{std::move(assignment), palette};
}

bool is_proper(const SimpleGraph& g, const Coloring& c)
{
    if (c.assignment.size() != g.vertex_count())
        throw ArgumentError("coloring has " + std::to_string(c.assignment.size()) + " entries for " +
                            std::to_string(g.vertex_count()) + " vertices");
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        bool clash = false;
        g.row(u).for_each([&](std::size_t v) {
            if (v > u && c.assignment[u] == c.assignment[v])
                clash = true;
        });
        if (clash)
            return false;
    }
    return true;
}

namespace {

// Search state for DSATUR. Colors are 1-based; color[v] == 0 means uncolored.
// Vertex choice: max saturation, then max degree into uncolored vertices, then lowest index.
class Dsatur {
public:
    Dsatur(const SimpleGraph& g, int max_colors)
        : g_(g),
          n_(g.vertex_count()),
          t_(max_colors),
          color_(n_, 0),
          saturation_(n_, 0),
          free_degree_(n_, 0),
          neighbor_colors_(n_, std::vector<int>(static_cast<std::size_t>(max_colors) + 2, 0))
    {
        for (std::size_t v = 0; v < n_; ++v)
            free_degree_[v] = static_cast<int>(g.degree(v));
    }

    bool solve()
    {
        used_ = 0;
        return extend(0);
    }

    void greedy()
    {
        for (std::size_t step = 0; step < n_; ++step) {
            const std::size_t v = select();
            int c = 1;
            while (neighbor_colors_[v][static_cast<std::size_t>(c)] > 0)
                ++c;
            assign(v, c);
            used_ = std::max(used_, c);
        }
    }

    Coloring result() const { return Coloring{color_, used_}; }

private:
    std::size_t select() const
    {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != 0)
                continue;
            if (best == n_ || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && free_degree_[v] > free_degree_[best]))
                best = v;
        }
        return best;
    }

    void assign(std::size_t v, int c)
    {
        color_[v] = c;
        g_.row(v).for_each([&](std::size_t u) {
            if (neighbor_colors_[u][static_cast<std::size_t>(c)]++ == 0)
                ++saturation_[u];
            --free_degree_[u];
        });
    }

    void unassign(std::size_t v)
    {
        const int c = color_[v];
        color_[v] = 0;
        g_.row(v).for_each([&](std::size_t u) {
            if (--neighbor_colors_[u][static_cast<std::size_t>(c)] == 0)
                --saturation_[u];
            ++free_degree_[u];
        });
    }

    bool extend(std::size_t colored)
    {
        if (colored == n_)
            return true;
        const std::size_t v = select();
        if (saturation_[v] >= t_)
            return false;
        // New colors are interchangeable: only the first unused one is tried.
        const int limit = std::min(t_, used_ + 1);
        for (int c = 1; c <= limit; ++c) {
            if (neighbor_colors_[v][static_cast<std::size_t>(c)] > 0)
                continue;
            const int saved = used_;
            used_ = std::max(used_, c);
            assign(v, c);
            if (extend(colored + 1))
                return true;
            unassign(v);
            used_ = saved;
        }
        return false;
    }

    const SimpleGraph& g_;
    std::size_t n_;
    int t_;
    int used_ = 0;
    std::vector<int> color_;
    std::vector<int> saturation_;
    std::vector<int> free_degree_;
    std::vector<std::vector<int>> neighbor_colors_;
};

} // namespace

Coloring greedy_dsatur(const SimpleGraph& g)
{
    Dsatur d(g, static_cast<int>(g.vertex_count()) + 1);
    d.greedy();
    return d.result();
}

std::vector<std::size_t> greedy_clique(const SimpleGraph& g)
{
    std::vector<std::size_t> order(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> clique;
    for (std::size_t v : order) {
        if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g.adjacent(u, v); }))
            clique.push_back(v);
    }
    return clique;
}

std::optional<Coloring> find_coloring(const SimpleGraph& g, int t)
{
    if (t < 0)
        throw ArgumentError("color bound must be nonnegative");
    if (g.vertex_count() == 0)
        return Coloring{};
    if (t == 0)
        return std::nullopt;
    t = std::min<int>(t, static_cast<int>(g.vertex_count()));
    Dsatur d(g, t);
    if (!d.solve())
        return std::nullopt;
    return d.result();
}

bool chromatic_at_most(const SimpleGraph& g, int t)
{
    if (g.vertex_count() == 0)
        return t >= 0;
    if (t <= 0)
        return false;
    if (g.edge_count() == 0)
        return true;
    return find_coloring(g, t).has_value();
}

ChromaticResult chromatic_number(const SimpleGraph& g)
{
    if (g.vertex_count() == 0)
        return {};
    Coloring best = greedy_dsatur(g);
    const int lower = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));
    // Climb from the clique bound; the first success is optimal.
    for (int t = lower; t < best.palette; ++t) {
        if (auto c = find_coloring(g, t))
            return {c->palette, std::move(*c)};
    }
    return {best.palette, std::move(best)};
}

} // namespace altermatic
