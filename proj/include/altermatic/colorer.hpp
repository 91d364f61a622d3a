#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "altermatic/hypercore.hpp"

namespace altermatic {

/// Color per vertex, each in [1, palette].
struct Coloring {
    std::vector<int> assignment;
    int palette = 0;

    /// palette = max entry (0 when empty). Throws ArgumentError on a nonpositive entry.
    static Coloring from_assignment(std::vector<int> assignment);

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// No adjacent pair shares a color. Throws ArgumentError if the assignment length differs from the vertex count.
bool is_proper(const SimpleGraph& g, const Coloring& c);

/// Greedy DSATUR coloring; upper bound on the chromatic number.
Coloring greedy_dsatur(const SimpleGraph& g);

/// A maximal clique grown greedily by degree; its size is a lower bound on the chromatic number.
std::vector<std::size_t> greedy_clique(const SimpleGraph& g);

/// Exact search for a proper coloring with at most t colors. Only the vertexless graph is 0-colorable.
std::optional<Coloring> find_coloring(const SimpleGraph& g, int t);

bool chromatic_at_most(const SimpleGraph& g, int t);

struct ChromaticResult {
    int chi = 0;
    Coloring witness; // uses exactly chi colors
};

ChromaticResult chromatic_number(const SimpleGraph& g);

} // namespace altermatic
