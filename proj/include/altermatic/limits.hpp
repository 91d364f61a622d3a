#pragma once

#include <cstdint>

namespace altermatic {

/// Hard ceiling on the vertex count: vertex subsets are single 64-bit words.
inline constexpr int kMaxVertices = 63;

/// Runtime caps. Defaults may be overridden from the environment:
///   ALTERMATIC_N_CAP, ALTERMATIC_FACTORIAL_CAP, ALTERMATIC_STEP_CAP.
struct Limits {
    int n_cap = kMaxVertices;
    int factorial_cap = 8;
    std::uint64_t step_cap = 10'000'000;

    static Limits from_env();
};

} // namespace altermatic
