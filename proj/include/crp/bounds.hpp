#pragma once

#include <limits>

#include "crp/bay.hpp"

namespace crp {

/// Depth of the look-ahead lower bound S_p. 0 is the counting bound;
/// kFullLookAhead saturates (equivalent to p = N; see s_p for the early
/// termination that makes this cheap).
struct LookAheadDepth {
    int p = 0;
    static constexpr int kFullLookAhead = std::numeric_limits<int>::max();

    static LookAheadDepth counting() { return {0}; }
    static LookAheadDepth full() { return {kFullLookAhead}; }
};

/// Counting lower bound: number of containers sitting above at least one
/// smaller label in their column, each counted once.
int s0(const Bay& bay);

/// Max over non-empty columns of the column minimum. Requires a non-empty bay.
int max_of_mins(const Bay& bay);

/// Look-ahead lower bound S_p: S0 plus unavoidable repeat relocations
/// detected over the p smallest present labels via the discarded-bay
/// recursion. Stops at the first discarded bay with an empty column.
int s_p(const Bay& bay, LookAheadDepth depth);

/// Cumulative bound at tree level l (relocations already performed).
inline int cumulative(int bound_value, int level) { return bound_value + level; }

}  // namespace crp
