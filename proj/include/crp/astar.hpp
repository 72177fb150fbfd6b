#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "crp/bay.hpp"
#include "crp/bounds.hpp"
#include "crp/heuristics.hpp"

namespace crp {

enum class UpperBoundKind { H, TreeHeuristic };

struct SolverConfig {
    /// Maximum number of child nodes added to the tree (the root is free).
    long node_budget = 1'000'000'000L;
    LookAheadDepth lb_depth = LookAheadDepth::full();
    UpperBoundKind upper = UpperBoundKind::H;
    int th_width = 2;
    /// Evaluate the upper bound at every node (default, per the move-based
    /// scheme). When false it is evaluated only at the first node of each
    /// level; rule-(i) pruning then fires less often.
    bool upper_every_node = true;
    /// Reuse bound values for bays already evaluated in this run.
    bool cache_bounds = true;
    /// Skip children whose bay already appeared in the tree. Off by default:
    /// the node-count statistics assume a pure tree.
    bool dedup_states = false;
    /// Optional CSV trace, one line per visited node: level,bay-hash,L,U,action.
    std::ostream* trace = nullptr;
};

struct SolveOutcome {
    int z = 0;                     ///< best incumbent z_A
    std::vector<MoveEvent> moves;  ///< sigma_A, replays to an empty bay
    int gap = 0;                   ///< guaranteed gap; 0 certifies optimality
    long nodes = 0;                ///< children added to the tree
    bool optimal = false;
    int lower_certificate = 0;     ///< L_min = z - gap <= z_opt
    int max_level = 0;             ///< deepest level created
    int root_lower = 0;            ///< S_p at the (pre-processed) root
    int root_upper = 0;            ///< heuristic value at the root
};

/// Breadth-first move-based search with cumulative bounds and the two
/// pruning rules; anytime under a node budget.
SolveOutcome solve(const Bay& bay, const SolverConfig& config = {});

/// Gap as a function of the node budget, from one search run with
/// checkpoints at each budget. budgets must be ascending and positive.
/// The returned gaps are non-increasing.
std::vector<std::pair<long, int>> gap_curve(const Bay& bay, const std::vector<long>& budgets,
                                            const SolverConfig& config = {});

/// Along an optimal move sequence, the per-level difference
/// z_opt(B^l) - S_full(B^l) of the bay after l relocations. Requires the
/// solve to certify optimality within config.node_budget.
std::vector<std::pair<int, int>> optimal_path_lb_gap(const Bay& bay,
                                                     const SolverConfig& config = {});

}  // namespace crp
