#pragma once

#include <cstdint>
#include <vector>

#include "crp/bay.hpp"

namespace crp {

struct TwoStageInstance;  // stochastic.hpp

/// A feasible solution: replaying moves on the input bay empties it legally;
/// relocations counts the Relocate events.
struct HeuristicResult {
    int relocations = 0;
    std::vector<MoveEvent> moves;
};

/// Branch width for the tree heuristic, 1 <= L <= C-1. L=1 reduces to H.
struct BranchWidth {
    int width = 2;
};

/// Destination choice of heuristic H for blocking container r out of column
/// src: the tightest column whose minimum exceeds r if one exists, otherwise
/// the column with the largest minimum. Empty columns rank as max_label+1.
/// Ties break toward the lowest column index.
int h_destination(const Bay& bay, int src, int blocker, int empty_sentinel);

/// Legal destination columns ranked for branching: columns admitting a good
/// move sorted by increasing minimum, then columns forcing a bad move sorted
/// by decreasing minimum. The first entry is exactly the H choice.
std::vector<int> candidate_order(const Bay& bay, int src, int blocker, int empty_sentinel);

/// Heuristic H: repeatedly retrieve the target when on top, otherwise
/// relocate the topmost blocker to h_destination, until the bay is empty.
HeuristicResult heuristic_h(const Bay& bay);

/// Relocation count only; cheap path used inside solvers.
int heuristic_h_count(const Bay& bay);

struct TreeHeuristicConfig {
    /// Recursion expansion cap; beyond it a subtree is completed with plain H.
    long node_cap = 4'000'000;
};

/// Tree heuristic TH-L: minimum relocation count over the tree that, at each
/// relocation, tries the L best candidate columns — good columns by
/// increasing minimum when a good move exists, otherwise bad columns by
/// decreasing minimum.
HeuristicResult tree_heuristic(const Bay& bay, BranchWidth width,
                               const TreeHeuristicConfig& cfg = {});
int tree_heuristic_count(const Bay& bay, BranchWidth width,
                         const TreeHeuristicConfig& cfg = {});

/// H with unknown labels masked to N+1 before the reveal time: runs on the
/// realized bay of the instance and returns the realized solution.
HeuristicResult myopic_heuristic(const TwoStageInstance& instance);

/// Baseline: relocate the topmost blocker to the nearest non-full column
/// (minimum |i - source|), ties toward the lower index.
HeuristicResult nearest_relocation(const Bay& bay);

}  // namespace crp
