#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "crp/errors.hpp"
#include "crp/rng.hpp"

namespace crp {

enum class MoveKind { Relocate, Retrieve };

/// One relocation or retrieval. Column indices are 0-based here; file I/O
/// uses 1-based columns.
struct MoveEvent {
    MoveKind kind;
    int container;
    int from;
    int to;  // Relocate only; -1 for Retrieve

    static MoveEvent relocate(int container, int from, int to) {
        return MoveEvent{MoveKind::Relocate, container, from, to};
    }
    static MoveEvent retrieve(int container, int from) {
        return MoveEvent{MoveKind::Retrieve, container, from, -1};
    }
    bool operator==(const MoveEvent&) const = default;
};

/// Parameters for uniformly random evenly-filled bays: h containers in each
/// of the C columns, h <= P-1.
struct InstanceSpec {
    int tiers = 4;
    int columns = 7;
    int fill = 3;
    std::uint64_t seed = 0;

    int container_count() const { return fill * columns; }
    void validate() const;
    /// Additionally requires C >= P >= 3 (the regime the experiments assume).
    void validate_experiment_regime() const;
};

/// A stacked-container configuration: C columns of at most P tiers, labels
/// distinct positive integers. Values are immutable after construction in
/// the sense that every public operation is pure; shared bays are safe to
/// read concurrently.
class Bay {
public:
    Bay() = default;
    /// stacks[c] lists column c bottom to top.
    Bay(int tiers, int columns, const std::vector<std::vector<int>>& stacks);

    int tiers() const { return tiers_; }
    int columns() const { return cols_; }
    int height(int col) const { return height_[col]; }
    bool column_full(int col) const { return height_[col] >= tiers_; }
    bool column_empty(int col) const { return height_[col] == 0; }
    /// Label at (col, tier), tier 0 = bottom. tier must be < height(col).
    int at(int col, int tier) const { return cells_[col * tiers_ + tier]; }
    int top(int col) const { return cells_[col * tiers_ + height_[col] - 1]; }

    int container_count() const;
    bool empty() const { return container_count() == 0; }
    int max_label() const;

    /// Smallest label present; this is the next container to retrieve.
    std::optional<int> target() const;
    /// Column holding the target; requires a non-empty bay.
    int target_column() const;
    /// True if the target exists and is not on top of its column.
    bool target_blocked() const;

    /// Smallest label in a column, or nullopt for an empty column.
    std::optional<int> column_min(int col) const;

    std::vector<std::vector<int>> stacks() const;
    std::vector<int> labels_sorted() const;

    /// Applies a legal move and returns the resulting bay. Relocations obey
    /// restricted-CRP legality: only the topmost container above the current
    /// target moves, and only onto a non-full other column.
    Bay apply_move(const MoveEvent& m) const;

    /// All legal relocations in column-index order (at most C-1).
    /// Throws NotBlocked when the target is on top or the bay is empty.
    std::vector<MoveEvent> legal_relocations() const;

    /// Retrieves targets while they sit on top (Algorithm pre-processing).
    /// Returns the resulting bay and the retrievals performed.
    std::pair<Bay, std::vector<MoveEvent>> pop_retrievable() const;

    std::uint64_t hash() const;
    bool operator==(const Bay&) const = default;

    // Unchecked primitives used by solvers on scratch copies. They do not
    // preserve the restricted-CRP invariants on their own.
    void push_top(int col, int label);
    int pop_top(int col);
    void relocate_top(int from, int to) { push_top(to, pop_top(from)); }
    /// Removes the target from the top of its column; caller must have
    /// checked it is retrievable. Returns the label.
    int pop_target_unchecked();
    /// In-place variant of pop_retrievable without move recording.
    void pop_retrievable_inplace();

private:
    void check_move(const MoveEvent& m) const;

    int tiers_ = 0;
    int cols_ = 0;
    std::vector<int> cells_;   // column-major, tiers_ per column, 0 above height
    std::vector<int> height_;  // per column
};

/// Uniformly random bay per the permutation layout: a random permutation of
/// {1..hC} filled column by column, bottom to top.
Bay generate_uniform(const InstanceSpec& spec, Rng& rng);

/// Replays a move sequence, throwing IllegalMove on the first violation.
Bay replay(const Bay& start, const std::vector<MoveEvent>& moves);

/// Number of Relocate events in a sequence.
int relocation_count(const std::vector<MoveEvent>& moves);

}  // namespace crp

template <>
struct std::hash<crp::Bay> {
    std::size_t operator()(const crp::Bay& b) const { return static_cast<std::size_t>(b.hash()); }
};
