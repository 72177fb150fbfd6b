#include "crp/bay.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace crp {

void InstanceSpec::validate() const {
    if (tiers < 1 || columns < 1) throw InvalidParams("tiers and columns must be positive");
    if (fill < 0 || fill > tiers - 1)
        throw InvalidParams("fill height must satisfy h <= P-1");
}

void InstanceSpec::validate_experiment_regime() const {
    validate();
    if (!(columns >= tiers && tiers >= 3))
        throw InvalidParams("experiment instances require C >= P >= 3");
}

Bay::Bay(int tiers, int columns, const std::vector<std::vector<int>>& stacks)
    : tiers_(tiers), cols_(columns), cells_(static_cast<size_t>(tiers) * columns, 0),
      height_(columns, 0) {
    if (tiers < 1 || columns < 1) throw InvalidParams("bay dimensions must be positive");
    if (static_cast<int>(stacks.size()) != columns)
        throw InvalidParams("stack list size does not match column count");
    std::unordered_set<int> seen;
    for (int c = 0; c < columns; ++c) {
        if (static_cast<int>(stacks[c].size()) > tiers)
            throw InvalidParams("stack exceeds tier count");
        for (int t = 0; t < static_cast<int>(stacks[c].size()); ++t) {
            const int label = stacks[c][t];
            if (label <= 0) throw InvalidParams("labels must be positive");
            if (!seen.insert(label).second) throw InvalidParams("duplicate label");
            cells_[static_cast<size_t>(c) * tiers_ + t] = label;
        }
        height_[c] = static_cast<int>(stacks[c].size());
    }
}

int Bay::container_count() const {
    return std::accumulate(height_.begin(), height_.end(), 0);
}

int Bay::max_label() const {
    int m = 0;
    for (int c = 0; c < cols_; ++c)
        for (int t = 0; t < height_[c]; ++t) m = std::max(m, at(c, t));
    return m;
}

std::optional<int> Bay::target() const {
    std::optional<int> best;
    for (int c = 0; c < cols_; ++c)
        for (int t = 0; t < height_[c]; ++t) {
            const int x = at(c, t);
            if (!best || x < *best) best = x;
        }
    return best;
}

int Bay::target_column() const {
    const auto tgt = target();
    if (!tgt) throw NotBlocked("empty bay has no target");
    for (int c = 0; c < cols_; ++c)
        for (int t = 0; t < height_[c]; ++t)
            if (at(c, t) == *tgt) return c;
    throw InternalError("target not found");
}

bool Bay::target_blocked() const {
    const auto tgt = target();
    if (!tgt) return false;
    const int c = target_column();
    return top(c) != *tgt;
}

std::optional<int> Bay::column_min(int col) const {
    if (column_empty(col)) return std::nullopt;
    int m = at(col, 0);
    for (int t = 1; t < height_[col]; ++t) m = std::min(m, at(col, t));
    return m;
}

std::vector<std::vector<int>> Bay::stacks() const {
    std::vector<std::vector<int>> out(cols_);
    for (int c = 0; c < cols_; ++c) {
        out[c].reserve(height_[c]);
        for (int t = 0; t < height_[c]; ++t) out[c].push_back(at(c, t));
    }
    return out;
}

std::vector<int> Bay::labels_sorted() const {
    std::vector<int> out;
    out.reserve(container_count());
    for (int c = 0; c < cols_; ++c)
        for (int t = 0; t < height_[c]; ++t) out.push_back(at(c, t));
    std::sort(out.begin(), out.end());
    return out;
}

void Bay::check_move(const MoveEvent& m) const {
    const auto tgt = target();
    if (!tgt) throw IllegalMove("no containers left");
    if (m.from < 0 || m.from >= cols_) throw IllegalMove("source column out of range");
    if (column_empty(m.from)) throw IllegalMove("source column is empty");
    if (m.kind == MoveKind::Retrieve) {
        if (m.container != *tgt) throw IllegalMove("only the target container may be retrieved");
        if (top(m.from) != *tgt) throw IllegalMove("target is not on top");
        return;
    }
    if (m.to < 0 || m.to >= cols_) throw IllegalMove("destination column out of range");
    if (m.to == m.from) throw IllegalMove("relocation must change column");
    if (column_full(m.to)) throw IllegalMove("destination column is full");
    if (m.from != target_column())
        throw IllegalMove("restricted CRP: only blockers of the target move");
    if (top(m.from) == *tgt) throw IllegalMove("target is retrievable, not relocatable");
    if (m.container != top(m.from)) throw IllegalMove("only the topmost blocking container moves");
}

Bay Bay::apply_move(const MoveEvent& m) const {
    check_move(m);
    Bay out = *this;
    if (m.kind == MoveKind::Retrieve) {
        out.pop_top(m.from);
    } else {
        out.relocate_top(m.from, m.to);
    }
    return out;
}

std::vector<MoveEvent> Bay::legal_relocations() const {
    const auto tgt = target();
    if (!tgt) throw NotBlocked("empty bay");
    const int src = target_column();
    if (top(src) == *tgt) throw NotBlocked("target is on top; retrieve instead");
    const int blocker = top(src);
    std::vector<MoveEvent> out;
    out.reserve(cols_ - 1);
    for (int c = 0; c < cols_; ++c)
        if (c != src && !column_full(c)) out.push_back(MoveEvent::relocate(blocker, src, c));
    return out;
}

std::pair<Bay, std::vector<MoveEvent>> Bay::pop_retrievable() const {
    Bay out = *this;
    std::vector<MoveEvent> moves;
    while (true) {
        const auto tgt = out.target();
        if (!tgt) break;
        const int c = out.target_column();
        if (out.top(c) != *tgt) break;
        out.pop_top(c);
        moves.push_back(MoveEvent::retrieve(*tgt, c));
    }
    return {std::move(out), std::move(moves)};
}

void Bay::pop_retrievable_inplace() {
    while (true) {
        const auto tgt = target();
        if (!tgt) return;
        const int c = target_column();
        if (top(c) != *tgt) return;
        pop_top(c);
    }
}

std::uint64_t Bay::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(tiers_));
    mix(static_cast<std::uint64_t>(cols_));
    for (int c = 0; c < cols_; ++c) {
        mix(static_cast<std::uint64_t>(height_[c]));
        for (int t = 0; t < height_[c]; ++t) mix(static_cast<std::uint64_t>(at(c, t)));
    }
    return h;
}

void Bay::push_top(int col, int label) {
    cells_[static_cast<size_t>(col) * tiers_ + height_[col]] = label;
    ++height_[col];
}

int Bay::pop_top(int col) {
    --height_[col];
    const size_t i = static_cast<size_t>(col) * tiers_ + height_[col];
    const int label = cells_[i];
    cells_[i] = 0;
    return label;
}

int Bay::pop_target_unchecked() {
    return pop_top(target_column());
}

Bay generate_uniform(const InstanceSpec& spec, Rng& rng) {
    spec.validate();
    const int n = spec.container_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> stacks(spec.columns);
    for (int c = 0; c < spec.columns; ++c)
        stacks[c].assign(perm.begin() + static_cast<long>(c) * spec.fill,
                         perm.begin() + static_cast<long>(c + 1) * spec.fill);
    return Bay(spec.tiers, spec.columns, stacks);
}

Bay replay(const Bay& start, const std::vector<MoveEvent>& moves) {
    Bay b = start;
    for (const auto& m : moves) b = b.apply_move(m);
    return b;
}

int relocation_count(const std::vector<MoveEvent>& moves) {
    int z = 0;
    for (const auto& m : moves) z += m.kind == MoveKind::Relocate ? 1 : 0;
    return z;
}

}  // namespace crp
