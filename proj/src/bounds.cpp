#include "crp/bounds.hpp"

#include <algorithm>

namespace crp {

int s0(const Bay& bay) {
    int count = 0;
    for (int c = 0; c < bay.columns(); ++c) {
        int running_min = 0;
        for (int t = 0; t < bay.height(c); ++t) {
            const int x = bay.at(c, t);
            if (t > 0 && x > running_min) ++count;
            running_min = t == 0 ? x : std::min(running_min, x);
        }
    }
    return count;
}

int max_of_mins(const Bay& bay) {
    int best = 0;
    bool any = false;
    for (int c = 0; c < bay.columns(); ++c) {
        const auto m = bay.column_min(c);
        if (m) {
            best = any ? std::max(best, *m) : *m;
            any = true;
        }
    }
    if (!any) throw InvalidParams("max_of_mins of an empty bay");
    return best;
}

namespace {

// Discarded-bay view: per column, the labels still present, ascending, with a
// cursor past removed leading entries. Only minima and emptiness matter.
struct DiscardBay {
    std::vector<std::vector<int>> sorted;  // ascending labels per column
    std::vector<std::vector<char>> alive;
    std::vector<int> first;  // index of first alive entry, == size when empty

    explicit DiscardBay(const Bay& bay)
        : sorted(bay.columns()), alive(bay.columns()), first(bay.columns(), 0) {
        for (int c = 0; c < bay.columns(); ++c) {
            for (int t = 0; t < bay.height(c); ++t) sorted[c].push_back(bay.at(c, t));
            std::sort(sorted[c].begin(), sorted[c].end());
            alive[c].assign(sorted[c].size(), 1);
        }
    }

    bool any_empty() const {
        for (size_t c = 0; c < sorted.size(); ++c)
            if (first[c] >= static_cast<int>(sorted[c].size())) return true;
        return false;
    }

    int max_of_mins() const {
        int best = 0;
        for (size_t c = 0; c < sorted.size(); ++c)
            if (first[c] < static_cast<int>(sorted[c].size()))
                best = std::max(best, sorted[c][first[c]]);
        return best;
    }

    void remove(int col, int label) {
        auto& v = sorted[col];
        const auto it = std::lower_bound(v.begin(), v.end(), label);
        if (it == v.end() || *it != label) return;
        const int i = static_cast<int>(it - v.begin());
        if (!alive[col][i]) return;
        alive[col][i] = 0;
        while (first[col] < static_cast<int>(v.size()) && !alive[col][first[col]]) ++first[col];
    }
};

}  // namespace

int s_p(const Bay& bay, LookAheadDepth depth) {
    const int base = s0(bay);
    if (depth.p <= 0) return base;

    // For every container r above a smaller label, the smallest label below
    // it: r belongs to R_k for exactly that k.
    struct Entry {
        int k, r, col;
    };
    std::vector<Entry> blockers;
    std::vector<int> labels;
    std::vector<int> col_of_label_hint;
    for (int c = 0; c < bay.columns(); ++c) {
        int running_min = 0;
        for (int t = 0; t < bay.height(c); ++t) {
            const int x = bay.at(c, t);
            if (t > 0 && x > running_min) blockers.push_back({running_min, x, c});
            running_min = t == 0 ? x : std::min(running_min, x);
            labels.push_back(x);
        }
    }
    std::sort(labels.begin(), labels.end());
    std::sort(blockers.begin(), blockers.end(),
              [](const Entry& a, const Entry& b) { return a.k < b.k; });

    // Column of each label for discard removal.
    auto column_of = [&bay](int label) {
        for (int c = 0; c < bay.columns(); ++c)
            for (int t = 0; t < bay.height(c); ++t)
                if (bay.at(c, t) == label) return c;
        return -1;
    };

    DiscardBay discard(bay);
    int extra = 0;
    size_t bi = 0;
    const long limit = std::min<long>(depth.p, static_cast<long>(labels.size()));
    for (long i = 0; i < limit; ++i) {
        if (discard.any_empty()) break;
        const int k = labels[i];
        const int mm = discard.max_of_mins();
        const size_t bi0 = bi;
        while (bi < blockers.size() && blockers[bi].k == k) {
            if (blockers[bi].r > mm) ++extra;
            ++bi;
        }
        // discard k and R_k
        discard.remove(column_of(k), k);
        for (size_t j = bi0; j < bi; ++j) discard.remove(blockers[j].col, blockers[j].r);
    }
    return base + extra;
}

}  // namespace crp
