#pragma once

// Hand-rolled random generators for property-style tests.

#include <vector>

#include "crp/bay.hpp"
#include "crp/rng.hpp"

namespace gen {

// bay with exactly n containers in random columns (labels a random
// permutation of 1..n), any column pattern with heights <= tiers
inline crp::Bay sparse_bay(int tiers, int columns, int n, crp::Rng& rng) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<std::vector<int>> stacks(columns);
    for (int i = 0; i < n; ++i) {
        int c;
        do {
            c = crp::uniform_below(rng, columns);
        } while (static_cast<int>(stacks[c].size()) >= tiers);
        stacks[c].push_back(labels[i]);
    }
    return crp::Bay(tiers, columns, stacks);
}

// applies k random legal relocations (with eager retrievals between), and
// returns every intermediate bay including the start
inline std::vector<crp::Bay> random_relocation_walk(const crp::Bay& start, int k, crp::Rng& rng) {
    std::vector<crp::Bay> states{start};
    crp::Bay bay = start;
    for (int i = 0; i < k; ++i) {
        bay.pop_retrievable_inplace();
        if (!bay.target()) break;
        const auto moves = bay.legal_relocations();
        if (moves.empty()) break;
        bay = bay.apply_move(moves[crp::uniform_below(rng, static_cast<int>(moves.size()))]);
        states.push_back(bay);
    }
    return states;
}

}  // namespace gen
