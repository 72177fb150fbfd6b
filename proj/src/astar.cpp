#include "crp/astar.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace crp {

namespace {

struct Node {
    Bay bay;  // after the relocation that created it, blocked targets intact
    int level = 0;
    int lower = 0;  // cumulative L, computed at creation
    int parent = -1;
    MoveEvent move_in = MoveEvent::retrieve(0, 0);  // meaningless at the root
};

// Frontier multiset of cumulative lower bounds, for L_min snapshots.
class LowerBoundPool {
public:
    void insert(int v) {
        if (v >= static_cast<int>(count_.size())) count_.resize(v + 1, 0);
        ++count_[v];
        ++size_;
        min_hint_ = std::min(min_hint_, v);
    }
    void erase(int v) {
        --count_[v];
        --size_;
    }
    bool empty() const { return size_ == 0; }
    int min() const {
        int v = std::max(min_hint_, 0);
        while (v < static_cast<int>(count_.size()) && count_[v] == 0) ++v;
        min_hint_ = v;
        return v < static_cast<int>(count_.size()) ? v : std::numeric_limits<int>::max();
    }

private:
    std::vector<long> count_;
    long size_ = 0;
    mutable int min_hint_ = 0;
};

class Search {
public:
    Search(const Bay& bay, const SolverConfig& config, const std::vector<long>* checkpoints)
        : cfg_(config), checkpoints_(checkpoints) {
        if (cfg_.node_budget < 1) throw BudgetZero("node budget must be >= 1");
        auto [root, pops] = bay.pop_retrievable();
        root_pops_ = std::move(pops);
        sentinel_ = root.max_label() + 1;
        nodes_.push_back(Node{std::move(root), 0, 0, -1, MoveEvent::retrieve(0, 0)});
        nodes_[0].lower = lower_of(nodes_[0].bay, 0);
        pool_.insert(nodes_[0].lower);
    }

    SolveOutcome run() {
        SolveOutcome out;
        long m = 0;
        long next_checkpoint = checkpoints_ && !checkpoints_->empty() ? (*checkpoints_)[0] : -1;
        size_t cp_index = 0;
        int z_a = std::numeric_limits<int>::max();
        int incumbent = -1;
        bool stopped = false;
        int cut_lower = std::numeric_limits<int>::max();
        int last_upper_level = -1;
        int upper_at_level = 0;

        for (size_t cur = 0; cur < nodes_.size() && !stopped; ++cur) {
            // visit
            pool_.erase(nodes_[cur].lower);
            const int level = nodes_[cur].level;
            const int lower = nodes_[cur].lower;
            int upper;
            if (cfg_.upper_every_node || level != last_upper_level) {
                upper = upper_of(nodes_[cur].bay) + level;
                last_upper_level = level;
                upper_at_level = upper;
            } else {
                upper = upper_at_level;
            }
            if (upper < z_a) {
                z_a = upper;
                incumbent = static_cast<int>(cur);
            }
            if (cfg_.trace)
                (*cfg_.trace) << level << ',' << nodes_[cur].bay.hash() << ',' << lower << ','
                              << upper << ',' << action_name(cur) << '\n';
            if (upper <= lower || lower >= z_a) continue;  // rules (i) and (ii)

            // branch
            Bay popped = nodes_[cur].bay;
            popped.pop_retrievable_inplace();
            const int src = popped.target_column();
            const int blocker = popped.top(src);
            for (const int dest : candidate_order(popped, src, blocker, sentinel_)) {
                while (next_checkpoint >= 0 && m == next_checkpoint) {
                    record_checkpoint(z_a, std::min(pool_.min(), lower));
                    ++cp_index;
                    next_checkpoint =
                        cp_index < checkpoints_->size() ? (*checkpoints_)[cp_index] : -1;
                }
                if (m >= cfg_.node_budget) {
                    stopped = true;
                    cut_lower = lower;
                    break;
                }
                Bay child = popped;
                child.relocate_top(src, dest);
                if (cfg_.dedup_states && !seen_.insert(child).second) continue;
                const int child_lower = lower_of(child, level + 1);
                pool_.insert(child_lower);
                nodes_.push_back(Node{std::move(child), level + 1, child_lower,
                                      static_cast<int>(cur),
                                      MoveEvent::relocate(blocker, src, dest)});
                out.max_level = std::max(out.max_level, level + 1);
                ++m;
            }
        }

        out.nodes = m;
        out.z = z_a;
        out.root_lower = nodes_[0].lower;
        out.root_upper = upper_of(nodes_[0].bay);
        if (!stopped) {
            out.gap = 0;
            out.optimal = true;
            out.lower_certificate = z_a;
        } else {
            const int frontier = std::min(pool_.min(), cut_lower);
            out.gap = std::max(0, z_a - frontier);
            out.optimal = out.gap == 0;
            out.lower_certificate = z_a - out.gap;
        }
        // remaining checkpoints: the search completed before reaching them
        if (checkpoints_) {
            while (cp_index < checkpoints_->size()) {
                record_checkpoint(z_a, out.optimal ? z_a : std::min(pool_.min(), cut_lower));
                ++cp_index;
            }
        }
        out.moves = reconstruct(incumbent);
        return out;
    }

    const std::vector<std::pair<long, int>>& checkpoint_gaps() const { return checkpoint_gaps_; }

private:
    int lower_of(const Bay& bay, int level) {
        if (!cfg_.cache_bounds) return s_p(bay, cfg_.lb_depth) + level;
        auto it = lower_cache_.find(bay);
        if (it == lower_cache_.end())
            it = lower_cache_.emplace(bay, s_p(bay, cfg_.lb_depth)).first;
        return it->second + level;
    }

    int upper_of(const Bay& bay) {
        if (!cfg_.cache_bounds) return compute_upper(bay);
        auto it = upper_cache_.find(bay);
        if (it == upper_cache_.end()) it = upper_cache_.emplace(bay, compute_upper(bay)).first;
        return it->second;
    }

    int compute_upper(const Bay& bay) const {
        return cfg_.upper == UpperBoundKind::H
                   ? heuristic_h_count(bay)
                   : tree_heuristic_count(bay, BranchWidth{cfg_.th_width});
    }

    void record_checkpoint(int z_a, int frontier_min) {
        const size_t i = checkpoint_gaps_.size();
        const long budget = (*checkpoints_)[i];
        checkpoint_gaps_.emplace_back(budget, std::max(0, z_a - std::min(z_a, frontier_min)));
    }

    std::string action_name(size_t idx) const {
        if (nodes_[idx].parent < 0) return "root";
        const auto& mv = nodes_[idx].move_in;
        return "relocate " + std::to_string(mv.container) + " c" + std::to_string(mv.from + 1) +
               "->c" + std::to_string(mv.to + 1);
    }

    std::vector<MoveEvent> reconstruct(int incumbent) const {
        // path from root to the incumbent, then the upper-bound solution
        std::vector<int> chain;
        for (int i = incumbent; i >= 0; i = nodes_[i].parent) chain.push_back(i);
        std::reverse(chain.begin(), chain.end());
        std::vector<MoveEvent> moves = root_pops_;
        for (size_t i = 1; i < chain.size(); ++i) {
            // retrievals between the parent's bay and this relocation
            const auto pops = nodes_[chain[i - 1]].bay.pop_retrievable().second;
            moves.insert(moves.end(), pops.begin(), pops.end());
            moves.push_back(nodes_[chain[i]].move_in);
        }
        const Bay& last = nodes_[chain.back()].bay;
        const auto tail = cfg_.upper == UpperBoundKind::H
                              ? heuristic_h(last)
                              : tree_heuristic(last, BranchWidth{cfg_.th_width});
        moves.insert(moves.end(), tail.moves.begin(), tail.moves.end());
        return moves;
    }

    SolverConfig cfg_;
    const std::vector<long>* checkpoints_;
    std::vector<Node> nodes_;
    std::vector<MoveEvent> root_pops_;
    LowerBoundPool pool_;
    std::unordered_map<Bay, int> lower_cache_;
    std::unordered_map<Bay, int> upper_cache_;
    std::unordered_set<Bay> seen_;
    std::vector<std::pair<long, int>> checkpoint_gaps_;
    int sentinel_ = 0;
};

}  // namespace

SolveOutcome solve(const Bay& bay, const SolverConfig& config) {
    Search search(bay, config, nullptr);
    return search.run();
}

std::vector<std::pair<long, int>> gap_curve(const Bay& bay, const std::vector<long>& budgets,
                                            const SolverConfig& config) {
    if (!std::is_sorted(budgets.begin(), budgets.end()))
        throw InvalidParams("budgets must be ascending");
    for (const long b : budgets)
        if (b < 1) throw BudgetZero("budgets must be >= 1");
    SolverConfig cfg = config;
    cfg.node_budget = budgets.empty() ? config.node_budget : budgets.back();
    Search search(bay, cfg, &budgets);
    search.run();
    auto out = search.checkpoint_gaps();
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].second > out[i - 1].second)
            throw InternalError("gap increased with budget");
    return out;
}

std::vector<std::pair<int, int>> optimal_path_lb_gap(const Bay& bay, const SolverConfig& config) {
    const auto outcome = solve(bay, config);
    if (!outcome.optimal) throw BudgetExceeded("instance not solved to optimality within budget");
    // B^l is the bay right after the l-th relocation of the optimal sequence
    // (pending retrievals intact); B^0 is the pre-processed root.
    std::vector<std::pair<int, int>> out;
    out.emplace_back(0, outcome.z - s_p(bay.pop_retrievable().first, LookAheadDepth::full()));
    Bay state = bay;
    int level = 0;
    for (const auto& mv : outcome.moves) {
        state = state.apply_move(mv);
        if (mv.kind != MoveKind::Relocate) continue;
        ++level;
        out.emplace_back(level, (outcome.z - level) - s_p(state, LookAheadDepth::full()));
    }
    return out;
}

}  // namespace crp
