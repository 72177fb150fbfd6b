#include "crp/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace crp {

int TwoStageInstance::unknown_count() const {
    return bay.container_count() - known;
}

void TwoStageInstance::validate() const {
    if (t_star < 1) throw InvalidParams("t_star must be >= 1");
    if (known < 1) throw InvalidParams("at least one container must be known");
    const int n = bay.container_count();
    if (known > n) throw InvalidParams("known count exceeds container count");
    // labels must be exactly 1..N so that unknowns are the labels > known
    const auto labels = bay.labels_sorted();
    for (int i = 0; i < n; ++i)
        if (labels[i] != i + 1)
            throw InvalidParams("two-stage instances need contiguous labels 1..N");
}

std::vector<int> TwoStageInstance::unknown_labels_canonical() const {
    std::vector<int> slots;
    for (int c = 0; c < bay.columns(); ++c)
        for (int t = 0; t < bay.height(c); ++t)
            if (bay.at(c, t) > known) slots.push_back(bay.at(c, t));
    return slots;
}

Bay TwoStageInstance::realize(const std::vector<int>& scenario_labels) const {
    const auto slots = unknown_labels_canonical();
    if (scenario_labels.size() != slots.size())
        throw InvalidParams("scenario size does not match unknown count");
    // map placeholder label -> scenario label
    std::vector<int> map(bay.max_label() + 1, 0);
    for (size_t i = 0; i < slots.size(); ++i) map[slots[i]] = scenario_labels[i];
    auto stacks = bay.stacks();
    for (auto& col : stacks)
        for (auto& x : col)
            if (x > known) x = map[x];
    return Bay(bay.tiers(), bay.columns(), stacks);
}

std::uint64_t scenario_count(const TwoStageInstance& inst, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (int i = 2; i <= inst.unknown_count(); ++i) {
        if (f > cap / i) return cap;
        f *= i;
    }
    return f;
}

void SamplingParams::validate() const {
    if (delta <= 0) throw InvalidParams("delta must be positive");
    if (epsilon <= 0 || epsilon >= 1) throw InvalidParams("epsilon must lie in (0,1)");
    if (r_max < 0 || r_min < 0 || (r_max > 0 && r_min > r_max))
        throw InvalidParams("need 0 <= r_min <= r_max");
}

long sample_size(const SamplingParams& params) {
    params.validate();
    const double range = params.r_max - params.r_min;
    const double s = range * range * std::log(params.epsilon / 2.0) /
                     (-2.0 * params.delta * params.delta);
    return std::max(1L, static_cast<long>(std::ceil(s)));
}

double error_bound_e1_e2(const SamplingParams& params) {
    if (params.delta == 0) return 0.0;
    params.validate();
    const double pi = 3.14159265358979323846;
    return 2.0 * params.delta * std::sqrt(pi / -std::log(params.epsilon / 2.0));
}

double error_bound_e3(const SamplingParams& params, int m, double d_min, double u_hat_max) {
    if (m == 0) return 0.0;
    params.validate();
    if (m < 0 || d_min <= 0) throw InvalidParams("need m >= 0 and d_min > 0");
    const double pi = 3.14159265358979323846;
    const double half_eps = params.epsilon / 2.0;
    const double dd = d_min * d_min / (params.delta * params.delta);
    const double mistake = std::pow(half_eps, dd) +
                           (d_min / params.delta) * std::sqrt(-std::log(half_eps) * pi / 2.0) *
                               std::pow(half_eps, dd / 2.0);
    const double loss = params.delta * std::sqrt(pi / -std::log(half_eps)) + u_hat_max;
    return m * mistake * loss;
}

int PruneLedger::times() const {
    int m = 0;
    int last = -1;
    for (const auto& e : events) {
        if (e.time != last) ++m;
        last = e.time;
    }
    return m;
}

double PruneLedger::d_min() const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& e : events) d = std::min(d, e.d);
    return d;
}

double PruneLedger::u_hat_max() const {
    double u = 0.0;
    for (const auto& e : events) u = std::max(u, e.u_hat);
    return u;
}

namespace {

// One first-stage path: the bay state (placeholder labels) and the move
// trail. Only relocations branch; retrievals and idles are forced.
struct Path {
    Bay bay;
    std::vector<MoveEvent> moves;
    int relocations = 0;
};

// Performs time step t for every live path: forced retrieval when a known
// target is on top, forced idle when the target is unknown (no knowns
// remain), and one child per legal relocation otherwise.
std::vector<Path> expand_tick(std::vector<Path>& live, const TwoStageInstance& inst,
                              long node_cap, long& nodes) {
    std::vector<Path> next;
    next.reserve(live.size());
    for (auto& path : live) {
        const auto tgt = path.bay.target();
        if (!tgt || *tgt > inst.known) {  // emptied, or idle until the reveal
            next.push_back(std::move(path));
            continue;
        }
        const int src = path.bay.target_column();
        if (path.bay.top(src) == *tgt) {
            path.bay.pop_top(src);
            path.moves.push_back(MoveEvent::retrieve(*tgt, src));
            next.push_back(std::move(path));
            continue;
        }
        const int blocker = path.bay.top(src);
        // children in column-index order: deterministic and independent of
        // the (masked) labels, so relabeling unknowns cannot reorder ties
        for (int dest = 0; dest < path.bay.columns(); ++dest) {
            if (dest == src || path.bay.column_full(dest)) continue;
            if (nodes >= node_cap) throw BudgetExceeded("first-stage tree node cap exceeded");
            Path child;
            child.bay = path.bay;
            child.bay.relocate_top(src, dest);
            child.moves = path.moves;
            child.moves.push_back(MoveEvent::relocate(blocker, src, dest));
            child.relocations = path.relocations + 1;
            next.push_back(std::move(child));
            ++nodes;
        }
    }
    return next;
}

struct ScenarioSet {
    std::vector<std::vector<int>> draws;  // each a labeling of the unknown slots
    bool exhaustive = false;
};

ScenarioSet draw_scenarios(const TwoStageInstance& inst, long samples, bool exhaustive_when_small,
                           Rng& rng) {
    ScenarioSet out;
    const int u = inst.unknown_count();
    std::vector<int> base(u);
    std::iota(base.begin(), base.end(), inst.known + 1);
    const std::uint64_t total = scenario_count(inst);
    if (u == 0) {
        out.draws.push_back({});
        out.exhaustive = true;
        return out;
    }
    if (exhaustive_when_small && total <= static_cast<std::uint64_t>(samples)) {
        std::vector<int> perm = base;
        do {
            out.draws.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.exhaustive = true;
        return out;
    }
    out.draws.reserve(samples);
    for (long s = 0; s < samples; ++s) {
        std::vector<int> perm = base;
        std::shuffle(perm.begin(), perm.end(), rng);
        out.draws.push_back(std::move(perm));
    }
    return out;
}

// Mean S_full / z_H over scenario completions of a path's bay, plus the
// path's relocations so far (the cumulative expected bounds).
struct PathBounds {
    double lower = 0.0;
    double upper = 0.0;
};

PathBounds expected_bounds(const TwoStageInstance& inst, const Path& path,
                           const ScenarioSet& scenarios, long cap) {
    const long n = cap > 0 ? std::min<long>(cap, scenarios.draws.size())
                           : static_cast<long>(scenarios.draws.size());
    // completing a path bay: unknown slot order must match the instance's
    // canonical order, which relocation of unknowns does not change because
    // relabeling maps labels, not positions
    TwoStageInstance view{path.bay, inst.known, inst.t_star};
    double lo = 0.0, up = 0.0;
    for (long s = 0; s < n; ++s) {
        const Bay b = view.realize(scenarios.draws[s]);
        lo += s_p(b, LookAheadDepth::full());
        up += heuristic_h_count(b);
    }
    return {path.relocations + lo / n, path.relocations + up / n};
}

}  // namespace

AsaResult asa_star(const TwoStageInstance& instance, const AsaConfig& config, Rng& rng) {
    instance.validate();
    SamplingParams sampling = config.sampling;
    if (sampling.r_max <= 0)
        sampling.r_max = static_cast<double>(instance.container_count()) * (instance.bay.tiers() - 1);
    const long samples = sample_size(sampling);

    // common random numbers: one scenario set shared by every path
    const ScenarioSet scenarios =
        draw_scenarios(instance, samples, config.exhaustive_when_small, rng);

    std::vector<char> prune_at(std::max(1, instance.t_star) + 1, 0);
    for (const int t : config.prune_times)
        if (t >= 1 && t < instance.t_star) prune_at[t] = 1;
    if (instance.t_star - 1 >= 1) prune_at[instance.t_star - 1] = 1;

    AsaResult result;
    result.scenarios_used = static_cast<long>(scenarios.draws.size());
    result.exhaustive = scenarios.exhaustive;

    // build the first-stage tree one time step at a time
    std::vector<Path> live;
    live.push_back(Path{instance.bay, {}, 0});
    long nodes = 1;
    for (int t = 1; t < instance.t_star; ++t) {
        live = expand_tick(live, instance, config.first_stage_node_cap, nodes);

        if (prune_at[t] && live.size() > 1) {
            std::vector<PathBounds> bounds(live.size());
            for (size_t i = 0; i < live.size(); ++i)
                bounds[i] = expected_bounds(instance, live[i], scenarios,
                                            config.prune_sample_cap);
            double u_min = std::numeric_limits<double>::infinity();
            size_t u_arg = 0;
            for (size_t i = 0; i < live.size(); ++i)
                if (bounds[i].upper < u_min) {
                    u_min = bounds[i].upper;
                    u_arg = i;
                }
            std::vector<Path> kept;
            PruneEvent event{t, std::numeric_limits<double>::infinity(), u_min, 0};
            for (size_t i = 0; i < live.size(); ++i) {
                if (i != u_arg && bounds[i].lower >= u_min) {
                    event.d = std::min(event.d, bounds[i].lower - u_min);
                    ++event.pruned_paths;
                } else {
                    kept.push_back(std::move(live[i]));
                }
            }
            if (event.pruned_paths > 0) result.ledger.events.push_back(event);
            live = std::move(kept);
        }
    }

    // final pruning with expected bounds at t*-1 happened above (time ==
    // t*-1 is in prune_at); evaluate surviving leaves with per-scenario
    // solves and keep the best sampled mean
    SolverConfig second;
    second.node_budget = config.scenario_node_budget;
    double best = std::numeric_limits<double>::infinity();
    size_t best_i = 0;
    for (size_t i = 0; i < live.size(); ++i) {
        TwoStageInstance view{live[i].bay, instance.known, instance.t_star};
        double total = 0.0;
        for (const auto& draw : scenarios.draws)
            total += solve(view.realize(draw), second).z;
        const double mean = live[i].relocations + total / scenarios.draws.size();
        if (mean < best) {
            best = mean;
            best_i = i;
        }
    }
    result.first_stage = std::move(live[best_i].moves);
    result.end_bay = std::move(live[best_i].bay);
    result.first_stage_relocations = live[best_i].relocations;
    result.expected_cost = best;
    return result;
}

ExactTwoStageResult exact_two_stage(const TwoStageInstance& instance,
                                    std::uint64_t leaf_solve_guard) {
    instance.validate();
    const std::uint64_t n_scen = scenario_count(instance);

    std::vector<Path> leaves;
    leaves.push_back(Path{instance.bay, {}, 0});
    long nodes = 1;
    for (int t = 1; t < instance.t_star; ++t) {
        leaves = expand_tick(leaves, instance, std::numeric_limits<long>::max(), nodes);
        if (leaves.size() * n_scen > leaf_solve_guard)
            throw TooLarge("two-stage enumeration exceeds the leaf-solve guard");
    }

    // all scenarios, exact second-stage solves
    std::vector<int> base(instance.unknown_count());
    std::iota(base.begin(), base.end(), instance.known + 1);
    ExactTwoStageResult out;
    out.expected_cost = std::numeric_limits<double>::infinity();
    SolverConfig second;  // effectively unbounded at this scale
    for (const auto& leaf : leaves) {
        TwoStageInstance view{leaf.bay, instance.known, instance.t_star};
        double total = 0.0;
        long count = 0;
        std::vector<int> perm = base;
        if (perm.empty()) {
            total = solve(leaf.bay, second).z;
            count = 1;
        } else {
            do {
                total += solve(view.realize(perm), second).z;
                ++count;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        const double mean = leaf.relocations + total / count;
        if (mean < out.expected_cost) {
            out.expected_cost = mean;
            out.first_stage = leaf.moves;
        }
    }
    return out;
}

int realized_cost(const TwoStageInstance& instance, const AsaResult& chosen,
                  const SolverConfig& second_stage) {
    const auto outcome = solve(chosen.end_bay, second_stage);
    return chosen.first_stage_relocations + outcome.z;
}

}  // namespace crp
