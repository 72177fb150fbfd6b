#pragma once

#include <cstdint>
#include <vector>

#include "crp/astar.hpp"
#include "crp/bay.hpp"
#include "crp/rng.hpp"

namespace crp {

/// Two-stage incomplete-information instance. The bay carries the realized
/// labels 1..N; labels 1..known are known from time zero, the rest are
/// revealed all at once at time step t_star. Every move (relocation or
/// retrieval) takes one time step; idle steps are inserted when the target
/// is still unknown and cost nothing. Scenarios are the orderings of the
/// unknown labels, uniform by default.
struct TwoStageInstance {
    Bay bay;
    int known = 1;
    int t_star = 1;

    int container_count() const { return bay.container_count(); }
    int unknown_count() const;
    void validate() const;
    /// Positions of unknown containers in canonical bay order (column-major,
    /// bottom to top). Scenario k assigns its k-th sampled label to the k-th
    /// slot, so first-stage behavior is invariant to relabeling unknowns.
    std::vector<int> unknown_labels_canonical() const;
    /// Bay with unknown containers relabeled per the scenario.
    Bay realize(const std::vector<int>& scenario_labels) const;
};

/// Number of scenarios (N-|K|)! capped at `cap` to avoid overflow.
std::uint64_t scenario_count(const TwoStageInstance& inst, std::uint64_t cap = 1ull << 62);

/// (delta, epsilon, r_max) and the Hoeffding-derived sample count.
struct SamplingParams {
    double delta = 0.5;
    double epsilon = 0.05;
    double r_max = 0.0;  ///< 0 means default N(P-1) of the instance
    double r_min = 0.0;

    void validate() const;
};

/// Smallest integer S with 2 exp(-2 S delta^2 / (r_max-r_min)^2) <= epsilon,
/// i.e. S = ceil(r_max^2 ln(eps/2) / (-2 delta^2)); at least 1.
long sample_size(const SamplingParams& params);

/// Expected-loss bound shared by the sampling and single-time pruning errors:
/// 2 delta sqrt(pi / -ln(eps/2)).
double error_bound_e1_e2(const SamplingParams& params);

/// Proposition-style bound on the total expected loss when pruning at m
/// time-steps before t*-1 with per-time margin at least d_min and estimated
/// upper bounds at most u_hat_max.
double error_bound_e3(const SamplingParams& params, int m, double d_min, double u_hat_max);

struct PruneEvent {
    int time = 0;          ///< time step at which paths were pruned
    double d = 0.0;        ///< margin L_bar(pruned) - min U_bar at that time
    double u_hat = 0.0;    ///< the minimum estimated upper bound at that time
    int pruned_paths = 0;
};

struct PruneLedger {
    std::vector<PruneEvent> events;

    int times() const;          ///< m: number of distinct pruning times
    double d_min() const;       ///< min margin over events (infinity if none)
    double u_hat_max() const;   ///< max of the per-time minimum upper bounds
};

struct AsaConfig {
    SamplingParams sampling;
    /// Time steps (< t*) after which expected-bound pruning runs; t*-1 is
    /// always included.
    std::vector<int> prune_times;
    /// Cap on bound-estimation samples per pruning pass; 0 = use the full
    /// Hoeffding sample count. Final path selection always uses the full set.
    long prune_sample_cap = 0;
    long first_stage_node_cap = 200'000;
    /// Node budget of the per-scenario second-stage solver.
    long scenario_node_budget = 100'000;
    /// Enumerate all scenarios instead of sampling when (N-|K|)! <= S.
    bool exhaustive_when_small = true;
};

struct AsaResult {
    std::vector<MoveEvent> first_stage;  ///< moves for steps 1..t*-1 (no idles)
    Bay end_bay;                         ///< bay after the first stage, true labels
    int first_stage_relocations = 0;
    double expected_cost = 0.0;          ///< sampled mean of total relocations
    long scenarios_used = 0;
    bool exhaustive = false;
    PruneLedger ledger;
};

/// Approximate stochastic search: builds the first-stage tree over time
/// steps 1..t*-1, estimates expected second-stage cost per surviving path by
/// sampling scenarios (common random numbers across paths) and solving each
/// completion, and returns the cost-minimizing first stage.
AsaResult asa_star(const TwoStageInstance& instance, const AsaConfig& config, Rng& rng);

/// Exact expected optimal cost over all scenarios and all first-stage move
/// sequences; throws TooLarge beyond the leaf-solve guard.
struct ExactTwoStageResult {
    std::vector<MoveEvent> first_stage;
    double expected_cost = 0.0;
};
ExactTwoStageResult exact_two_stage(const TwoStageInstance& instance,
                                    std::uint64_t leaf_solve_guard = 1'000'000);

/// Total relocations when the chosen first stage is executed and the true
/// scenario is then solved with the full-information solver.
int realized_cost(const TwoStageInstance& instance, const AsaResult& chosen,
                  const SolverConfig& second_stage = {});

}  // namespace crp
