#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crp/analysis.hpp"
#include "crp/astar.hpp"
#include "crp/stochastic.hpp"

namespace crp {

/// One benchmark table row: gap-to-optimal distribution and mean performance
/// ratio PR = mean (z_heur - z_opt)/z_opt over solved instances.
struct BenchmarkRow {
    std::string name;
    std::array<double, 4> gap_share{};  ///< fractions with gap 0, 1, 2, >=3
    double performance_ratio = 0.0;
};

struct BenchResult {
    std::vector<BenchmarkRow> rows;
    long instances = 0;
    long excluded = 0;            ///< instances whose solve hit the budget
    double root_optimal_fraction = 0.0;  ///< z_H(root) == S_full(root)
    double mean_root_gap = 0.0;          ///< mean z_opt - S_full at the root
};

struct BenchConfig {
    InstanceSpec spec;
    long instances = 10'000;
    long node_budget = 400'000;
    std::vector<int> th_widths = {2};
    int workers = 1;
};

/// Solves each instance to optimality and scores H plus TH-L for each width.
BenchResult bench_heuristics(const BenchConfig& cfg);

struct LbStudyRow {
    int depth = -1;  ///< -1 = full look-ahead
    double mean_nodes = 0.0;
    long q25 = 0, q50 = 0, q75 = 0;
    long max_nodes = 0;
    long solved = 0;
};

struct LbStudyResult {
    std::vector<LbStudyRow> rows;
    long instances = 0;
    long excluded = 0;  ///< instances not solved by every depth within budget
};

/// Nodes-to-optimality statistics per lower-bound depth on a shared
/// instance set; rows are comparable (computed on the jointly solved set).
LbStudyResult lb_study(const InstanceSpec& spec, long instances, const std::vector<int>& depths,
                       long node_budget, int workers);

struct GapCurveRow {
    long budget = 0;
    double mean_gap = 0.0;
    double solved_fraction = 0.0;  ///< gap == 0
};

std::vector<GapCurveRow> gap_curve_study(const InstanceSpec& spec, long instances,
                                         const std::vector<long>& budgets, int workers);

struct LevelGapRow {
    int level = 0;
    double mean_gap = 0.0;  ///< mean z_opt(B^l) - S_full(B^l)
    long count = 0;         ///< instances whose optimal path reaches level l
};

std::vector<LevelGapRow> optimal_path_gap_study(const InstanceSpec& spec, long instances,
                                                long node_budget, int workers);

struct VoiRow {
    int known = 0;
    double mean_z_asa = 0.0;
    double mean_z_mh = 0.0;
    double mean_z_opt = 0.0;
    double gap_asa = 0.0;  ///< (E[z_ASA] - E[z_opt]) / E[z_opt]
    double gap_mh = 0.0;
    double ci95_z_asa = 0.0;
    double ci95_z_mh = 0.0;
};

struct VoiConfig {
    InstanceSpec spec;
    long instances = 500;
    std::vector<double> known_fracs = {0.25, 0.375, 0.5, 0.625, 0.75, 0.9};
    double t_star_frac = 0.25;  ///< t* = ceil(frac*N) + 1
    SamplingParams sampling;
    long prune_sample_cap = 2048;
    long scenario_node_budget = 20'000;
    bool run_asa = true;  ///< false: myopic-only study
    int workers = 1;
};

/// Value-of-information table: realized costs of ASA* and the myopic
/// heuristic against the full-information optimum, per information level.
std::vector<VoiRow> two_stage_voi(const VoiConfig& cfg);

struct RatioRow {
    int columns = 0;
    double known_frac = 0.0;
    double mean_z_mh = 0.0;
    double mean_z_h = 0.0;
    double ratio = 0.0;  ///< E[z_MH] / E[z_H]
    double ci95_ratio = 0.0;
};

/// Large-bay myopic/H ratio study (per C and information level).
std::vector<RatioRow> myopic_ratio_study(int tiers, int fill, const std::vector<int>& c_list,
                                         const std::vector<double>& known_fracs, long instances,
                                         double t_star_frac, std::uint64_t master_seed,
                                         int workers);

struct SavingsRow {
    int columns = 0;
    double known_frac = 0.0;
    double mean_z_mh = 0.0;
    double mean_z_nearest = 0.0;
    double savings = 0.0;  ///< 1 - E[z_MH]/E[z_nearest]
};

/// Savings of the myopic heuristic over the nearest-relocation baseline
/// (the baseline is this library's definition, full information).
std::vector<SavingsRow> myopic_savings_study(int tiers, int fill, const std::vector<int>& c_list,
                                             const std::vector<double>& known_fracs,
                                             long instances, double t_star_frac,
                                             std::uint64_t master_seed, int workers);

struct ErrorBoundRow {
    double delta = 0.0, epsilon = 0.0, e1_e2 = 0.0;
};
struct ErrorBoundE3Row {
    int columns = 0;
    double e3 = 0.0;
};

/// The closed-form loss tables: e1/e2 over the (delta, epsilon) grid, and e3
/// per column count with m=5, d_min=1, u_hat_max = 2N (N = 3C).
std::vector<ErrorBoundRow> error_bound_table_left();
std::vector<ErrorBoundE3Row> error_bound_table_right();

/// ceil semantics used for information levels: smallest integer >= x.
int level_count(double frac, int n);

}  // namespace crp
