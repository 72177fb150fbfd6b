#pragma once

#include <vector>

#include "crp/bay.hpp"
#include "crp/rng.hpp"

namespace crp {

/// Distribution of the number of blocking containers in a uniformly ordered
/// column of height h.
struct ColumnBlockDist {
    int h = 0;
    std::vector<double> p;  ///< p[k] for k = 0..h-1 (h >= 1); sums to 1

    double expected_blocking() const;  ///< alpha_h
};

/// p_{0,h} = 1/h!; p_{k,h} = sum_{j=1..min(k+1,h)} (1/h) p_{k-j+1,h-j}.
/// The sum runs to k+1, which the recursion's derivation requires even
/// though the displayed form stops at k; validated against enumeration.
ColumnBlockDist block_dist(int h);

/// Expected blocking containers per column; E[S0] over uniform bays is
/// alpha(h) * C.
double alpha(int h);

/// theta = (1/(8h)) (2/(h(h+1)))^{2h}.
double theta(int h);

/// f(C) = 1 + K/C with K = K'/alpha_h and
/// K' = g(h+1) + e^theta h(P-1)/(e^theta - 1)^2.
double f_of_c(int h, int tiers, int columns, double g_estimate);

struct GEstimate {
    double mean = 0.0;   ///< estimate of E[z] - alpha_h C
    double ci95 = 0.0;   ///< 0 when exact
    bool exact = false;
    bool upper_proxy = false;  ///< true when z_H stood in for z_opt
    long samples = 0;
    long budget_exceeded = 0;  ///< instances dropped for hitting the budget
};

struct GEstimateConfig {
    long samples = 10'000;
    long node_budget = 1'000'000;
    bool use_upper_proxy = false;       ///< estimate with z_H instead of z_opt
    std::uint64_t exact_enumeration_guard = 1'000'000;  ///< max (hC)! for exact mode
};

/// Monte Carlo (or exhaustive, when (hC)! is small) estimate of
/// g(C) = E[z_opt(B_C)] - alpha_h C.
GEstimate estimate_g(int h, int tiers, int columns, const GEstimateConfig& cfg, Rng& rng);

/// Empirical probability that a uniform bay has no column whose containers
/// all have labels >= omega = (h-1)(C+1)+1.
struct SpecialColumnResult {
    double p_no_special = 0.0;
    double sigma = 0.0;       ///< binomial standard error
    double bound = 0.0;       ///< e^{-theta (C+1)}
    long samples = 0;
};
SpecialColumnResult special_column_check(int h, int columns, long samples, Rng& rng);

struct ConvergenceRow {
    int columns = 0;
    long samples = 0;
    double mean_s0 = 0.0;
    double mean_zh = 0.0;
    double mean_zopt = 0.0;  ///< NaN unless computed
    double ratio = 0.0;      ///< mean_zh / mean_s0
    double diff = 0.0;       ///< mean_zh - mean_s0
    double ci95 = 0.0;       ///< on the difference
};

struct ConvergenceFit {
    double c = 0.0;   ///< least-squares c in (ratio - 1) ~ c/C
    double r2 = 0.0;
};

struct ConvergenceResult {
    std::vector<ConvergenceRow> rows;
    ConvergenceFit fit;
};

/// Per-C Monte Carlo means of z_H and S0 on evenly filled bays (Fig-4-style
/// convergence study). 1 <= ratio always since z_H >= z_opt >= S0.
ConvergenceResult convergence_experiment(int h, int tiers, const std::vector<int>& c_list,
                                         long samples, std::uint64_t master_seed, int workers,
                                         bool with_zopt = false, long zopt_budget = 1'000'000);

}  // namespace crp
