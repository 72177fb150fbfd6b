#include "crp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "crp/astar.hpp"
#include "crp/batch.hpp"
#include "crp/bounds.hpp"
#include "crp/heuristics.hpp"
#include "crp/stats.hpp"

namespace crp {

double ColumnBlockDist::expected_blocking() const {
    double a = 0.0;
    for (size_t k = 1; k < p.size(); ++k) a += static_cast<double>(k) * p[k];
    return a;
}

ColumnBlockDist block_dist(int h) {
    if (h < 1) throw InvalidParams("column height must be >= 1");
    // table[m][k] = p_{k,m}; p_{0,m} = 1/m!, and the recursion conditions on
    // the position of the smallest container, which needs terms up to j=k+1
    std::vector<std::vector<double>> table(h + 1);
    double factorial = 1.0;
    for (int m = 0; m <= h; ++m) {
        if (m > 0) factorial *= m;
        table[m].assign(std::max(1, m), 0.0);
        table[m][0] = 1.0 / factorial;
        for (int k = 1; k < m; ++k) {
            double s = 0.0;
            for (int j = 1; j <= std::min(k + 1, m); ++j) {
                const int kk = k - j + 1, mm = m - j;
                if (kk >= 0 && kk < static_cast<int>(table[mm].size())) s += table[mm][kk];
            }
            table[m][k] = s / m;
        }
    }
    ColumnBlockDist out;
    out.h = h;
    out.p = table[h];
    return out;
}

double alpha(int h) {
    return block_dist(h).expected_blocking();
}

double theta(int h) {
    if (h < 1) throw InvalidParams("column height must be >= 1");
    const double base = 2.0 / (static_cast<double>(h) * (h + 1));
    return std::pow(base, 2 * h) / (8.0 * h);
}

double f_of_c(int h, int tiers, int columns, double g_estimate) {
    if (columns < h + 1) throw InvalidParams("f(C) needs C >= h+1");
    const double th = theta(h);
    const double e = std::exp(th);
    const double k_prime = g_estimate + e * h * (tiers - 1) / ((e - 1) * (e - 1));
    return 1.0 + k_prime / alpha(h) / columns;
}

namespace {

std::uint64_t factorial_capped(int n, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > cap / i) return cap + 1;
        f *= i;
    }
    return f;
}

}  // namespace

GEstimate estimate_g(int h, int tiers, int columns, const GEstimateConfig& cfg, Rng& rng) {
    InstanceSpec spec{tiers, columns, h, 0};
    spec.validate();
    const double expected_s0 = alpha(h) * columns;
    GEstimate out;

    const int n = h * columns;
    if (!cfg.use_upper_proxy &&
        factorial_capped(n, cfg.exact_enumeration_guard) <= cfg.exact_enumeration_guard) {
        // exact: every permutation laid out column by column
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::sort(perm.begin(), perm.end());
        double total = 0.0;
        long count = 0;
        SolverConfig solver;
        do {
            std::vector<std::vector<int>> stacks(columns);
            for (int c = 0; c < columns; ++c)
                stacks[c].assign(perm.begin() + static_cast<long>(c) * h,
                                 perm.begin() + static_cast<long>(c + 1) * h);
            total += solve(Bay(tiers, columns, stacks), solver).z;
            ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.mean = total / count - expected_s0;
        out.exact = true;
        out.samples = count;
        return out;
    }

    RunningStat stat;
    SolverConfig solver;
    solver.node_budget = cfg.node_budget;
    for (long i = 0; i < cfg.samples; ++i) {
        const Bay bay = generate_uniform(spec, rng);
        if (cfg.use_upper_proxy) {
            stat.add(heuristic_h_count(bay));
            continue;
        }
        const auto outcome = solve(bay, solver);
        if (!outcome.optimal) {
            ++out.budget_exceeded;
            continue;
        }
        stat.add(outcome.z);
    }
    out.mean = stat.mean - expected_s0;
    out.ci95 = stat.ci95();
    out.upper_proxy = cfg.use_upper_proxy;
    out.samples = stat.n;
    return out;
}

SpecialColumnResult special_column_check(int h, int columns, long samples, Rng& rng) {
    InstanceSpec spec{h + 1, columns, h, 0};
    spec.validate();
    const int omega = (h - 1) * (columns + 1) + 1;
    long no_special = 0;
    for (long i = 0; i < samples; ++i) {
        const Bay bay = generate_uniform(spec, rng);
        bool special = false;
        for (int c = 0; c < columns && !special; ++c) {
            bool all_large = true;
            for (int t = 0; t < bay.height(c); ++t) all_large &= bay.at(c, t) >= omega;
            special = all_large;
        }
        no_special += special ? 0 : 1;
    }
    SpecialColumnResult out;
    out.samples = samples;
    out.p_no_special = static_cast<double>(no_special) / samples;
    out.sigma = std::sqrt(std::max(out.p_no_special * (1 - out.p_no_special), 1e-12) / samples);
    out.bound = std::exp(-theta(h) * (columns + 1));
    return out;
}

ConvergenceResult convergence_experiment(int h, int tiers, const std::vector<int>& c_list,
                                         long samples, std::uint64_t master_seed, int workers,
                                         bool with_zopt, long zopt_budget) {
    ConvergenceResult result;
    result.rows.resize(c_list.size());
    for (size_t ci = 0; ci < c_list.size(); ++ci) {
        const int columns = c_list[ci];
        InstanceSpec spec{tiers, columns, h, 0};
        spec.validate();
        std::vector<double> zh(samples), s0v(samples), zopt(samples, 0.0);
        std::vector<char> solved(samples, 1);
        run_batch(static_cast<int>(samples), workers, [&](int i) {
            Rng rng = make_rng(derive_seed(master_seed, ci * 1'000'000ull + i));
            const Bay bay = generate_uniform(spec, rng);
            zh[i] = heuristic_h_count(bay);
            s0v[i] = s0(bay);
            if (with_zopt) {
                SolverConfig solver;
                solver.node_budget = zopt_budget;
                const auto outcome = solve(bay, solver);
                zopt[i] = outcome.z;
                solved[i] = outcome.optimal ? 1 : 0;
            }
        });
        RunningStat zh_stat, s0_stat, diff_stat, zopt_stat;
        for (long i = 0; i < samples; ++i) {
            zh_stat.add(zh[i]);
            s0_stat.add(s0v[i]);
            diff_stat.add(zh[i] - s0v[i]);
            if (with_zopt && solved[i]) zopt_stat.add(zopt[i]);
        }
        ConvergenceRow row;
        row.columns = columns;
        row.samples = samples;
        row.mean_s0 = s0_stat.mean;
        row.mean_zh = zh_stat.mean;
        row.mean_zopt = with_zopt ? zopt_stat.mean : std::numeric_limits<double>::quiet_NaN();
        row.ratio = zh_stat.mean / s0_stat.mean;
        row.diff = diff_stat.mean;
        row.ci95 = diff_stat.ci95();
        result.rows[ci] = row;
    }
    // least-squares fit of (ratio - 1) = c / C through the origin
    double sxy = 0.0, sxx = 0.0, syy = 0.0, sy = 0.0;
    for (const auto& row : result.rows) {
        const double x = 1.0 / row.columns, y = row.ratio - 1.0;
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
        sy += y;
    }
    if (sxx > 0 && !result.rows.empty()) {
        result.fit.c = sxy / sxx;
        const double n = static_cast<double>(result.rows.size());
        double ss_res = 0.0;
        for (const auto& row : result.rows) {
            const double e = (row.ratio - 1.0) - result.fit.c / row.columns;
            ss_res += e * e;
        }
        const double ss_tot = syy - sy * sy / n;
        result.fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    }
    return result;
}

}  // namespace crp
