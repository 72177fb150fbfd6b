#include "crp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "crp/batch.hpp"
#include "crp/bounds.hpp"
#include "crp/stats.hpp"

namespace crp {

int level_count(double frac, int n) {
    return static_cast<int>(std::ceil(frac * n));
}

BenchResult bench_heuristics(const BenchConfig& cfg) {
    cfg.spec.validate_experiment_regime();
    const int n = static_cast<int>(cfg.instances);
    const size_t heuristics = 1 + cfg.th_widths.size();
    std::vector<int> zopt(n), zh(n), sfull(n), zh_root(n);
    std::vector<std::vector<int>> zth(cfg.th_widths.size(), std::vector<int>(n));
    std::vector<char> solved(n);

    run_batch(n, cfg.workers, [&](int i) {
        Rng rng = make_rng(derive_seed(cfg.spec.seed, i));
        const Bay bay = generate_uniform(cfg.spec, rng);
        SolverConfig solver;
        solver.node_budget = cfg.node_budget;
        const auto outcome = solve(bay, solver);
        solved[i] = outcome.optimal ? 1 : 0;
        zopt[i] = outcome.z;
        sfull[i] = outcome.root_lower;
        zh_root[i] = outcome.root_upper;
        zh[i] = heuristic_h_count(bay);
        for (size_t w = 0; w < cfg.th_widths.size(); ++w)
            zth[w][i] = tree_heuristic_count(bay, BranchWidth{cfg.th_widths[w]});
    });

    BenchResult out;
    out.instances = cfg.instances;
    std::vector<RunningStat> pr(heuristics);
    std::vector<std::array<long, 4>> buckets(heuristics);
    for (auto& b : buckets) b.fill(0);
    RunningStat root_gap;
    long root_opt = 0, included = 0;
    for (int i = 0; i < n; ++i) {
        if (!solved[i]) {
            ++out.excluded;
            continue;
        }
        ++included;
        auto score = [&](size_t hi, int z) {
            const int gap = z - zopt[i];
            buckets[hi][std::min(gap, 3)] += 1;
            pr[hi].add(zopt[i] > 0 ? static_cast<double>(gap) / zopt[i] : 0.0);
        };
        score(0, zh[i]);
        for (size_t w = 0; w < cfg.th_widths.size(); ++w) score(1 + w, zth[w][i]);
        root_opt += zh_root[i] == sfull[i] ? 1 : 0;
        root_gap.add(zopt[i] - sfull[i]);
    }
    auto make_row = [&](size_t hi, std::string name) {
        BenchmarkRow row;
        row.name = std::move(name);
        for (int g = 0; g < 4; ++g)
            row.gap_share[g] = included ? static_cast<double>(buckets[hi][g]) / included : 0.0;
        row.performance_ratio = pr[hi].mean;
        return row;
    };
    out.rows.push_back(make_row(0, "H"));
    for (size_t w = 0; w < cfg.th_widths.size(); ++w)
        out.rows.push_back(make_row(1 + w, "TH-" + std::to_string(cfg.th_widths[w])));
    out.root_optimal_fraction = included ? static_cast<double>(root_opt) / included : 0.0;
    out.mean_root_gap = root_gap.mean;
    return out;
}

LbStudyResult lb_study(const InstanceSpec& spec, long instances, const std::vector<int>& depths,
                       long node_budget, int workers) {
    spec.validate_experiment_regime();
    const int n = static_cast<int>(instances);
    const size_t d = depths.size();
    std::vector<std::vector<long>> nodes(d, std::vector<long>(n));
    std::vector<char> all_solved(n, 1);

    run_batch(n, workers, [&](int i) {
        Rng rng = make_rng(derive_seed(spec.seed, i));
        const Bay bay = generate_uniform(spec, rng);
        for (size_t k = 0; k < d; ++k) {
            SolverConfig solver;
            solver.node_budget = node_budget;
            solver.lb_depth = depths[k] < 0 ? LookAheadDepth::full() : LookAheadDepth{depths[k]};
            const auto outcome = solve(bay, solver);
            nodes[k][i] = outcome.nodes;
            if (!outcome.optimal) all_solved[i] = 0;
        }
    });

    LbStudyResult out;
    out.instances = instances;
    for (size_t k = 0; k < d; ++k) {
        LbStudyRow row;
        row.depth = depths[k];
        std::vector<long> v;
        v.reserve(n);
        for (int i = 0; i < n; ++i)
            if (all_solved[i]) v.push_back(nodes[k][i]);
        if (k == 0) out.excluded = instances - static_cast<long>(v.size());
        if (!v.empty()) {
            row.solved = static_cast<long>(v.size());
            row.mean_nodes =
                static_cast<double>(std::accumulate(v.begin(), v.end(), 0L)) / v.size();
            std::sort(v.begin(), v.end());
            row.q25 = v[v.size() / 4];
            row.q50 = v[v.size() / 2];
            row.q75 = v[(3 * v.size()) / 4];
            row.max_nodes = v.back();
        }
        out.rows.push_back(row);
    }
    return out;
}

std::vector<GapCurveRow> gap_curve_study(const InstanceSpec& spec, long instances,
                                         const std::vector<long>& budgets, int workers) {
    spec.validate_experiment_regime();
    const int n = static_cast<int>(instances);
    std::vector<std::vector<int>> gaps(n);
    run_batch(n, workers, [&](int i) {
        Rng rng = make_rng(derive_seed(spec.seed, i));
        const Bay bay = generate_uniform(spec, rng);
        auto curve = gap_curve(bay, budgets);
        gaps[i].reserve(curve.size());
        for (const auto& [budget, gap] : curve) gaps[i].push_back(gap);
    });
    std::vector<GapCurveRow> out;
    for (size_t b = 0; b < budgets.size(); ++b) {
        GapCurveRow row;
        row.budget = budgets[b];
        long solved = 0;
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            total += gaps[i][b];
            solved += gaps[i][b] == 0 ? 1 : 0;
        }
        row.mean_gap = total / n;
        row.solved_fraction = static_cast<double>(solved) / n;
        out.push_back(row);
    }
    return out;
}

std::vector<LevelGapRow> optimal_path_gap_study(const InstanceSpec& spec, long instances,
                                                long node_budget, int workers) {
    spec.validate_experiment_regime();
    const int n = static_cast<int>(instances);
    std::vector<std::vector<std::pair<int, int>>> per_instance(n);
    run_batch(n, workers, [&](int i) {
        Rng rng = make_rng(derive_seed(spec.seed, i));
        const Bay bay = generate_uniform(spec, rng);
        SolverConfig solver;
        solver.node_budget = node_budget;
        try {
            per_instance[i] = optimal_path_lb_gap(bay, solver);
        } catch (const BudgetExceeded&) {
            per_instance[i].clear();
        }
    });
    std::vector<LevelGapRow> out;
    for (int i = 0; i < n; ++i) {
        for (const auto& [level, gap] : per_instance[i]) {
            if (level >= static_cast<int>(out.size())) out.resize(level + 1);
            out[level].level = level;
            out[level].mean_gap += gap;
            out[level].count += 1;
        }
    }
    for (auto& row : out)
        if (row.count > 0) row.mean_gap /= row.count;
    return out;
}

std::vector<VoiRow> two_stage_voi(const VoiConfig& cfg) {
    cfg.spec.validate_experiment_regime();
    const int n = static_cast<int>(cfg.instances);
    const int containers = cfg.spec.container_count();
    const int t_star = level_count(cfg.t_star_frac, containers) + 1;

    std::vector<VoiRow> rows;
    for (const double frac : cfg.known_fracs) {
        const int known = std::min(level_count(frac, containers), containers);
        std::vector<int> z_asa(n, 0), z_mh(n, 0), z_opt(n, 0);
        run_batch(n, cfg.workers, [&](int i) {
            Rng rng = make_rng(derive_seed(cfg.spec.seed, i));
            const Bay bay = generate_uniform(cfg.spec, rng);
            TwoStageInstance inst{bay, known, t_star};
            SolverConfig full;
            full.node_budget = 400'000;
            z_opt[i] = solve(bay, full).z;
            z_mh[i] = myopic_heuristic(inst).relocations;
            if (cfg.run_asa) {
                AsaConfig asa;
                asa.sampling = cfg.sampling;
                asa.prune_sample_cap = cfg.prune_sample_cap;
                asa.scenario_node_budget = cfg.scenario_node_budget;
                for (int t = 2; t < t_star; ++t) asa.prune_times.push_back(t);
                Rng asa_rng = make_rng(derive_seed(cfg.spec.seed ^ 0x5bd1e995, i));
                const auto result = asa_star(inst, asa, asa_rng);
                z_asa[i] = realized_cost(inst, result, full);
            }
        });
        VoiRow row;
        row.known = known;
        RunningStat sa, sm, so;
        for (int i = 0; i < n; ++i) {
            sa.add(z_asa[i]);
            sm.add(z_mh[i]);
            so.add(z_opt[i]);
        }
        row.mean_z_asa = sa.mean;
        row.mean_z_mh = sm.mean;
        row.mean_z_opt = so.mean;
        row.gap_asa = cfg.run_asa ? (sa.mean - so.mean) / so.mean : 0.0;
        row.gap_mh = (sm.mean - so.mean) / so.mean;
        row.ci95_z_asa = sa.ci95();
        row.ci95_z_mh = sm.ci95();
        rows.push_back(row);
    }
    return rows;
}

std::vector<RatioRow> myopic_ratio_study(int tiers, int fill, const std::vector<int>& c_list,
                                         const std::vector<double>& known_fracs, long instances,
                                         double t_star_frac, std::uint64_t master_seed,
                                         int workers) {
    std::vector<RatioRow> rows;
    const int n = static_cast<int>(instances);
    for (const int columns : c_list) {
        InstanceSpec spec{tiers, columns, fill, master_seed};
        spec.validate_experiment_regime();
        const int containers = spec.container_count();
        const int t_star = level_count(t_star_frac, containers) + 1;
        for (const double frac : known_fracs) {
            const int known = std::min(level_count(frac, containers), containers);
            std::vector<double> ratio_i(n), mh_i(n), h_i(n);
            run_batch(n, workers, [&](int i) {
                Rng rng = make_rng(derive_seed(master_seed, columns * 104729ull + i));
                const Bay bay = generate_uniform(spec, rng);
                TwoStageInstance inst{bay, known, t_star};
                mh_i[i] = myopic_heuristic(inst).relocations;
                h_i[i] = heuristic_h_count(bay);
            });
            RunningStat mh, h;
            for (int i = 0; i < n; ++i) {
                mh.add(mh_i[i]);
                h.add(h_i[i]);
            }
            RatioRow row;
            row.columns = columns;
            row.known_frac = frac;
            row.mean_z_mh = mh.mean;
            row.mean_z_h = h.mean;
            row.ratio = mh.mean / h.mean;
            // delta-method error on the ratio of means
            row.ci95_ratio = 1.96 * row.ratio *
                             std::sqrt(std::pow(mh.stderr_mean() / mh.mean, 2) +
                                       std::pow(h.stderr_mean() / h.mean, 2));
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<SavingsRow> myopic_savings_study(int tiers, int fill, const std::vector<int>& c_list,
                                             const std::vector<double>& known_fracs,
                                             long instances, double t_star_frac,
                                             std::uint64_t master_seed, int workers) {
    std::vector<SavingsRow> rows;
    const int n = static_cast<int>(instances);
    for (const int columns : c_list) {
        InstanceSpec spec{tiers, columns, fill, master_seed};
        spec.validate_experiment_regime();
        const int containers = spec.container_count();
        const int t_star = level_count(t_star_frac, containers) + 1;
        for (const double frac : known_fracs) {
            const int known = std::min(level_count(frac, containers), containers);
            std::vector<double> mh_i(n), nr_i(n);
            run_batch(n, workers, [&](int i) {
                Rng rng = make_rng(derive_seed(master_seed, columns * 15485863ull + i));
                const Bay bay = generate_uniform(spec, rng);
                TwoStageInstance inst{bay, known, t_star};
                mh_i[i] = myopic_heuristic(inst).relocations;
                nr_i[i] = nearest_relocation(bay).relocations;
            });
            RunningStat mh, nr;
            for (int i = 0; i < n; ++i) {
                mh.add(mh_i[i]);
                nr.add(nr_i[i]);
            }
            SavingsRow row;
            row.columns = columns;
            row.known_frac = frac;
            row.mean_z_mh = mh.mean;
            row.mean_z_nearest = nr.mean;
            row.savings = 1.0 - mh.mean / nr.mean;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<ErrorBoundRow> error_bound_table_left() {
    std::vector<ErrorBoundRow> rows;
    for (const double delta : {0.1, 0.5, 1.0})
        for (const double eps : {0.01, 0.05, 0.1}) {
            SamplingParams p;
            p.delta = delta;
            p.epsilon = eps;
            p.r_max = 63.0;
            rows.push_back({delta, eps, error_bound_e1_e2(p)});
        }
    return rows;
}

std::vector<ErrorBoundE3Row> error_bound_table_right() {
    std::vector<ErrorBoundE3Row> rows;
    SamplingParams p;
    p.delta = 0.5;
    p.epsilon = 0.05;
    p.r_max = 63.0;
    for (int c = 10; c <= 50; c += 5) {
        const int n = 3 * c;
        rows.push_back({c, error_bound_e3(p, 5, 1.0, 2.0 * n)});
    }
    return rows;
}

}  // namespace crp
