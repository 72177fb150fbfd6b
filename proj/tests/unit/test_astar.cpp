#include <doctest.h>

#include <sstream>

#include "crp/astar.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace crp;

namespace {

const Bay kFig2 = Bay(3, 3, {{4, 1, 6}, {2, 5}, {3}});

}  // namespace

TEST_CASE("worked example with the counting bound matches the tree figure") {
    SolverConfig cfg;
    cfg.lb_depth = LookAheadDepth::counting();
    const auto out = solve(kFig2, cfg);
    CHECK(out.z == 4);
    CHECK(out.gap == 0);
    CHECK(out.optimal);
    CHECK(out.nodes == 6);      // two children at level 1, four at level 2
    CHECK(out.max_level == 2);  // complete at level 2
    CHECK(out.root_lower == 2);
    CHECK(out.root_upper == 4);
    CHECK(replay(kFig2, out.moves).empty());
    CHECK(relocation_count(out.moves) == 4);
}

TEST_CASE("full look-ahead collapses the worked example at the root") {
    const auto out = solve(kFig2);
    CHECK(out.z == 4);
    CHECK(out.nodes == 0);  // S_full = 4 = z_H, rule (i) at the root
    CHECK(out.optimal);
}

TEST_CASE("at most C containers solve at the root") {
    Rng rng = make_rng(31);
    for (int i = 0; i < 100; ++i) {
        const Bay bay = gen::sparse_bay(4, 5, 1 + uniform_below(rng, 5), rng);
        SolverConfig cfg;
        cfg.lb_depth = LookAheadDepth::counting();
        const auto out = solve(bay, cfg);
        CHECK(out.z == s0(bay));
        CHECK(out.nodes == 0);
    }
}

TEST_CASE("oracle equivalence over every 3x3 h=2 bay, all bound configs" *
          doctest::timeout(300)) {
    oracle::for_each_filled_bay(3, 3, 2, [](const Bay& bay) {
        const int opt = oracle::z_opt(bay);
        for (const int depth : {0, 1, 2, -1}) {
            SolverConfig cfg;
            cfg.lb_depth = depth < 0 ? LookAheadDepth::full() : LookAheadDepth{depth};
            const auto out = solve(bay, cfg);
            CHECK(out.optimal);
            CHECK(out.z == opt);
            CHECK(replay(bay, out.moves).empty());
            CHECK(relocation_count(out.moves) == opt);
        }
        SolverConfig th_cfg;
        th_cfg.upper = UpperBoundKind::TreeHeuristic;
        th_cfg.th_width = 2;
        CHECK(solve(bay, th_cfg).z == opt);
    });
}

TEST_CASE("anytime soundness under small budgets") {
    Rng rng = make_rng(32);
    for (int i = 0; i < 120; ++i) {
        InstanceSpec spec{3, 4, 2, 0};
        const Bay bay = generate_uniform(spec, rng);
        const int opt = oracle::z_opt(bay);
        for (const long budget : {1L, 2L, 5L, 20L}) {
            SolverConfig cfg;
            cfg.node_budget = budget;
            cfg.lb_depth = LookAheadDepth::counting();
            const auto out = solve(bay, cfg);
            CHECK(out.z >= opt);
            CHECK(out.z - out.gap <= opt);  // L_min <= z_opt <= z_A
            CHECK(out.gap >= 0);
            CHECK(replay(bay, out.moves).empty());
            CHECK(relocation_count(out.moves) == out.z);
        }
    }
}

TEST_CASE("budget of one reports the root bounds as the gap") {
    SolverConfig cfg;
    cfg.node_budget = 1;
    cfg.lb_depth = LookAheadDepth::counting();
    const auto out = solve(kFig2, cfg);
    CHECK(out.z == 4);
    CHECK(out.gap == 4 - 2);  // z_H(root) - S_0(root)
    CHECK_THROWS_AS(solve(kFig2, SolverConfig{0}), BudgetZero);
}

TEST_CASE("gap curve is non-increasing and reaches zero") {
    SolverConfig cfg;
    cfg.lb_depth = LookAheadDepth::counting();
    const auto curve = gap_curve(kFig2, {1, 2, 4, 6, 10, 100}, cfg);
    REQUIRE(curve.size() == 6);
    CHECK(curve[0] == std::pair<long, int>{1, 2});
    CHECK(curve[3] == std::pair<long, int>{6, 0});  // complete at six nodes
    CHECK(curve[5].second == 0);
    for (size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].second <= curve[i - 1].second);
}

TEST_CASE("gap curve checkpoints match independent solves") {
    Rng rng = make_rng(33);
    const std::vector<long> budgets = {1, 3, 7, 15, 40, 200};
    for (int i = 0; i < 60; ++i) {
        InstanceSpec spec{4, 5, 3, 0};
        const Bay bay = generate_uniform(spec, rng);
        SolverConfig cfg;
        cfg.lb_depth = LookAheadDepth{1};
        const auto curve = gap_curve(bay, budgets, cfg);
        for (size_t b = 0; b < budgets.size(); ++b) {
            SolverConfig one = cfg;
            one.node_budget = budgets[b];
            const auto out = solve(bay, one);
            CHECK(curve[b].second == out.gap);
        }
    }
}

TEST_CASE("pruning changes no answers versus the exhaustive tree") {
    // the exhaustive reference is the oracle; bounds only prune
    Rng rng = make_rng(34);
    for (int i = 0; i < 80; ++i) {
        InstanceSpec spec{3, 3, 2, 0};
        const Bay bay = generate_uniform(spec, rng);
        CHECK(solve(bay).z == oracle::z_opt(bay));
    }
}

TEST_CASE("level semantics: l relocations on the path to each level-l node") {
    // indirectly: the worked example's incumbent path has exactly z relocations
    SolverConfig cfg;
    cfg.lb_depth = LookAheadDepth::counting();
    const auto out = solve(kFig2, cfg);
    int relocs = 0;
    Bay state = kFig2;
    for (const auto& mv : out.moves) {
        state = state.apply_move(mv);
        relocs += mv.kind == MoveKind::Relocate ? 1 : 0;
    }
    CHECK(relocs == out.z);
}

TEST_CASE("optimal path lower-bound gaps") {
    const auto gaps = optimal_path_lb_gap(kFig2);
    REQUIRE(!gaps.empty());
    // level 0: z_opt=4, S_full=4
    CHECK(gaps[0] == std::pair<int, int>{0, 0});
    for (const auto& [level, gap] : gaps) CHECK(gap >= 0);
    // final level always collapses
    CHECK(gaps.back().second == 0);
}

TEST_CASE("trace emits one line per visited node") {
    std::ostringstream trace;
    SolverConfig cfg;
    cfg.lb_depth = LookAheadDepth::counting();
    cfg.trace = &trace;
    solve(kFig2, cfg);
    const std::string text = trace.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);  // root + 6 children
    CHECK(text.find("root") != std::string::npos);
    CHECK(text.find("relocate 6") != std::string::npos);
}

TEST_CASE("dedup flag only removes duplicate bays, keeping optimality") {
    Rng rng = make_rng(35);
    for (int i = 0; i < 50; ++i) {
        InstanceSpec spec{3, 4, 2, 0};
        const Bay bay = generate_uniform(spec, rng);
        SolverConfig plain;
        plain.lb_depth = LookAheadDepth::counting();
        SolverConfig dedup = plain;
        dedup.dedup_states = true;
        const auto a = solve(bay, plain);
        const auto b = solve(bay, dedup);
        CHECK(a.z == b.z);
        CHECK(b.nodes <= a.nodes);
    }
}

TEST_CASE("cache off gives identical results") {
    Rng rng = make_rng(36);
    for (int i = 0; i < 50; ++i) {
        InstanceSpec spec{4, 5, 3, 0};
        const Bay bay = generate_uniform(spec, rng);
        SolverConfig with;
        SolverConfig without;
        without.cache_bounds = false;
        const auto a = solve(bay, with);
        const auto b = solve(bay, without);
        CHECK(a.z == b.z);
        CHECK(a.nodes == b.nodes);
        CHECK(a.gap == b.gap);
    }
}
