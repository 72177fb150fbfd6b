#include <doctest.h>

#include "crp/bounds.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace crp;

namespace {

const Bay kFig2 = Bay(3, 3, {{4, 1, 6}, {2, 5}, {3}});

}  // namespace

TEST_CASE("counting bound on worked examples") {
    CHECK(s0(kFig2) == 2);  // 6 blocks 1 and 4 (once), 5 blocks 2
    CHECK(s0(Bay(3, 1, {{3, 2, 1}})) == 0);
    CHECK(s0(Bay(3, 1, {{1, 2, 3}})) == 2);
    CHECK(s0(Bay(2, 2, {{}, {}})) == 0);
}

TEST_CASE("s0 equals the pairwise definition on random bays") {
    Rng rng = make_rng(5);
    for (int i = 0; i < 500; ++i) {
        const Bay bay = gen::sparse_bay(5, 6, 1 + uniform_below(rng, 20), rng);
        CHECK(s0(bay) == oracle::blocking_count(bay));
    }
}

TEST_CASE("max of mins on the discard example") {
    CHECK(max_of_mins(kFig2) == 3);
    CHECK(max_of_mins(Bay(3, 3, {{4}, {2, 5}, {3}})) == 4);
    CHECK(max_of_mins(Bay(2, 1, {{5}})) == 5);
    CHECK_THROWS_AS(max_of_mins(Bay(2, 2, {{}, {}})), InvalidParams);
}

TEST_CASE("look-ahead bound on the worked example") {
    CHECK(s_p(kFig2, LookAheadDepth{0}) == 2);
    CHECK(s_p(kFig2, LookAheadDepth{1}) == 3);
    CHECK(s_p(kFig2, LookAheadDepth{2}) == 4);
    CHECK(s_p(kFig2, LookAheadDepth{3}) == 4);
    CHECK(s_p(kFig2, LookAheadDepth::full()) == 4);
}

TEST_CASE("p=0 reduces to the counting bound") {
    Rng rng = make_rng(6);
    for (int i = 0; i < 200; ++i) {
        const Bay bay = gen::sparse_bay(4, 5, 1 + uniform_below(rng, 14), rng);
        CHECK(s_p(bay, LookAheadDepth::counting()) == s0(bay));
    }
}

TEST_CASE("admissible on every 3x3 h=2 bay, any depth" * doctest::timeout(120)) {
    oracle::for_each_filled_bay(3, 3, 2, [](const Bay& bay) {
        const int opt = oracle::z_opt(bay);
        for (int p = 0; p <= 6; ++p) CHECK(s_p(bay, LookAheadDepth{p}) <= opt);
    });
}

TEST_CASE("admissible on sampled wider bays" * doctest::timeout(300)) {
    Rng rng = make_rng(17);
    for (int i = 0; i < 150; ++i) {
        InstanceSpec spec{3, 4 + uniform_below(rng, 2), 2, 0};
        const Bay bay = generate_uniform(spec, rng);
        const int opt = oracle::z_opt(bay);
        CHECK(s_p(bay, LookAheadDepth::full()) <= opt);
    }
}

TEST_CASE("monotone in depth and saturated at N-C") {
    Rng rng = make_rng(8);
    for (int i = 0; i < 300; ++i) {
        InstanceSpec spec{4, 5, 3, 0};
        const Bay bay = generate_uniform(spec, rng);
        const int n = bay.container_count();
        int prev = s_p(bay, LookAheadDepth{0});
        for (int p = 1; p <= n; ++p) {
            const int cur = s_p(bay, LookAheadDepth{p});
            CHECK(cur >= prev);
            prev = cur;
        }
        const int full = s_p(bay, LookAheadDepth::full());
        for (int p = n - bay.columns(); p <= n; ++p)
            CHECK(s_p(bay, LookAheadDepth{p}) == full);
    }
}

TEST_CASE("cumulative bounds match the tree figure") {
    CHECK(cumulative(s0(kFig2), 0) == 2);
    const Bay child = Bay(3, 3, {{4, 1}, {2, 5}, {3, 6}});
    CHECK(cumulative(s0(child), 1) == 3);
    CHECK(cumulative(0, 0) == 0);
}

TEST_CASE("path monotonicity of cumulative bounds") {
    Rng rng = make_rng(9);
    const std::vector<LookAheadDepth> depths = {LookAheadDepth{0}, LookAheadDepth{1},
                                                LookAheadDepth{2}, LookAheadDepth::full()};
    for (int i = 0; i < 400; ++i) {
        InstanceSpec spec{4, 5, 3, 0};
        const Bay start = generate_uniform(spec, rng);
        const auto states = gen::random_relocation_walk(start, 8, rng);
        for (const auto depth : depths) {
            for (size_t l = 1; l < states.size(); ++l) {
                const int parent = s_p(states[l - 1], depth) + static_cast<int>(l - 1);
                const int child = s_p(states[l], depth) + static_cast<int>(l);
                CHECK(child >= parent);
                // one-step bound on the local value
                CHECK(s_p(states[l], depth) >= s_p(states[l - 1], depth) - 1);
            }
        }
    }
}
