#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "crp/analysis.hpp"
#include "crp/bounds.hpp"
#include "crp/stats.hpp"
#include "oracle.hpp"

using namespace crp;

namespace {

// distribution of blocking counts over all h! orderings of one column
std::vector<double> block_dist_enumerated(int h) {
    std::vector<int> perm(h);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<long> count(h, 0);
    long total = 0;
    do {
        int blocking = 0;
        for (int t = 0; t < h; ++t) {
            bool blocks = false;
            for (int u = 0; u < t; ++u) blocks |= perm[u] < perm[t];
            blocking += blocks ? 1 : 0;
        }
        ++count[blocking];
        ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<double> p(h);
    for (int k = 0; k < h; ++k) p[k] = static_cast<double>(count[k]) / total;
    return p;
}

}  // namespace

TEST_CASE("blocking distribution matches enumeration for h <= 6") {
    for (int h = 1; h <= 6; ++h) {
        const auto dist = block_dist(h);
        const auto expect = block_dist_enumerated(h);
        REQUIRE(dist.p.size() == expect.size());
        double sum = 0.0;
        for (size_t k = 0; k < dist.p.size(); ++k) {
            CHECK(dist.p[k] == doctest::Approx(expect[k]).epsilon(1e-12));
            sum += dist.p[k];
        }
        CHECK(sum == doctest::Approx(1.0));
        // p_{0,h} = 1/h!
        double fact = 1.0;
        for (int i = 2; i <= h; ++i) fact *= i;
        CHECK(dist.p[0] == doctest::Approx(1.0 / fact));
    }
}

TEST_CASE("expected blocking per column") {
    CHECK(alpha(1) == doctest::Approx(0.0));
    CHECK(alpha(2) == doctest::Approx(0.5));
    CHECK(alpha(3) == doctest::Approx(7.0 / 6));
    const auto d3 = block_dist(3);
    CHECK(d3.p[0] == doctest::Approx(1.0 / 6));
    CHECK(d3.p[1] == doctest::Approx(0.5));
    CHECK(d3.p[2] == doctest::Approx(1.0 / 3));
}

TEST_CASE("monte carlo mean of s0 tracks alpha_h * C" * doctest::timeout(300)) {
    Rng rng = make_rng(61);
    InstanceSpec spec{4, 7, 3, 0};
    RunningStat stat;
    for (int i = 0; i < 100000; ++i) stat.add(s0(generate_uniform(spec, rng)));
    const double expect = alpha(3) * 7;
    CHECK(std::abs(stat.mean - expect) < 3 * stat.stderr_mean());
}

TEST_CASE("theta closed form") {
    CHECK(theta(1) == doctest::Approx(1.0 / 8));
    CHECK(theta(3) == doctest::Approx((1.0 / 24) * std::pow(1.0 / 6, 6)));
}

TEST_CASE("f(C) decreases to one") {
    const double g = 1.0;
    double prev = f_of_c(3, 4, 4, g);
    for (int c = 8; c <= 4096; c *= 2) {
        const double cur = f_of_c(3, 4, c, g);
        CHECK(cur < prev);
        CHECK(cur >= 1.0);
        prev = cur;
    }
    CHECK_THROWS_AS(f_of_c(3, 4, 3, g), InvalidParams);
}

TEST_CASE("exact g for h=2, C=3 agrees with the brute-force enumeration" *
          doctest::timeout(300)) {
    Rng rng = make_rng(62);
    GEstimateConfig cfg;
    const auto est = estimate_g(2, 3, 3, cfg, rng);
    CHECK(est.exact);
    CHECK(est.samples == 720);
    double total = 0.0;
    long count = 0;
    oracle::for_each_filled_bay(3, 3, 2, [&](const Bay& bay) {
        total += oracle::z_opt(bay);
        ++count;
    });
    const double expect = total / count - alpha(2) * 3;
    CHECK(est.mean == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("proxy estimate dominates the exact one") {
    Rng rng1 = make_rng(63), rng2 = make_rng(63);
    GEstimateConfig exact_cfg;
    exact_cfg.samples = 400;
    exact_cfg.exact_enumeration_guard = 1;  // force monte carlo
    GEstimateConfig proxy_cfg = exact_cfg;
    proxy_cfg.use_upper_proxy = true;
    const auto g_opt = estimate_g(3, 4, 5, exact_cfg, rng1);
    const auto g_proxy = estimate_g(3, 4, 5, proxy_cfg, rng2);
    CHECK(!g_opt.upper_proxy);
    CHECK(g_proxy.upper_proxy);
    CHECK(g_proxy.mean >= g_opt.mean);  // z_H >= z_opt on the same instances
}

TEST_CASE("special columns: h=1 makes every column special") {
    Rng rng = make_rng(64);
    const auto r = special_column_check(1, 5, 2000, rng);
    CHECK(r.p_no_special == 0.0);
}

TEST_CASE("special-column probability respects the bound and shrinks with C" *
          doctest::timeout(300)) {
    Rng rng = make_rng(65);
    const auto r5 = special_column_check(2, 5, 100000, rng);
    CHECK(r5.p_no_special <= r5.bound + 3 * r5.sigma);
    const auto r10 = special_column_check(2, 10, 100000, rng);
    CHECK(r10.p_no_special <= r10.bound + 3 * r10.sigma);
    CHECK(r10.p_no_special < r5.p_no_special);
}

TEST_CASE("convergence experiment: sandwich and trend" * doctest::timeout(600)) {
    const auto result = convergence_experiment(3, 4, {5, 10, 20}, 4000, 77, 2);
    REQUIRE(result.rows.size() == 3);
    for (const auto& row : result.rows) {
        CHECK(row.ratio >= 1.0);  // z_H >= z_opt >= S0
        CHECK(row.mean_s0 == doctest::Approx(alpha(3) * row.columns).epsilon(0.05));
    }
    CHECK(result.rows[2].ratio < result.rows[0].ratio);
    CHECK(result.fit.c > 0.0);
}
