#pragma once

#include <cmath>
#include <cstdint>

namespace crp {

/// Streaming mean/variance accumulator (Welford).
struct RunningStat {
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }
    double stderr_mean() const { return n > 0 ? stddev() / std::sqrt(static_cast<double>(n)) : 0.0; }
    double ci95() const { return 1.96 * stderr_mean(); }
};

/// 3-sigma band half-width for a binomial proportion estimate.
inline double binomial_3sigma(double p, std::int64_t n) {
    if (n <= 0) return 0.0;
    return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace crp
