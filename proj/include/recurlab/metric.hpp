#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Translation-invariant metric of the product topology on the sequence space:
//
//     d(x, y) = sum_{n>=1} 2^{-n} p_n(x-y) / (1 + p_n(x-y)),
//
// where p_n is the euclidean norm of the first n coordinates. Every summand is
// below 2^{-n}, so truncating after `terms` summands leaves a tail in
// [2^{-terms} p/(1+p), 2^{-terms}] with p the last partial norm. For finitely
// supported differences the partial norms stabilize once the support is covered
// and the tail collapses to its exact geometric value.

namespace recurlab {

struct MetricEnclosure {
    double lo = 0.0;
    double hi = 0.0;
    double mid() const { return 0.5 * (lo + hi); }
    double rad() const { return 0.5 * (hi - lo); }
};

inline MetricEnclosure product_metric(const std::vector<std::complex<double>>& x,
                                      const std::vector<std::complex<double>>& y,
                                      int terms) {
    if (terms < 1) throw std::invalid_argument("product_metric: terms must be >= 1");
    const std::size_t support = std::max(x.size(), y.size());
    double sumsq = 0.0;
    double acc = 0.0;
    double weight = 1.0;  // 2^{-n}
    double p = 0.0;
    for (int n = 1; n <= terms; ++n) {
        const std::size_t i = static_cast<std::size_t>(n) - 1;
        if (i < support) {
            const std::complex<double> xi = i < x.size() ? x[i] : 0.0;
            const std::complex<double> yi = i < y.size() ? y[i] : 0.0;
            sumsq += std::norm(xi - yi);
            p = std::sqrt(sumsq);
        }
        weight *= 0.5;
        acc += weight * p / (1.0 + p);
    }
    MetricEnclosure enc;
    if (static_cast<std::size_t>(terms) >= support) {
        // p_n constant beyond the truncation point: tail is exactly weight * p/(1+p).
        const double tail = weight * p / (1.0 + p);
        enc.lo = acc + tail;
        enc.hi = enc.lo;
    } else {
        enc.lo = acc + weight * p / (1.0 + p);  // p_n is nondecreasing
        enc.hi = acc + weight;                  // every summand < 2^{-n}
    }
    return enc;
}

}  // namespace recurlab
