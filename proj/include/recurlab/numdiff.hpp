#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

// Derivatives at 0 of a function analytic on a neighborhood of the closed
// sampling circle, by the discrete Cauchy integral
//     f^(k)(0) ~ k! / (M r^k) * sum_j f(r w^j) w^{-jk},  w = e^{2 pi i / M}.
// This is a trigonometric finite-difference stencil: truncation error decays
// like (r / R)^M for a function analytic up to radius R, and roundoff grows
// only like k! / r^k, so moderate k at r = 1/2 keeps double precision nearly
// intact where axis-direction central differences would have lost six digits.

namespace recurlab::numdiff {

template <typename F>
std::complex<double> cauchy_derivative(F&& fn, int k, double radius = 0.5, int samples = 64) {
    if (k < 0) throw std::invalid_argument("cauchy_derivative: k must be >= 0");
    if (!(radius > 0.0)) throw std::invalid_argument("cauchy_derivative: radius must be > 0");
    if (samples <= k) throw std::invalid_argument("cauchy_derivative: need more samples than k");
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < samples; ++j) {
        const double ang = two_pi * j / samples;
        const std::complex<double> z = std::polar(radius, ang);
        acc += fn(z) * std::polar(1.0, -ang * k);
    }
    double kfact = 1.0;
    for (int t = 2; t <= k; ++t) kfact *= t;
    return acc * kfact / (samples * std::pow(radius, k));
}

}  // namespace recurlab::numdiff
