#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "errors.hpp"

namespace echotrace {

// Logistic activation, computed from exp of a negative magnitude so large
// pre-activations saturate instead of overflowing. Deep negative inputs are
// floored at the smallest normal double to keep the result inside (0,1).
inline double sigmoid(double x) {
    double p;
    if (x >= 0.0) {
        p = 1.0 / (1.0 + std::exp(-x));
    } else {
        double e = std::exp(x);
        p = e / (1.0 + e);
    }
    return p > 0.0 ? p : std::numeric_limits<double>::min();
}

// log(1 + exp(x)) without overflow
inline double softplus(double x) {
    double m = x > 0.0 ? x : 0.0;
    return m + std::log1p(std::exp(-std::abs(x)));
}

inline double rms_diff(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw domain_error("rms_diff: length mismatch");
    }
    if (a.empty()) {
        throw domain_error("rms_diff: empty input");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

} // namespace echotrace
