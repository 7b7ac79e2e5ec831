#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace fringelab {

// n equally spaced values covering [lo, hi] inclusive.
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> out(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
    out.back() = hi;
    return out;
}

inline bool strictly_increasing(std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

// Trapezoidal integral of y over the (possibly nonuniform) grid x.
inline double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("trapezoid: mismatched or too-short inputs");
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return acc;
}

// Trapezoid quadrature weight of sample i on grid x.
inline double trapezoid_weight(std::span<const double> x, std::size_t i) {
    const std::size_t n = x.size();
    if (i == 0) return 0.5 * (x[1] - x[0]);
    if (i == n - 1) return 0.5 * (x[n - 1] - x[n - 2]);
    return 0.5 * (x[i + 1] - x[i - 1]);
}

// sin(x)/x with the removable singularity filled in.
inline double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

struct MeanStderr {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
};

// Sample mean and standard error (unbiased variance / sqrt(n)).
inline MeanStderr mean_stderr(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("mean_stderr: empty sample");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    if (n == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double var = ss / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace fringelab
