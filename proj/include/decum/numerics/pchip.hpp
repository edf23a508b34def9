#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "decum/common.hpp"

namespace decum {

// Shape-preserving piecewise cubic Hermite interpolant. Monotone data stays
// monotone between nodes and interpolated values never overshoot the
// neighboring node values, which is what makes it safe for value functions.
struct Interpolant {
    std::vector<double> xs;  // strictly increasing abscissae
    std::vector<double> ys;  // values at abscissae
    std::vector<double> ds;  // first derivative of the interpolant per node

    std::size_t size() const { return xs.size(); }
    double x_min() const { return xs.front(); }
    double x_max() const { return xs.back(); }
};

namespace detail {

// Three-point one-sided slope estimate for a boundary node, clamped so the
// interpolant cannot overshoot the first/last interval (Fritsch-style end
// condition; h0/h1 are the two adjacent spacings, del0/del1 the secants,
// del0 being the one next to the boundary).
inline double pchip_end_slope(double h0, double h1, double del0, double del1) {
    double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if (d * del0 <= 0.0) {
        d = 0.0;
    } else if (del0 * del1 < 0.0 && std::abs(d) > 3.0 * std::abs(del0)) {
        d = 3.0 * del0;
    }
    return d;
}

}  // namespace detail

inline Interpolant build_pchip(std::vector<double> xs, std::vector<double> ys) {
    const std::size_t n = xs.size();
    DECUM_REQUIRE(n >= 2, InvalidInput, "build_pchip: need at least 2 nodes, got %zu", n);
    DECUM_REQUIRE(n == ys.size(), InvalidInput,
                  "build_pchip: xs/ys length mismatch (%zu vs %zu)", n, ys.size());
    for (std::size_t k = 0; k + 1 < n; ++k)
        DECUM_REQUIRE(xs[k] < xs[k + 1], InvalidInput,
                      "build_pchip: xs not strictly increasing at index %zu", k);
    for (double y : ys)
        DECUM_REQUIRE(std::isfinite(y), InvalidInput, "build_pchip: non-finite value");

    std::vector<double> h(n - 1), del(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = xs[k + 1] - xs[k];
        del[k] = (ys[k + 1] - ys[k]) / h[k];
    }

    std::vector<double> d(n, 0.0);
    if (n == 2) {
        d[0] = d[1] = del[0];
    } else {
        // Interior slopes: zero where the secants change sign or vanish,
        // otherwise the weighted harmonic mean
        //   (w1 + w2)/d_k = w1/del_{k-1} + w2/del_k,
        //   w1 = 2 h_k + h_{k-1},  w2 = h_k + 2 h_{k-1}.
        for (std::size_t k = 1; k + 1 < n; ++k) {
            if (del[k - 1] * del[k] <= 0.0) {
                d[k] = 0.0;
            } else {
                const double w1 = 2.0 * h[k] + h[k - 1];
                const double w2 = h[k] + 2.0 * h[k - 1];
                d[k] = (w1 + w2) / (w1 / del[k - 1] + w2 / del[k]);
            }
        }
        d[0] = detail::pchip_end_slope(h[0], h[1], del[0], del[1]);
        d[n - 1] = detail::pchip_end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
    }

    return Interpolant{std::move(xs), std::move(ys), std::move(d)};
}

namespace detail {

inline double pchip_eval_segment(const Interpolant& f, std::size_t k, double x) {
    const double h = f.xs[k + 1] - f.xs[k];
    const double s = x - f.xs[k];
    const double s2 = s * s;
    const double h2 = h * h;
    // Cubic Hermite basis on [x_k, x_{k+1}] matching values and slopes.
    const double a = (3.0 * h * s2 - 2.0 * s2 * s) / (h2 * h);
    return a * f.ys[k + 1] + (1.0 - a) * f.ys[k]
         + (s2 * (s - h)) / h2 * f.ds[k + 1]
         + (s * (s - h) * (s - h)) / h2 * f.ds[k];
}

inline std::size_t pchip_segment(const Interpolant& f, double x) {
    // upper_bound never returns begin() here because x >= xs.front().
    auto it = std::upper_bound(f.xs.begin(), f.xs.end(), x);
    std::size_t k = static_cast<std::size_t>(it - f.xs.begin());
    if (k == f.xs.size()) --k;  // x == xs.back()
    return k - 1;
}

}  // namespace detail

inline double eval_pchip(const Interpolant& f, double x) {
    DECUM_REQUIRE(x >= f.x_min() && x <= f.x_max(), OutOfRange,
                  "eval_pchip: x=%g outside [%g, %g]", x, f.x_min(), f.x_max());
    return detail::pchip_eval_segment(f, detail::pchip_segment(f, x), x);
}

// Evaluation with the argument clamped to the node range. The solver's
// continuation values use this: the grid bottom is the $1 wealth floor and
// the top is built conservative enough that clamping there is immaterial.
inline double eval_pchip_clamped(const Interpolant& f, double x) {
    x = std::clamp(x, f.x_min(), f.x_max());
    return detail::pchip_eval_segment(f, detail::pchip_segment(f, x), x);
}

}  // namespace decum
