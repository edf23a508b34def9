#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "decum/common.hpp"

namespace decum {

// Gauss-Hermite rule for integrals against e^{-x^2}: exact for polynomials
// up to degree 2*order - 1.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order = 0;
};

namespace detail {

// Implicit-shift QL sweep over a symmetric tridiagonal matrix, tracking only
// the first component of each eigenvector (all that Golub-Welsch needs).
// diag/off are overwritten; z starts as e_1.
inline void tridiag_ql(std::vector<double>& diag, std::vector<double>& off,
                       std::vector<double>& z) {
    const std::size_t n = diag.size();
    if (n == 1) return;
    off.push_back(0.0);
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                DECUM_REQUIRE(++iter <= 60, ModelError,
                              "tridiag_ql: no convergence after 60 iterations");
                double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * off[i];
                    const double b = c * off[i];
                    r = std::hypot(f, g);
                    off[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        off[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (underflow) continue;
                diag[l] -= p;
                off[l] = g;
                off[m] = 0.0;
            }
        } while (m != l);
    }
    off.pop_back();
}

}  // namespace detail

inline Quadrature gauss_hermite(int order) {
    DECUM_REQUIRE(order >= 1 && order <= 64, InvalidInput,
                  "gauss_hermite: order must be in [1, 64], got %d", order);
    const std::size_t n = static_cast<std::size_t>(order);
    const double mu0 = std::sqrt(std::numbers::pi);

    // Jacobi matrix of the (physicists') Hermite recurrence: zero diagonal,
    // off-diagonal sqrt(i/2).
    std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0), z(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) off[i - 1] = std::sqrt(0.5 * static_cast<double>(i));
    z[0] = 1.0;
    detail::tridiag_ql(diag, off, z);

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

    Quadrature q;
    q.order = order;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        q.nodes[i] = diag[idx[i]];
        q.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    // Enforce the exact symmetry of the rule: pair up mirrored nodes.
    for (std::size_t i = 0, j = n - 1; i < j; ++i, --j) {
        const double x = 0.5 * (q.nodes[j] - q.nodes[i]);
        q.nodes[i] = -x;
        q.nodes[j] = x;
        const double w = 0.5 * (q.weights[i] + q.weights[j]);
        q.weights[i] = q.weights[j] = w;
    }
    if (n % 2 == 1) q.nodes[n / 2] = 0.0;
    return q;
}

// E[f(Z)] for Z ~ Normal(mu, sigma^2) via the substitution z = sqrt(2)*sigma*x + mu:
//   E[f(Z)] = sum_i w_i/sqrt(pi) * f(sqrt(2)*sigma*x_i + mu).
template <typename F>
double expect_over_return(F&& f, double mu, double sigma, const Quadrature& quad) {
    DECUM_REQUIRE(sigma >= 0.0, InvalidInput, "expect_over_return: sigma must be >= 0");
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    const double scale = std::numbers::sqrt2 * sigma;
    double acc = 0.0;
    for (std::size_t i = 0; i < quad.nodes.size(); ++i)
        acc += quad.weights[i] * inv_sqrt_pi * f(scale * quad.nodes[i] + mu);
    return acc;
}

}  // namespace decum
