#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "decum/common.hpp"

namespace decum {

struct NelderMeadOptions {
    double x_tol = 1e-9;       // max vertex distance from best, per coordinate
    double f_tol = 1e-12;      // relative spread of simplex values
    int max_iters = 2000;      // reflect/expand/contract cycles
    double initial_step = 0.0; // 0 -> per-coordinate default below
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Downhill simplex minimization. Deterministic given (x0, opts). Non-finite
// objective values are treated as +inf (strictly dominated vertices).
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0,
                                    const NelderMeadOptions& opts = {}) {
    const std::size_t n = x0.size();
    DECUM_REQUIRE(n >= 1, InvalidInput, "nelder_mead: dimension must be >= 1");

    auto safe_f = [&](const std::vector<double>& x) {
        const double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    const double f0 = safe_f(x0);
    DECUM_REQUIRE(std::isfinite(f0), InvalidInput,
                  "nelder_mead: objective not finite at the start point");

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fv(n + 1);
    fv[0] = f0;
    for (std::size_t i = 0; i < n; ++i) {
        double step = opts.initial_step;
        if (step == 0.0) step = (x0[i] != 0.0) ? 0.05 * std::abs(x0[i]) : 0.00025;
        simplex[i + 1][i] += step;
        fv[i + 1] = safe_f(simplex[i + 1]);
    }

    // standard coefficients: reflection 1, expansion 2, contraction 1/2, shrink 1/2
    const double rho = 1.0, chi = 2.0, gam = 0.5, sig = 0.5;
    std::vector<std::size_t> ord(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);

    NelderMeadResult res;
    int iter = 0;
    for (; iter < opts.max_iters; ++iter) {
        for (std::size_t i = 0; i <= n; ++i) ord[i] = i;
        std::stable_sort(ord.begin(), ord.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = ord[0], worst = ord[n], second = ord[n - 1];

        double max_dx = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                max_dx = std::max(max_dx, std::abs(simplex[ord[i]][j] - simplex[best][j]));
        const double spread = fv[worst] - fv[best];
        if (max_dx <= opts.x_tol &&
            (!std::isfinite(spread) ? false
                                    : spread <= opts.f_tol * (std::abs(fv[best]) + opts.f_tol))) {
            res.converged = true;
            break;
        }

        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i <= n; ++i)
                if (i != worst) s += simplex[i][j];
            centroid[j] = s / static_cast<double>(n);
        }

        for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + rho * (centroid[j] - simplex[worst][j]);
        const double fr = safe_f(xr);

        if (fr < fv[best]) {
            for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + chi * (xr[j] - centroid[j]);
            const double fe = safe_f(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fv[worst] = fe;
            } else {
                simplex[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            simplex[worst] = xr;
            fv[worst] = fr;
        } else {
            if (fr < fv[worst]) {
                // outside contraction
                for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + gam * (xr[j] - centroid[j]);
                const double fc = safe_f(xc);
                if (fc <= fr) {
                    simplex[worst] = xc;
                    fv[worst] = fc;
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t j = 0; j < n; ++j)
                            simplex[ord[i]][j] = simplex[best][j] + sig * (simplex[ord[i]][j] - simplex[best][j]);
                        fv[ord[i]] = safe_f(simplex[ord[i]]);
                    }
                }
            } else {
                // inside contraction
                for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] - gam * (centroid[j] - simplex[worst][j]);
                const double fc = safe_f(xc);
                if (fc < fv[worst]) {
                    simplex[worst] = xc;
                    fv[worst] = fc;
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t j = 0; j < n; ++j)
                            simplex[ord[i]][j] = simplex[best][j] + sig * (simplex[ord[i]][j] - simplex[best][j]);
                        fv[ord[i]] = safe_f(simplex[ord[i]]);
                    }
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = simplex[best];
    res.value = fv[best];
    res.iterations = iter;
    return res;
}

}  // namespace decum
