#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "decum/common.hpp"
#include "decum/numerics/nelder_mead.hpp"

namespace decum {

struct ActionResult {
    double alpha = 0.0;
    double delta = 0.0;
    double value = 0.0;
};

struct ActionOptions {
    int seeds_per_dim = 16;  // coarse grid resolution per axis
    double x_tol = 1e-7;     // in units of one seed cell
    double f_tol = 1e-12;
    int max_iters = 250;
};

// Box-constrained maximizer for the per-state action problem. The objective
// may return -inf on inadmissible actions (consumption below the floor);
// those points are strictly dominated. A coarse seed grid guards against the
// kinks the means-test puts into the objective, then Nelder-Mead refines from
// the best seed with iterates clamped into the box.
inline ActionResult optimize_action(const std::function<double(double, double)>& objective,
                                    double alpha_lo, double alpha_hi,
                                    double delta_lo, double delta_hi,
                                    const ActionOptions& opts = {}) {
    DECUM_REQUIRE(alpha_lo <= alpha_hi && delta_lo <= delta_hi, InvalidInput,
                  "optimize_action: empty action box");

    const int m = std::max(opts.seeds_per_dim, 2);
    double best_a = alpha_lo, best_d = delta_lo;
    double best_v = neg_inf();
    for (int i = 0; i < m; ++i) {
        const double a = alpha_lo + (alpha_hi - alpha_lo) * i / (m - 1);
        for (int j = 0; j < m; ++j) {
            const double d = delta_lo + (delta_hi - delta_lo) * j / (m - 1);
            const double v = objective(a, d);
            if (v > best_v) {
                best_v = v;
                best_a = a;
                best_d = d;
            }
        }
    }
    DECUM_REQUIRE(std::isfinite(best_v), InfeasibleAction,
                  "optimize_action: objective is -inf over the whole action box");

    auto clamped_neg = [&](const std::vector<double>& x) {
        const double a = std::clamp(x[0], alpha_lo, alpha_hi);
        const double d = std::clamp(x[1], delta_lo, delta_hi);
        return -objective(a, d);
    };

    NelderMeadOptions nm;
    nm.x_tol = opts.x_tol;
    nm.f_tol = opts.f_tol;
    nm.max_iters = opts.max_iters;
    // Step on the scale of one seed cell so the refinement stays in the
    // seed's basin.
    nm.initial_step = 0.0;
    const double step_a = (alpha_hi - alpha_lo) / (m - 1);
    const double step_d = (delta_hi - delta_lo) / (m - 1);

    NelderMeadResult r;
    {
        // hand-rolled anisotropic start simplex via two nested solves is not
        // worth it; rescale coordinates instead so one step size fits both.
        auto scaled_neg = [&](const std::vector<double>& u) {
            std::vector<double> x{alpha_lo + u[0] * (step_a == 0.0 ? 1.0 : step_a),
                                  delta_lo + u[1] * (step_d == 0.0 ? 1.0 : step_d)};
            return clamped_neg(x);
        };
        std::vector<double> u0{step_a == 0.0 ? 0.0 : (best_a - alpha_lo) / step_a,
                               step_d == 0.0 ? 0.0 : (best_d - delta_lo) / step_d};
        NelderMeadOptions nm_u = nm;
        nm_u.initial_step = 0.5;  // half a seed cell in scaled units
        r = nelder_mead(scaled_neg, u0, nm_u);
        r.x = {alpha_lo + r.x[0] * (step_a == 0.0 ? 1.0 : step_a),
               delta_lo + r.x[1] * (step_d == 0.0 ? 1.0 : step_d)};
    }

    ActionResult out;
    const double ra = std::clamp(r.x[0], alpha_lo, alpha_hi);
    const double rd = std::clamp(r.x[1], delta_lo, delta_hi);
    const double rv = -r.value;
    if (rv >= best_v) {
        out.alpha = ra;
        out.delta = rd;
        out.value = rv;
    } else {
        out.alpha = best_a;
        out.delta = best_d;
        out.value = best_v;
    }
    return out;
}

}  // namespace decum
