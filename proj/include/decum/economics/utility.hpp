#pragma once

#include <cmath>

#include "decum/common.hpp"
#include "decum/economics/params.hpp"

namespace decum {

// HARA utility of consumption above the floor, down-weighted with age by the
// health proxy:  U_C = psi^-(t-t0) / gamma_d * ((C - cfloor_d)/zeta_d)^gamma_d.
// Consumption at or below the floor returns -inf, which the optimizers treat
// as an inadmissible action.
inline double consumption_utility(double c, FamilyStatus d, int t,
                                  const UtilityParams& u, int retirement_age) {
    const double excess = c - u.cfloor(d);
    if (excess <= 0.0) return neg_inf();
    const double gamma = u.gamma(d);
    const double base = std::pow(excess / u.zeta(d), gamma) / gamma;
    return base / std::pow(u.psi, static_cast<double>(t - retirement_age));
}

// Luxury bequest: zero motive below threshold a, constant marginal utility
// a^(gamma-1) in the theta -> 1 limit. Uses the single-household risk
// aversion for every status.
inline double bequest_utility(double w, const UtilityParams& u) {
    DECUM_REQUIRE(w >= 0.0, InvalidInput, "bequest_utility: wealth must be >= 0, got %g", w);
    if (u.theta == 0.0) return 0.0;
    const double gamma = u.gamma_single;
    const double odds = u.theta / (1.0 - u.theta);
    const double shifted = odds * u.bequest_a + w;
    if (shifted <= 0.0) return neg_inf();  // only reachable at a = 0, w = 0
    return std::pow(odds, 1.0 - gamma) * std::pow(shifted, gamma) / gamma;
}

// Utility flow from owning the family home:  U_H = (lambda*H/zeta_d)^gamma_H / gamma_H.
inline double housing_utility(double house_value, FamilyStatus d, const UtilityParams& u) {
    DECUM_REQUIRE(house_value > 0.0, InvalidInput,
                  "housing_utility: house value must be > 0 (renters contribute no housing term)");
    return std::pow(u.lambda_housing * house_value / u.zeta(d), u.gamma_housing) / u.gamma_housing;
}

// Subjective discounting between ages: beta_{t,t2} = exp(-sum_{i=t}^{t2-1} r_i),
// so beta_{t,t} = 1 and the factor is multiplicative across split horizons.
inline double discount(int t, int t2, const MarketParams& market) {
    DECUM_REQUIRE(t <= t2, InvalidInput, "discount: t must be <= t2");
    double s = 0.0;
    for (int i = t; i < t2; ++i) s += market.rate(i);
    return std::exp(-s);
}

// Per-period reward. Alive households receive consumption utility plus the
// housing flow when they own a home; a household that died this period is
// rewarded with the bequest of its wealth; dead contributes nothing.
inline double reward(double w, FamilyStatus g, double c, double house_value, int t,
                     const UtilityParams& u, int retirement_age) {
    switch (g) {
        case FamilyStatus::Dead:
            return 0.0;
        case FamilyStatus::JustDied:
            return bequest_utility(w, u);
        case FamilyStatus::Single:
        case FamilyStatus::Couple: {
            double r = consumption_utility(c, g, t, u, retirement_age);
            if (house_value > 0.0) r += housing_utility(house_value, g, u);
            return r;
        }
    }
    return 0.0;
}

// Terminal reward at t = T: everything left is bequeathed unless already dead.
inline double terminal_reward(double w, FamilyStatus g, const UtilityParams& u) {
    return g == FamilyStatus::Dead ? 0.0 : bequest_utility(w, u);
}

}  // namespace decum
