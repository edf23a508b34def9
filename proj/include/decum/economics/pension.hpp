#pragma once

#include <algorithm>
#include <cmath>

#include "decum/common.hpp"
#include "decum/economics/mortality.hpp"
#include "decum/economics/params.hpp"

namespace decum {

// Annual income-test deduction for an allocated pension account:
//   M(t) = W_{t0} / e_{t0} * (1 + inflation)^(t0 - t),
// where e_{t0} is the curtate life expectancy at retirement for status d.
// In real terms the deduction shrinks with age.
inline double income_deduction(double wealth_at_retirement, int t, FamilyStatus d,
                               const MortalityTable& tables, const MarketParams& market) {
    DECUM_REQUIRE(t >= market.retirement_age, InvalidInput,
                  "income_deduction: age %d before retirement age %d", t, market.retirement_age);
    const double e0 = tables.life_expectancy(d, market.retirement_age);
    DECUM_REQUIRE(e0 > 0.0, InvalidInput, "income_deduction: zero life expectancy at retirement");
    return wealth_at_retirement / e0 *
           std::pow(1.0 + market.inflation, static_cast<double>(market.retirement_age - t));
}

struct PensionBreakdown {
    double asset_test = 0.0;   // P_A before clamping
    double income_test = 0.0;  // P_I before clamping
    double payment = 0.0;      // final clamped pension
};

// Means-tested Age Pension:
//   P = max(0, min(P_max, min(P_A(W), P_I(alpha*W, t)))),
//   P_A = P_max - (W - L_A^{d,h}) * taper_A,
//   P_I = P_max - (alpha*W - M(t) - L_I^d) * taper_I.
// Below the eligibility age the payment is zero.
inline PensionBreakdown age_pension_breakdown(double alpha, double w, int t, FamilyStatus d,
                                              bool homeowner, double deduction,
                                              const PensionPolicy& policy) {
    DECUM_REQUIRE(w >= 0.0, InvalidInput, "age_pension: wealth must be >= 0, got %g", w);
    const PensionRates& r = policy.rates(d);
    PensionBreakdown b;
    b.asset_test = r.full_rate - (w - r.asset_threshold(homeowner)) * r.asset_taper;
    b.income_test = r.full_rate - (alpha * w - deduction - r.income_threshold) * r.income_taper;
    if (t < policy.eligibility_age) {
        b.payment = 0.0;
    } else {
        b.payment = std::max(0.0, std::min(r.full_rate, std::min(b.asset_test, b.income_test)));
    }
    return b;
}

inline double age_pension(double alpha, double w, int t, FamilyStatus d, bool homeowner,
                          double deduction, const PensionPolicy& policy) {
    return age_pension_breakdown(alpha, w, t, d, homeowner, deduction, policy).payment;
}

// Age-banded minimum drawdown rate; 0 when the schedule is disabled.
inline double min_withdrawal_rate(int age, const PensionPolicy& policy) {
    double rate = 0.0;
    for (const auto& band : policy.min_withdrawals) {
        if (age >= band.age_from) rate = band.rate;
    }
    return rate;
}

}  // namespace decum
