#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "decum/common.hpp"

namespace decum {

// Household status chain: Couple -> Single -> JustDied -> Dead. A couple
// becomes a single household when one spouse dies; both dying in the same
// year is ignored.
enum class FamilyStatus { Dead, JustDied, Single, Couple };

inline bool is_alive(FamilyStatus g) {
    return g == FamilyStatus::Single || g == FamilyStatus::Couple;
}

inline const char* to_string(FamilyStatus g) {
    switch (g) {
        case FamilyStatus::Dead: return "dead";
        case FamilyStatus::JustDied: return "just_died";
        case FamilyStatus::Single: return "single";
        case FamilyStatus::Couple: return "couple";
    }
    return "?";
}

// Utility parameters. Defaults are the calibrated point estimates the
// toolkit ships with.
struct UtilityParams {
    double gamma_single = -1.98;   // consumption/bequest risk aversion, singles
    double gamma_couple = -1.78;   // consumption risk aversion, couples
    double gamma_housing = -1.87;  // housing risk aversion
    double theta = 0.96;           // bequest altruism in [0,1)
    double bequest_a = 20726.0;    // luxury bequest threshold, dollars
    double cfloor_single = 10122.0;  // consumption floor, dollars/year
    double cfloor_couple = 15702.0;
    double psi = 1.18;             // health proxy slope, >= 1
    double lambda_housing = 0.044; // housing preference share in (0,1]
    double zeta_single = 1.0;      // household scale, fixed
    double zeta_couple = 1.3;

    double gamma(FamilyStatus d) const {
        return d == FamilyStatus::Couple ? gamma_couple : gamma_single;
    }
    double cfloor(FamilyStatus d) const {
        return d == FamilyStatus::Couple ? cfloor_couple : cfloor_single;
    }
    double zeta(FamilyStatus d) const {
        return d == FamilyStatus::Couple ? zeta_couple : zeta_single;
    }
};

// One side (single or couple) of the means-test parameterization.
struct PensionRates {
    double full_rate = 0.0;            // dollars/year
    double income_threshold = 0.0;     // dollars/year
    double income_taper = 0.5;         // per dollar of assessed income
    double asset_threshold_owner = 0.0;     // dollars
    double asset_threshold_renter = 0.0;    // dollars
    double asset_taper = 0.039;        // dollars/year per dollar of assets

    double asset_threshold(bool homeowner) const {
        return homeowner ? asset_threshold_owner : asset_threshold_renter;
    }
};

struct MinWithdrawalBand {
    int age_from = 0;  // inclusive
    double rate = 0.0;
};

struct PensionPolicy {
    PensionRates single{17456.0, 3692.0, 0.5, 178000.0, 307000.0, 0.039};
    PensionRates couple{26099.0, 6448.0, 0.5, 252500.0, 381500.0, 0.039};
    int eligibility_age = 65;
    // Allocated pension minimum drawdown schedule; empty disables the rule.
    std::vector<MinWithdrawalBand> min_withdrawals;

    const PensionRates& rates(FamilyStatus d) const {
        return d == FamilyStatus::Couple ? couple : single;
    }
};

inline std::vector<MinWithdrawalBand> default_min_withdrawal_schedule() {
    return {{0, 0.04}, {65, 0.05}, {75, 0.06}, {80, 0.07}, {85, 0.09}, {90, 0.11}, {95, 0.14}};
}

struct MarketParams {
    double mu = 0.056;        // mean real log-return of the risky asset, per year
    double sigma = 0.133;     // stdev of the real log-return, per year
    double risk_free = 0.005; // real risk-free log rate, per year
    // Optional per-age override of risk_free covering [retirement_age, terminal_age].
    std::vector<double> risk_free_schedule;
    double inflation = 0.029; // per year
    int retirement_age = 65;  // t0
    int terminal_age = 100;   // T, survival beyond deemed impossible

    double rate(int t) const {
        if (risk_free_schedule.empty()) return risk_free;
        const int i = std::clamp(t - retirement_age, 0,
                                 static_cast<int>(risk_free_schedule.size()) - 1);
        return risk_free_schedule[static_cast<std::size_t>(i)];
    }
    int horizon_years() const { return terminal_age - retirement_age; }
};

inline void validate(const UtilityParams& u, const PensionPolicy& p) {
    DECUM_REQUIRE(u.gamma_single < 0.0, InvalidInput, "gamma_single must be < 0, got %g", u.gamma_single);
    DECUM_REQUIRE(u.gamma_couple < 0.0, InvalidInput, "gamma_couple must be < 0, got %g", u.gamma_couple);
    DECUM_REQUIRE(u.gamma_housing < 0.0, InvalidInput, "gamma_housing must be < 0, got %g", u.gamma_housing);
    DECUM_REQUIRE(u.theta >= 0.0 && u.theta < 1.0, InvalidInput, "theta must be in [0,1), got %g", u.theta);
    DECUM_REQUIRE(u.bequest_a >= 0.0, InvalidInput, "bequest_a must be >= 0, got %g", u.bequest_a);
    DECUM_REQUIRE(u.psi >= 1.0, InvalidInput, "psi must be >= 1, got %g", u.psi);
    DECUM_REQUIRE(u.lambda_housing > 0.0 && u.lambda_housing <= 1.0, InvalidInput,
                  "lambda_housing must be in (0,1], got %g", u.lambda_housing);
    DECUM_REQUIRE(u.zeta_single == 1.0, InvalidInput, "zeta_single is fixed at 1");
    DECUM_REQUIRE(u.zeta_couple > 0.0, InvalidInput, "zeta_couple must be > 0, got %g", u.zeta_couple);
    DECUM_REQUIRE(u.cfloor_single >= 0.0 && u.cfloor_single <= p.single.full_rate, InvalidInput,
                  "cfloor_single must be in [0, %g], got %g", p.single.full_rate, u.cfloor_single);
    DECUM_REQUIRE(u.cfloor_couple >= 0.0 && u.cfloor_couple <= p.couple.full_rate, InvalidInput,
                  "cfloor_couple must be in [0, %g], got %g", p.couple.full_rate, u.cfloor_couple);
}

inline void validate(const PensionPolicy& p) {
    for (const auto* r : {&p.single, &p.couple}) {
        DECUM_REQUIRE(r->full_rate >= 0.0 && r->income_threshold >= 0.0 &&
                          r->asset_threshold_owner >= 0.0 && r->asset_threshold_renter >= 0.0,
                      InvalidInput, "pension thresholds and rates must be non-negative");
        DECUM_REQUIRE(r->income_taper > 0.0 && r->income_taper <= 1.0, InvalidInput,
                      "income taper must be in (0,1], got %g", r->income_taper);
        DECUM_REQUIRE(r->asset_taper > 0.0 && r->asset_taper <= 0.1, InvalidInput,
                      "asset taper must be in (0,0.1], got %g", r->asset_taper);
        DECUM_REQUIRE(r->asset_threshold_owner < r->asset_threshold_renter, InvalidInput,
                      "homeowner asset threshold must be below the non-homeowner one");
    }
    double prev = -1.0;
    for (const auto& b : p.min_withdrawals) {
        DECUM_REQUIRE(b.age_from > prev, InvalidInput, "min-withdrawal bands must have increasing ages");
        DECUM_REQUIRE(b.rate >= 0.0 && b.rate <= 1.0, InvalidInput, "min-withdrawal rate out of [0,1]");
        prev = b.age_from;
    }
}

inline void validate(const MarketParams& m) {
    DECUM_REQUIRE(m.sigma >= 0.0, InvalidInput, "sigma must be >= 0, got %g", m.sigma);
    DECUM_REQUIRE(m.terminal_age > m.retirement_age, InvalidInput,
                  "terminal_age must exceed retirement_age");
    DECUM_REQUIRE(std::isfinite(m.mu) && std::isfinite(m.risk_free) && std::isfinite(m.inflation),
                  InvalidInput, "market rates must be finite");
    if (!m.risk_free_schedule.empty())
        DECUM_REQUIRE(static_cast<int>(m.risk_free_schedule.size()) >= m.horizon_years() + 1,
                      InvalidInput, "risk_free_schedule must cover [retirement_age, terminal_age]");
}

// Everything that defines one problem instance.
struct ModelParams {
    UtilityParams utility;
    PensionPolicy pension;
    MarketParams market;

    void validate_all() const {
        validate(pension);
        validate(utility, pension);
        validate(market);
    }
};

}  // namespace decum
