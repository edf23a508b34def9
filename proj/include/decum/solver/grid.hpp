#pragma once

#include <cmath>
#include <vector>

#include "decum/common.hpp"
#include "decum/economics/params.hpp"

namespace decum {

// Log-equidistant wealth grid from $1 to a conservative upper bound driven by
// the largest observed wealth and the risky-return distribution:
//   W_k = Wmax_data * exp((T - t0)*mu + 5*sqrt(T - t0)*sigma).
struct WealthGrid {
    std::vector<double> nodes;
    double wmax_data = 0.0;

    std::size_t size() const { return nodes.size(); }
    double bottom() const { return nodes.front(); }
    double top() const { return nodes.back(); }
};

inline WealthGrid build_grid(const MarketParams& market, double wmax_data, int k) {
    DECUM_REQUIRE(wmax_data >= 1.0, InvalidInput, "build_grid: wmax_data must be >= $1");
    DECUM_REQUIRE(k >= 16, InvalidInput, "build_grid: need at least 16 intervals, got %d", k);
    const double years = static_cast<double>(market.horizon_years());
    const double top = wmax_data * std::exp(years * market.mu + 5.0 * std::sqrt(years) * market.sigma);

    WealthGrid g;
    g.wmax_data = wmax_data;
    g.nodes.resize(static_cast<std::size_t>(k) + 1);
    const double log_top = std::log(top);
    for (int j = 0; j <= k; ++j)
        g.nodes[static_cast<std::size_t>(j)] = std::exp(log_top * j / k);
    g.nodes.front() = 1.0;  // exact bottom: log(1) = 0
    g.nodes.back() = top;
    return g;
}

// One-year wealth update: withdraw alpha*w, split the remainder between the
// risky asset (log-return z) and the risk-free account (log rate r).
inline double wealth_transition(double w, double alpha, double delta, double z, double r) {
    return (w - alpha * w) * (delta * std::exp(z) + (1.0 - delta) * std::exp(r));
}

}  // namespace decum
