#pragma once

#include "pinfi/errors.hpp"

namespace pinfi {

/// Raw economic parameters of a pool. Monetary rates are USD per power*hour,
/// depth is power*hours.
struct MarketParams {
    double alpha = 0.0;      ///< initial pool exchange rate
    double beta = 0.0;       ///< total seller fee (staking + exchange)
    double gamma = 0.0;      ///< LP block reward rate
    double delta = 0.0;      ///< buyer exchange fee
    double theta = 0.0;      ///< external service cost
    double fill_rate = 0.0;  ///< external fill rate p, in (0,1)
    double depth = 0.0;      ///< pool depth N, held constant (quasi-static)

    /// Seller break-even price beta + p*theta; the unit of normalized prices.
    double break_even() const { return beta + fill_rate * theta; }
};

/// Dimensionless parameter vector (A, B, C, 1/N).
struct NormalizedParams {
    double A = 0.0;          ///< beta/(beta + p*theta)
    double B = 0.0;          ///< (p*theta - delta)/(beta + p*theta)
    double C = 0.0;          ///< (theta - delta)/(beta + p*theta)
    double inv_depth = 0.0;  ///< 1/N
};

/// Strict-fail validation; returns the params unchanged or throws
/// InvalidParameter for the first violated invariant. Never clamps.
MarketParams validate(const MarketParams& raw);

NormalizedParams normalize(const MarketParams& params);

/// Pool price in units of the seller break-even price, x = alpha/(beta + p*theta).
double normalized_price(const MarketParams& params);

/// Minimum depth criterion N >= 1 + beta/(p*theta).
bool min_depth_ok(const MarketParams& params);

/// True iff beta + delta < (1-p)*theta, i.e. the open price band
/// (beta + p*theta, theta - delta) is nonempty (equivalently C > 1).
bool feasible_band(const MarketParams& params);

}  // namespace pinfi
