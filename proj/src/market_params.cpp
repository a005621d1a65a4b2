#include "pinfi/market_params.hpp"

namespace pinfi {

MarketParams validate(const MarketParams& raw) {
    if (!(raw.alpha >= 0.0)) throw InvalidParameter("alpha", "must be >= 0");
    if (!(raw.beta >= 0.0)) throw InvalidParameter("beta", "must be >= 0");
    if (!(raw.gamma >= 0.0)) throw InvalidParameter("gamma", "must be >= 0");
    if (!(raw.delta >= 0.0)) throw InvalidParameter("delta", "must be >= 0");
    if (!(raw.theta > 0.0)) throw InvalidParameter("theta", "must be > 0");
    if (!(raw.fill_rate > 0.0 && raw.fill_rate < 1.0))
        throw InvalidParameter("fill_rate", "must be in the open interval (0,1)");
    if (!(raw.depth > 0.0)) throw InvalidParameter("depth", "must be > 0");
    if (!(raw.break_even() > 0.0))
        throw InvalidParameter("beta", "beta + p*theta must be > 0");
    return raw;
}

NormalizedParams normalize(const MarketParams& params) {
    const double s = params.break_even();
    const double ptheta = params.fill_rate * params.theta;
    return NormalizedParams{
        params.beta / s,
        (ptheta - params.delta) / s,
        (params.theta - params.delta) / s,
        1.0 / params.depth,
    };
}

double normalized_price(const MarketParams& params) {
    return params.alpha / params.break_even();
}

bool min_depth_ok(const MarketParams& params) {
    const double ptheta = params.fill_rate * params.theta;
    return params.depth >= 1.0 + params.beta / ptheta;
}

bool feasible_band(const MarketParams& params) {
    // beta + delta < (1 - p) * theta, evaluated as C > 1 so the verdict
    // always agrees with the normalized parameters
    return normalize(params).C > 1.0;
}

}  // namespace pinfi
