#include "pinfi/analytics.hpp"

#include <cmath>

namespace pinfi {

namespace {

constexpr double kSeriesWindow = 1e-6;
constexpr double kBisectTol = 1e-10;

// (x - 1)/ln x with the removable singularity at x = 1 expanded as
// 1 + u/2 - u^2/12, u = x - 1; avoids cancellation near the pivot.
double ratio_to_log(double x) {
    const double u = x - 1.0;
    if (std::abs(u) < kSeriesWindow) return 1.0 + 0.5 * u - u * u / 12.0;
    return u / std::log(x);
}

// (B - x)/ln(B/x) with the x = B singularity expanded in s = 1 - x/B.
double ratio_to_log_at(double x, double B) {
    const double s = 1.0 - x / B;
    if (std::abs(B - x) < kSeriesWindow) return B * (1.0 - 0.5 * s - s * s / 12.0);
    return (B - x) / std::log(B / x);
}

}  // namespace

double price_decay(double t, const MarketParams& params) {
    return params.alpha * std::exp(-t / params.depth);
}

double price_growth(double t, const MarketParams& params) {
    return params.alpha * std::exp(t / params.depth);
}

double ss_cessation_time(const MarketParams& params) {
    const double s = params.break_even();
    if (params.alpha < s) throw NoArbitrage("alpha below seller break-even beta + p*theta");
    return params.depth * std::log(params.alpha / s);
}

double sb_cessation_time(const MarketParams& params) {
    const double target = params.fill_rate * params.theta - params.delta;
    if (params.alpha > target) throw NoArbitrage("alpha above buyer resale value p*theta - delta");
    return params.depth * std::log(target / params.alpha);
}

double ss_gain(const MarketParams& params) {
    const double s = params.break_even();
    const double x = params.alpha / s;
    if (x < 1.0) throw NoArbitrage("alpha below seller break-even beta + p*theta");
    const double A = params.beta / s;
    // (x - 1) - A ln x via log1p keeps the profit accurate near break-even
    const double u = x - 1.0;
    return params.depth * s * (u - A * std::log1p(u));
}

double lp_gain_vs_ss(const MarketParams& params) {
    const GainReport r = ss_gain_report(params);
    return r.lp_gain;
}

double lp_rational_gain(const MarketParams& params) {
    const double T = sb_cessation_time(params);
    return params.fill_rate * params.theta * params.depth * T;
}

double lp_gain_vs_sb(const MarketParams& params) {
    const GainReport r = sb_gain_report(params);
    return r.lp_gain;
}

GainReport ss_gain_report(const MarketParams& params) {
    GainReport r;
    r.cessation_time = ss_cessation_time(params);
    r.seller_gain = ss_gain(params);
    r.reward_accrual = params.gamma * params.depth * r.cessation_time;
    r.impermanent_loss = (params.break_even() - params.alpha) * params.depth;
    r.lp_gain = r.reward_accrual + r.impermanent_loss;
    r.lp_rational_gain = 0.0;  // external-sale alternative applies to the buy-side episode
    return r;
}

GainReport sb_gain_report(const MarketParams& params) {
    GainReport r;
    r.cessation_time = sb_cessation_time(params);
    const double target = params.fill_rate * params.theta - params.delta;
    r.seller_gain = 0.0;
    r.reward_accrual = params.gamma * params.depth * r.cessation_time;
    r.impermanent_loss = (target - params.alpha) * params.depth;
    r.lp_gain = r.reward_accrual + r.impermanent_loss;
    r.lp_rational_gain =
        params.fill_rate * params.theta * params.depth * r.cessation_time;
    return r;
}

double ss_equilibrium_reward(double x, double A, double inv_depth) {
    // The series window extends marginally below the pivot so both one-sided
    // limits at x = 1 evaluate to the same value.
    if (!(x >= 1.0 - kSeriesWindow)) throw DomainError("ss_equilibrium_reward requires x >= 1");
    return (1.0 + inv_depth) * ratio_to_log(x) - A;
}

double sb_equilibrium_reward(double x, double A, double B, double inv_depth) {
    if (!(x > 0.0)) throw DomainError("sb_equilibrium_reward requires x > 0");
    if (x > B + kSeriesWindow) throw DomainError("sb_equilibrium_reward requires x <= B");
    return (1.0 - A) - inv_depth * ratio_to_log_at(x, B);
}

double sb_limit_reward_stated(double A, double inv_depth) {
    return 1.0 - A - inv_depth;
}

double normalized_profit_sl(double x, double A) {
    if (!(x > 0.0)) throw DomainError("normalized_profit_sl requires x > 0");
    if (x < 1.0) return 0.0;
    const double u = x - 1.0;
    return u - A * std::log1p(u);
}

double normalized_profit_bl(double x, double A, double B) {
    if (!(x > 0.0)) throw DomainError("normalized_profit_bl requires x > 0");
    if (x >= B) return 0.0;
    return (1.0 - A) * std::log(B / x);
}

RewardRange reward_bounds(const NormalizedParams& normalized) {
    if (!(normalized.C > 1.0)) throw InfeasibleBand{};
    // N >= 1 + beta/(p*theta) in dimensionless form: 1/N <= 1 - A.
    if (!(normalized.inv_depth <= 1.0 - normalized.A)) throw InsufficientDepth{};
    RewardRange range;
    range.lower = 1.0 + normalized.inv_depth - normalized.A;
    range.upper = (1.0 + normalized.inv_depth) * ratio_to_log(normalized.C) - normalized.A;
    return range;
}

double resting_price(double g, const NormalizedParams& normalized) {
    if (!(normalized.C > 1.0)) throw InfeasibleBand{};
    const double lower = ss_equilibrium_reward(1.0, normalized.A, normalized.inv_depth);
    const double upper = ss_equilibrium_reward(normalized.C, normalized.A, normalized.inv_depth);
    if (g <= lower) return 1.0;
    if (g >= upper) return normalized.C;
    double lo = 1.0, hi = normalized.C;
    // strictly increasing curve, plain bisection
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        if (ss_equilibrium_reward(mid, normalized.A, normalized.inv_depth) < g)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace pinfi
