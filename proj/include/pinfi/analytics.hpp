#pragma once

#include "pinfi/market_params.hpp"

namespace pinfi {

/// Closed-form outcome of one arbitrage episode (sell-side or buy-side).
struct GainReport {
    double cessation_time = 0.0;     ///< hours
    double seller_gain = 0.0;        ///< USD (sell-side episodes; 0 otherwise)
    double lp_gain = 0.0;            ///< USD, reward accrual + impermanent loss
    double lp_rational_gain = 0.0;   ///< USD, external-sale opportunity value (buy-side; 0 otherwise)
    double reward_accrual = 0.0;     ///< USD, gamma * N * T
    double impermanent_loss = 0.0;   ///< USD, signed; negative when the pool ends cheaper
};

/// Normalized block-reward band [lower, upper] in units of beta + p*theta.
struct RewardRange {
    double lower = 0.0;
    double upper = 0.0;
};

/// Sell-pressure price trajectory alpha * exp(-t/N).
double price_decay(double t, const MarketParams& params);

/// Buy-pressure price trajectory alpha * exp(+t/N).
double price_growth(double t, const MarketParams& params);

/// T = N * ln(alpha/(beta + p*theta)); throws NoArbitrage when alpha < beta + p*theta.
double ss_cessation_time(const MarketParams& params);

/// T = N * ln((p*theta - delta)/alpha); throws NoArbitrage when alpha > p*theta - delta.
double sb_cessation_time(const MarketParams& params);

/// Speculating-seller gain over [0, T]: N(beta+p*theta)[x - A ln x - 1].
double ss_gain(const MarketParams& params);

/// LP gain over the sell-side episode (reward accrual + impermanent loss).
double lp_gain_vs_ss(const MarketParams& params);

/// Opportunity value of an LP selling externally over the buy-side episode:
/// p*theta * N^2 * ln((p*theta - delta)/alpha).
double lp_rational_gain(const MarketParams& params);

/// Actual LP gain over the buy-side episode:
/// gamma N^2 ln((p*theta - delta)/alpha) + (p*theta - delta - alpha) N.
double lp_gain_vs_sb(const MarketParams& params);

GainReport ss_gain_report(const MarketParams& params);
GainReport sb_gain_report(const MarketParams& params);

/// SS-LP equilibrium curve g(x) = (1 + 1/N)(x-1)/ln x - A for x >= 1, with
/// the removable singularity at x = 1 handled by series expansion.
double ss_equilibrium_reward(double x, double A, double inv_depth);

/// SB-LP equilibrium curve g(x) = (1 - A) - (1/N)(B-x)/(ln B - ln x) for
/// 0 < x <= B; the x -> B value is the direct limit (1 - A) - B/N.
double sb_equilibrium_reward(double x, double A, double B, double inv_depth);

/// The stated x -> B limit value (1 - A) - 1/N, exposed for comparison with
/// the direct limit of the curve above; they coincide only at B = 1.
double sb_limit_reward_stated(double A, double inv_depth);

/// Normalized SS/LP profit x - A ln x - 1 for x >= 1; zero below 1.
double normalized_profit_sl(double x, double A);

/// Normalized buy-side profit (1 - A)(ln B - ln x) for 0 < x <= B; zero above B.
double normalized_profit_bl(double x, double A, double B);

/// Block-reward band keeping LPs staked across the feasible price band:
/// lower = 1 + 1/N - A, upper = (1 + 1/N)(C-1)/ln C - A.
/// Throws InfeasibleBand when C <= 1, InsufficientDepth when N(1-A) < 1.
RewardRange reward_bounds(const NormalizedParams& normalized);

/// Unique x* in [1, C] with ss_equilibrium_reward(x*) = g, clipped to the
/// interval ends when g is outside the reward band. Bisection to |dx| <= 1e-10.
double resting_price(double g, const NormalizedParams& normalized);

}  // namespace pinfi
