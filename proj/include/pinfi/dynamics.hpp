#pragma once

#include <cstdint>
#include <vector>

#include "pinfi/market_params.hpp"

namespace pinfi {

/// Resolution policy when sell and buy pressure are active in the same tick.
enum class Arbitration { SellerPriority, BuyerPriority, Alternate, SeededRandom };

/// ThresholdOnly reproduces the single-population derivations; RewardAware
/// additionally gates seller activity on g < g_ss(x) (LP <-> SS switching).
enum class RoleModel { ThresholdOnly, RewardAware };

enum class Terminal { Rest, Cessation, HorizonCap, LpExodusFlagged };

struct SimConfig {
    MarketParams params;
    double x0 = 1.0;        ///< initial pool price in units of beta + p*theta
    double step_size = 0.0; ///< hours per trade event
    double max_time = 0.0;  ///< horizon cap, hours
    Arbitration arbitration = Arbitration::Alternate;
    RoleModel role_model = RoleModel::ThresholdOnly;
    std::uint64_t seed = 0;
};

struct ActivityFlags {
    bool ss_active = false;
    bool sb_active = false;
    bool gb_active = false;
    bool lp_retention = true;
};

struct Ledgers {
    double seller_profit = 0.0;
    double buyer_surplus = 0.0;
    double lp_reward = 0.0;
    double lp_imperm_loss = 0.0;
};

struct Sample {
    double time = 0.0;
    double price = 0.0;
    double x = 0.0;
    ActivityFlags flags;
    Ledgers ledgers;  ///< cumulative totals as of this sample
};

struct Trajectory {
    std::vector<Sample> samples;
    Ledgers ledgers;  ///< final totals
    Terminal terminal = Terminal::Rest;
};

ActivityFlags activity_flags(double x, double g, const NormalizedParams& normalized,
                             RoleModel role_model);

/// Deterministic quasi-static run; throws InvalidConfig on a bad config.
Trajectory run(const SimConfig& config);

/// Final normalized price of a terminated trajectory; throws NotTerminated
/// unless the terminal tag is Rest or Cessation.
double detect_rest(const Trajectory& trajectory);

}  // namespace pinfi
