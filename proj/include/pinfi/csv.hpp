#pragma once

#include <string>

#include "pinfi/dynamics.hpp"
#include "pinfi/phase.hpp"

namespace pinfi {

/// Shortest exact decimal form (17 significant digits); re-parsing with
/// strtod reproduces the double bit-for-bit.
std::string format_double(double value);

/// Columns: time,price,x,ss_active,sb_active,gb_active,lp_retention,
/// seller_profit_cum,buyer_surplus_cum,lp_reward_cum,lp_imperm_loss
std::string trajectory_csv(const Trajectory& trajectory);

/// Columns: x,g,zone,g_ss,g_sb  (empty string where a curve is out of domain)
std::string phase_csv(const PhaseGrid& grid);

/// Columns: x,g_ss,g_sb  (one row per x-axis sample)
std::string curves_csv(const PhaseGrid& grid);

const char* terminal_name(Terminal terminal);
const char* arbitration_name(Arbitration arbitration);
const char* role_model_name(RoleModel role_model);

}  // namespace pinfi
