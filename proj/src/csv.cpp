#include "pinfi/csv.hpp"

#include <cmath>
#include <cstdio>

namespace pinfi {

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string trajectory_csv(const Trajectory& trajectory) {
    std::string out =
        "time,price,x,ss_active,sb_active,gb_active,lp_retention,"
        "seller_profit_cum,buyer_surplus_cum,lp_reward_cum,lp_imperm_loss\n";
    for (const Sample& s : trajectory.samples) {
        out += format_double(s.time);
        out += ',';
        out += format_double(s.price);
        out += ',';
        out += format_double(s.x);
        out += ',';
        out += s.flags.ss_active ? '1' : '0';
        out += ',';
        out += s.flags.sb_active ? '1' : '0';
        out += ',';
        out += s.flags.gb_active ? '1' : '0';
        out += ',';
        out += s.flags.lp_retention ? '1' : '0';
        out += ',';
        out += format_double(s.ledgers.seller_profit);
        out += ',';
        out += format_double(s.ledgers.buyer_surplus);
        out += ',';
        out += format_double(s.ledgers.lp_reward);
        out += ',';
        out += format_double(s.ledgers.lp_imperm_loss);
        out += '\n';
    }
    return out;
}

std::string phase_csv(const PhaseGrid& grid) {
    std::string out = "x,g,zone,g_ss,g_sb\n";
    const std::size_t ng = grid.g_axis.size();
    for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
        const std::string x_str = format_double(grid.x_axis[ix]);
        const std::string ss_str =
            std::isnan(grid.curve_ss[ix]) ? "" : format_double(grid.curve_ss[ix]);
        const std::string sb_str =
            std::isnan(grid.curve_sb[ix]) ? "" : format_double(grid.curve_sb[ix]);
        for (std::size_t ig = 0; ig < ng; ++ig) {
            out += x_str;
            out += ',';
            out += format_double(grid.g_axis[ig]);
            out += ',';
            out += zone_name(grid.labels[ix * ng + ig]);
            out += ',';
            out += ss_str;
            out += ',';
            out += sb_str;
            out += '\n';
        }
    }
    return out;
}

std::string curves_csv(const PhaseGrid& grid) {
    std::string out = "x,g_ss,g_sb\n";
    for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
        out += format_double(grid.x_axis[ix]);
        out += ',';
        if (!std::isnan(grid.curve_ss[ix])) out += format_double(grid.curve_ss[ix]);
        out += ',';
        if (!std::isnan(grid.curve_sb[ix])) out += format_double(grid.curve_sb[ix]);
        out += '\n';
    }
    return out;
}

const char* terminal_name(Terminal terminal) {
    switch (terminal) {
        case Terminal::Rest: return "rest";
        case Terminal::Cessation: return "cessation";
        case Terminal::HorizonCap: return "horizon_cap";
        case Terminal::LpExodusFlagged: return "lp_exodus_flagged";
    }
    return "?";
}

const char* arbitration_name(Arbitration arbitration) {
    switch (arbitration) {
        case Arbitration::SellerPriority: return "seller_priority";
        case Arbitration::BuyerPriority: return "buyer_priority";
        case Arbitration::Alternate: return "alternate";
        case Arbitration::SeededRandom: return "seeded_random";
    }
    return "?";
}

const char* role_model_name(RoleModel role_model) {
    switch (role_model) {
        case RoleModel::ThresholdOnly: return "threshold_only";
        case RoleModel::RewardAware: return "reward_aware";
    }
    return "?";
}

}  // namespace pinfi
