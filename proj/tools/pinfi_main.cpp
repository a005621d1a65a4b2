#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinfi/analytics.hpp"
#include "pinfi/config.hpp"
#include "pinfi/csv.hpp"
#include "pinfi/dynamics.hpp"
#include "pinfi/phase.hpp"
#include "pinfi/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitInvalidConfig = 2;
constexpr int kExitInfeasible = 3;

bool wants_format(const pinfi::OutputBlock& output, const std::string& format) {
    for (const auto& f : output.formats)
        if (f == format) return true;
    return false;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pinfi::Error("cannot write '" + path.string() + "'");
    out << content;
}

json params_json(const pinfi::MarketParams& p) {
    return json{{"alpha", p.alpha},   {"beta", p.beta},
                {"gamma", p.gamma},   {"delta", p.delta},
                {"theta", p.theta},   {"fill_rate", p.fill_rate},
                {"depth", p.depth}};
}

json normalized_json(const pinfi::NormalizedParams& n, double x) {
    return json{{"A", n.A}, {"B", n.B}, {"C", n.C}, {"inv_depth", n.inv_depth}, {"x", x}};
}

json gain_report_json(const pinfi::GainReport& r) {
    return json{{"cessation_time", r.cessation_time},
                {"seller_gain", r.seller_gain},
                {"lp_gain", r.lp_gain},
                {"lp_rational_gain", r.lp_rational_gain},
                {"reward_accrual", r.reward_accrual},
                {"impermanent_loss", r.impermanent_loss}};
}

int cmd_analyze(const std::string& config_path) {
    const pinfi::RunConfig config = pinfi::load_config(config_path);
    const pinfi::MarketParams params = pinfi::validate(config.market);
    const pinfi::NormalizedParams norm = pinfi::normalize(params);
    const double x = pinfi::normalized_price(params);

    // Reward bounds first: an infeasible band aborts before anything is emitted.
    const pinfi::RewardRange bounds = pinfi::reward_bounds(norm);

    json report;
    report["params"] = params_json(params);
    report["normalized"] = normalized_json(norm, x);
    report["checks"] = json{{"feasible_band", pinfi::feasible_band(params)},
                            {"min_depth_ok", pinfi::min_depth_ok(params)}};
    report["reward_bounds"] = json{{"lower", bounds.lower}, {"upper", bounds.upper}};

    try {
        report["sell_side"] = gain_report_json(pinfi::ss_gain_report(params));
    } catch (const pinfi::NoArbitrage&) {
        report["sell_side"] = json{{"no_arbitrage", true}};
    }
    try {
        report["buy_side"] = gain_report_json(pinfi::sb_gain_report(params));
    } catch (const pinfi::NoArbitrage&) {
        report["buy_side"] = json{{"no_arbitrage", true}};
    }

    json eq;
    eq["g_ss_at_x"] =
        x >= 1.0 ? json(pinfi::ss_equilibrium_reward(x, norm.A, norm.inv_depth)) : json();
    eq["g_sb_at_x"] = (x > 0.0 && x <= norm.B)
                          ? json(pinfi::sb_equilibrium_reward(x, norm.A, norm.B, norm.inv_depth))
                          : json();
    eq["sb_limit_at_b_direct"] = 1.0 - norm.A - norm.B * norm.inv_depth;
    eq["sb_limit_at_b_stated"] = pinfi::sb_limit_reward_stated(norm.A, norm.inv_depth);
    report["equilibrium"] = eq;

    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_override,
                 bool svg_flag) {
    const pinfi::RunConfig config = pinfi::load_config(config_path);
    const pinfi::SimConfig sim = pinfi::to_sim_config(config);
    const pinfi::Trajectory traj = pinfi::run(sim);

    json summary;
    summary["params"] = params_json(sim.params);
    summary["sim"] = json{{"x0", sim.x0},
                          {"step_size", sim.step_size},
                          {"max_time", sim.max_time},
                          {"arbitration", pinfi::arbitration_name(sim.arbitration)},
                          {"role_model", pinfi::role_model_name(sim.role_model)},
                          {"seed", sim.seed}};
    summary["terminal"] = pinfi::terminal_name(traj.terminal);
    summary["samples"] = traj.samples.size();
    summary["final"] = json{{"time", traj.samples.back().time},
                            {"price", traj.samples.back().price},
                            {"x", traj.samples.back().x}};
    summary["ledgers"] = json{{"seller_profit", traj.ledgers.seller_profit},
                              {"buyer_surplus", traj.ledgers.buyer_surplus},
                              {"lp_reward", traj.ledgers.lp_reward},
                              {"lp_imperm_loss", traj.ledgers.lp_imperm_loss}};

    const fs::path out_dir =
        out_override.empty() ? fs::path(config.output.directory) : fs::path(out_override);
    fs::create_directories(out_dir);
    write_file(out_dir / "trajectory.csv", pinfi::trajectory_csv(traj));
    write_file(out_dir / "summary.json", summary.dump(2) + "\n");
    if (svg_flag || wants_format(config.output, "svg"))
        write_file(out_dir / "trajectory.svg", pinfi::trajectory_svg(traj));
    return 0;
}

int cmd_phase(const std::string& config_path, const std::string& out_override,
              bool svg_flag) {
    const pinfi::RunConfig config = pinfi::load_config(config_path);
    if (!config.grid) throw pinfi::InvalidConfig("missing 'grid' block");
    const pinfi::MarketParams params = pinfi::validate(config.market);
    const pinfi::NormalizedParams norm = pinfi::normalize(params);
    const pinfi::PhaseGrid grid = pinfi::sweep(*config.grid, norm);

    json summary;
    summary["params"] = params_json(params);
    summary["normalized"] = normalized_json(norm, pinfi::normalized_price(params));
    if (grid.segment) {
        summary["stable_segment"] =
            json{{"pD", {grid.segment->x_d, grid.segment->g_d}},
                 {"pB_prime", {grid.segment->x_b, grid.segment->g_b}}};
    } else {
        summary["stable_segment"] = json();
    }
    std::size_t counts[7] = {};
    for (const pinfi::Zone z : grid.labels) ++counts[int(z)];
    json zone_counts;
    for (int z = 0; z < 7; ++z)
        zone_counts[pinfi::zone_name(pinfi::Zone(z))] = counts[z];
    summary["zone_cells"] = zone_counts;

    const fs::path out_dir =
        out_override.empty() ? fs::path(config.output.directory) : fs::path(out_override);
    fs::create_directories(out_dir);
    write_file(out_dir / "phase.csv", pinfi::phase_csv(grid));
    write_file(out_dir / "curves.csv", pinfi::curves_csv(grid));
    write_file(out_dir / "summary.json", summary.dump(2) + "\n");
    if (svg_flag || wants_format(config.output, "svg"))
        write_file(out_dir / "phase.svg", pinfi::phase_svg(grid));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PinFi dissipative-asset AMM laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    bool svg_flag = false;

    CLI::App* analyze = app.add_subcommand("analyze", "closed-form analytics report");
    analyze->add_option("--config", config_path, "config file (JSON)")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "quasi-static trajectory run");
    simulate->add_option("--config", config_path, "config file (JSON)")->required();
    simulate->add_option("--out", out_override, "output directory");
    simulate->add_flag("--svg", svg_flag, "also render an SVG figure");

    CLI::App* phase = app.add_subcommand("phase", "phase-diagram sweep");
    phase->add_option("--config", config_path, "config file (JSON)")->required();
    phase->add_option("--out", out_override, "output directory");
    phase->add_flag("--svg", svg_flag, "also render an SVG figure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInvalidConfig;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(config_path);
        if (simulate->parsed()) return cmd_simulate(config_path, out_override, svg_flag);
        return cmd_phase(config_path, out_override, svg_flag);
    } catch (const pinfi::InfeasibleBand& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const pinfi::InsufficientDepth& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const pinfi::InvalidConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const pinfi::InvalidParameter& e) {
        std::cerr << "error: invalid parameter " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const pinfi::InvalidGridSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
