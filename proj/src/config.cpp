#include "pinfi/config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace pinfi {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& block,
                    const std::set<std::string>& known) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.count(key))
            throw InvalidConfig("unknown key '" + key + "' in " + block);
    }
}

double require_number(const json& obj, const std::string& block, const std::string& key) {
    if (!obj.contains(key))
        throw InvalidConfig("missing key '" + key + "' in " + block);
    if (!obj[key].is_number())
        throw InvalidConfig("key '" + key + "' in " + block + " must be a number");
    return obj[key].get<double>();
}

MarketParams parse_market(const json& obj) {
    reject_unknown(obj, "market",
                   {"alpha", "beta", "gamma", "delta", "theta", "fill_rate", "depth"});
    MarketParams params;
    params.alpha = require_number(obj, "market", "alpha");
    params.beta = require_number(obj, "market", "beta");
    params.gamma = require_number(obj, "market", "gamma");
    params.delta = require_number(obj, "market", "delta");
    params.theta = require_number(obj, "market", "theta");
    params.fill_rate = require_number(obj, "market", "fill_rate");
    params.depth = require_number(obj, "market", "depth");
    return params;
}

Arbitration parse_arbitration(const std::string& name) {
    if (name == "seller_priority") return Arbitration::SellerPriority;
    if (name == "buyer_priority") return Arbitration::BuyerPriority;
    if (name == "alternate") return Arbitration::Alternate;
    if (name == "seeded_random") return Arbitration::SeededRandom;
    throw InvalidConfig("unknown arbitration policy '" + name + "'");
}

RoleModel parse_role_model(const std::string& name) {
    if (name == "threshold_only") return RoleModel::ThresholdOnly;
    if (name == "reward_aware") return RoleModel::RewardAware;
    throw InvalidConfig("unknown role_model '" + name + "'");
}

SimBlock parse_sim(const json& obj) {
    reject_unknown(obj, "sim",
                   {"x0", "step_size", "max_time", "arbitration", "role_model", "seed"});
    SimBlock sim;
    sim.x0 = require_number(obj, "sim", "x0");
    sim.step_size = require_number(obj, "sim", "step_size");
    sim.max_time = require_number(obj, "sim", "max_time");
    if (obj.contains("arbitration"))
        sim.arbitration = parse_arbitration(obj["arbitration"].get<std::string>());
    if (obj.contains("role_model"))
        sim.role_model = parse_role_model(obj["role_model"].get<std::string>());
    if (obj.contains("seed")) {
        if (!obj["seed"].is_number_unsigned())
            throw InvalidConfig("key 'seed' in sim must be a non-negative integer");
        sim.seed = obj["seed"].get<std::uint64_t>();
    }
    return sim;
}

GridSpec parse_grid(const json& obj) {
    reject_unknown(obj, "grid",
                   {"x_min", "x_max", "x_steps", "g_min", "g_max", "g_steps"});
    GridSpec grid;
    grid.x_min = require_number(obj, "grid", "x_min");
    grid.x_max = require_number(obj, "grid", "x_max");
    grid.g_min = require_number(obj, "grid", "g_min");
    grid.g_max = require_number(obj, "grid", "g_max");
    if (!obj.contains("x_steps") || !obj["x_steps"].is_number_integer())
        throw InvalidConfig("key 'x_steps' in grid must be an integer");
    if (!obj.contains("g_steps") || !obj["g_steps"].is_number_integer())
        throw InvalidConfig("key 'g_steps' in grid must be an integer");
    grid.x_steps = obj["x_steps"].get<int>();
    grid.g_steps = obj["g_steps"].get<int>();
    return grid;
}

OutputBlock parse_output(const json& obj) {
    reject_unknown(obj, "output", {"directory", "formats"});
    OutputBlock out;
    if (obj.contains("directory")) out.directory = obj["directory"].get<std::string>();
    if (obj.contains("formats")) {
        out.formats.clear();
        for (const auto& f : obj["formats"]) {
            const std::string name = f.get<std::string>();
            if (name != "csv" && name != "json" && name != "svg")
                throw InvalidConfig("unknown output format '" + name + "'");
            out.formats.push_back(name);
        }
    }
    return out;
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidConfig("config root must be an object");
    reject_unknown(doc, "config root", {"market", "sim", "grid", "output"});
    if (!doc.contains("market")) throw InvalidConfig("missing 'market' block");

    RunConfig config;
    try {
        config.market = parse_market(doc["market"]);
        if (doc.contains("sim")) config.sim = parse_sim(doc["sim"]);
        if (doc.contains("grid")) config.grid = parse_grid(doc["grid"]);
        if (doc.contains("output")) config.output = parse_output(doc["output"]);
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("config type error: ") + e.what());
    }
    return config;
}

SimConfig to_sim_config(const RunConfig& config) {
    if (!config.sim) throw InvalidConfig("missing 'sim' block");
    SimConfig sim;
    sim.params = config.market;
    sim.x0 = config.sim->x0;
    sim.step_size = config.sim->step_size;
    sim.max_time = config.sim->max_time;
    sim.arbitration = config.sim->arbitration;
    sim.role_model = config.sim->role_model;
    sim.seed = config.sim->seed;
    return sim;
}

}  // namespace pinfi
