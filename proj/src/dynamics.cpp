#include "pinfi/dynamics.hpp"

#include "pinfi/analytics.hpp"
#include "pinfi/pool.hpp"

namespace pinfi {

namespace {

// splitmix64 (Steele, Lea, Flood 2014): fixed 64-bit generator so seeded
// trajectories replay identically across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

}  // namespace

ActivityFlags activity_flags(double x, double g, const NormalizedParams& normalized,
                             RoleModel role_model) {
    ActivityFlags flags;
    flags.ss_active =
        x > 1.0 && (role_model == RoleModel::ThresholdOnly ||
                    g < ss_equilibrium_reward(x, normalized.A, normalized.inv_depth));
    flags.sb_active = x < normalized.B;
    flags.gb_active = x < normalized.C;
    flags.lp_retention =
        !(x < normalized.B &&
          g < sb_equilibrium_reward(x, normalized.A, normalized.B, normalized.inv_depth));
    return flags;
}

Trajectory run(const SimConfig& config) {
    MarketParams params;
    try {
        params = validate(config.params);
    } catch (const InvalidParameter& e) {
        throw InvalidConfig(std::string("invalid market params, ") + e.what());
    }
    if (!(config.step_size > 0.0)) throw InvalidConfig("step_size must be > 0");
    if (!(config.max_time >= config.step_size))
        throw InvalidConfig("max_time must be >= step_size");
    if (!(config.x0 > 0.0)) throw InvalidConfig("x0 must be > 0");
    if (!min_depth_ok(params)) throw InvalidConfig("pool depth below minimum");

    const NormalizedParams norm = normalize(params);
    const double scale = params.break_even();
    const double g = params.gamma / scale;
    const double alpha0 = config.x0 * scale;
    const double dt = config.step_size;

    PoolState pool{params.depth, alpha0 * params.depth};
    SplitMix64 rng{config.seed};
    Trajectory traj;
    Ledgers led;
    double t = 0.0;
    int prev_dir = 0;
    bool traded = false;

    for (;;) {
        const double price = spot_price(pool);
        const double x = price / scale;
        const ActivityFlags flags = activity_flags(x, g, norm, config.role_model);
        traj.samples.push_back(Sample{t, price, x, flags, led});

        if (!flags.lp_retention) {
            // recorded, not modeled: depth stays constant under quasi-statics
            traj.terminal = Terminal::LpExodusFlagged;
            break;
        }
        const bool sell = flags.ss_active;
        const bool buy = flags.sb_active || flags.gb_active;
        if (!sell && !buy) {
            traj.terminal = (traded && config.role_model == RoleModel::ThresholdOnly)
                                ? Terminal::Cessation
                                : Terminal::Rest;
            break;
        }

        bool do_sell = sell;
        bool do_buy = buy;
        bool buyer_is_sb = flags.sb_active;
        if (sell && buy) {
            if (config.role_model == RoleModel::RewardAware) {
                // Above the equilibrium curve LP-turned-sellers undercut
                // buyers; the sell leg wins contention in this mode.
                do_buy = false;
            } else {
                switch (config.arbitration) {
                    case Arbitration::SellerPriority: do_buy = false; break;
                    case Arbitration::BuyerPriority: do_sell = false; break;
                    case Arbitration::Alternate: break;  // one sell and one buy this tick
                    case Arbitration::SeededRandom: {
                        const int n_roles =
                            int(flags.ss_active) + int(flags.sb_active) + int(flags.gb_active);
                        std::uint64_t pick = rng.next() % std::uint64_t(n_roles);
                        if (flags.ss_active && pick-- == 0) {
                            do_buy = false;
                        } else if (flags.sb_active && pick-- == 0) {
                            do_sell = false;
                            buyer_is_sb = true;
                        } else {
                            do_sell = false;
                            buyer_is_sb = false;
                        }
                        break;
                    }
                }
            }
        }

        const int dir = (do_sell && do_buy) ? 0 : (do_sell ? -1 : +1);
        if (config.role_model == RoleModel::RewardAware && prev_dir != 0 && dir != 0 &&
            dir == -prev_dir) {
            // price has bracketed the resting point within one step
            traj.terminal = Terminal::Rest;
            break;
        }
        if (t > config.max_time - 0.5 * dt) {
            traj.terminal = Terminal::HorizonCap;
            break;
        }

        if (do_sell) {
            led.seller_profit += (price - params.beta) * dt;
            pool = quasi_static_sell_step(pool, dt);
            traded = true;
        }
        if (do_buy) {
            const double resale = buyer_is_sb
                                      ? params.fill_rate * params.theta - params.delta
                                      : params.theta - params.delta;
            led.buyer_surplus += (resale - price) * dt;
            pool = quasi_static_buy_step(pool, dt);
            traded = true;
        }
        led.lp_reward += params.gamma * params.depth * dt;
        led.lp_imperm_loss = (spot_price(pool) - alpha0) * params.depth;
        if (dir != 0) prev_dir = dir;
        t += dt;
    }

    traj.ledgers = led;
    return traj;
}

double detect_rest(const Trajectory& trajectory) {
    if (trajectory.terminal != Terminal::Rest && trajectory.terminal != Terminal::Cessation)
        throw NotTerminated{};
    return trajectory.samples.back().x;
}

}  // namespace pinfi
