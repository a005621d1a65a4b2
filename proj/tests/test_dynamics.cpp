#include <doctest.h>

#include <cmath>

#include "pinfi/analytics.hpp"
#include "pinfi/dynamics.hpp"

using namespace pinfi;

namespace {

// A = 0.3, B = 0.4, C = 0.7: both buyer roles stay inactive near x = 1, so
// sell pressure decays the price to break-even and then ceases.
MarketParams sell_side_params(double g = 0.0) {
    return MarketParams{1.0, 0.3, g, 0.3, 1.0, 0.7, 1000.0};
}

// A = 0.3, B = 0.7, C = 1.3 (break-even scale 1/1.3).
MarketParams band_params(double g) {
    const double scale = 1.3;  // theta/(beta+p*theta)
    return MarketParams{1.0 / scale, 0.3 / scale, g / scale, 0.0, 1.0, 7.0 / 13.0, 1000.0};
}

SimConfig base_config(const MarketParams& params, double x0) {
    SimConfig config;
    config.params = params;
    config.x0 = x0;
    config.step_size = 0.1;  // dt/N = 1e-4
    config.max_time = 2000.0;
    return config;
}

}  // namespace

TEST_CASE("activity flags at the role thresholds") {
    const NormalizedParams band{0.3, 0.7, 1.3, 1e-3};
    const ActivityFlags at_ceiling = activity_flags(1.3, 0.0, band, RoleModel::ThresholdOnly);
    CHECK(at_ceiling.ss_active);
    CHECK_FALSE(at_ceiling.sb_active);
    CHECK_FALSE(at_ceiling.gb_active);
    CHECK(at_ceiling.lp_retention);

    const NormalizedParams fee{0.3, 0.65, 0.95, 1e-3};
    const ActivityFlags cheap = activity_flags(0.5, 0.3, fee, RoleModel::ThresholdOnly);
    CHECK_FALSE(cheap.ss_active);
    CHECK(cheap.sb_active);
    CHECK(cheap.gb_active);
    CHECK_FALSE(cheap.lp_retention);  // 0.3 < g_sb(0.5) = 0.699428

    const ActivityFlags gated = activity_flags(1.05, 0.8, band, RoleModel::RewardAware);
    CHECK_FALSE(gated.ss_active);  // 0.8 > g_ss(1.05) = 0.7258
    const ActivityFlags open = activity_flags(1.05, 0.7, band, RoleModel::RewardAware);
    CHECK(open.ss_active);
}

TEST_CASE("single-step price factors") {
    SimConfig config = base_config(band_params(0.0), 1.1);
    config.arbitration = Arbitration::Alternate;
    config.max_time = 0.2;  // two ticks
    const Trajectory traj = run(config);
    REQUIRE(traj.samples.size() >= 2);
    const double n = 1000.0, dt = 0.1;
    // SS and GB both active under Alternate: both legs execute
    CHECK(traj.samples[1].x / traj.samples[0].x ==
          doctest::Approx(n * n / ((n + dt) * (n - dt))).epsilon(1e-12));

    SimConfig seller = base_config(sell_side_params(), 1.3);
    seller.max_time = 0.2;
    const Trajectory straj = run(seller);
    CHECK(straj.samples[1].x / straj.samples[0].x ==
          doctest::Approx(n / (n + dt)).epsilon(1e-12));

    SimConfig buyer = base_config(band_params(2.0), 1.0);
    buyer.role_model = RoleModel::RewardAware;  // g = 2 keeps sellers out
    buyer.max_time = 0.2;
    const Trajectory btraj = run(buyer);
    CHECK(btraj.samples[1].x / btraj.samples[0].x ==
          doctest::Approx(n / (n - dt)).epsilon(1e-12));
}

TEST_CASE("seller-only run tracks the closed-form decay") {
    SimConfig config = base_config(sell_side_params(0.5), 1.3);
    const Trajectory traj = run(config);
    CHECK(traj.terminal == Terminal::Cessation);

    const MarketParams p = sell_side_params(0.5);
    MarketParams at_start = p;
    at_start.alpha = 1.3;
    const double T = ss_cessation_time(at_start);
    CHECK(traj.samples.back().time == doctest::Approx(T).epsilon(1e-3));

    double max_rel = 0.0;
    for (const Sample& s : traj.samples) {
        const double exact = 1.3 * std::exp(-s.time / p.depth);
        max_rel = std::max(max_rel, std::abs(s.x - exact) / exact);
    }
    CHECK(max_rel <= 1e-3);

    // ledgers against the closed forms
    const double tol = 10.0 * config.step_size / p.depth;
    CHECK(traj.ledgers.seller_profit == doctest::Approx(ss_gain(at_start)).epsilon(tol));
    CHECK(traj.ledgers.lp_reward ==
          doctest::Approx(at_start.gamma * at_start.depth * T).epsilon(tol));
    CHECK(traj.ledgers.lp_imperm_loss ==
          doctest::Approx((1.0 - 1.3) * p.depth).epsilon(tol));
    // final totals equal the last recorded cumulative sample
    CHECK(traj.samples.back().ledgers.seller_profit == traj.ledgers.seller_profit);
    CHECK(traj.samples.back().ledgers.lp_reward == traj.ledgers.lp_reward);
}

TEST_CASE("buyer-only run tracks the closed-form growth to the ceiling") {
    SimConfig config = base_config(band_params(2.0), 1.0);
    config.role_model = RoleModel::RewardAware;
    const Trajectory traj = run(config);
    CHECK(traj.terminal == Terminal::Rest);
    CHECK(traj.samples.back().x == doctest::Approx(1.3).epsilon(1e-3));
    CHECK(traj.ledgers.buyer_surplus >= 0.0);

    double max_rel = 0.0;
    for (const Sample& s : traj.samples) {
        const double exact = std::exp(s.time / 1000.0);
        max_rel = std::max(max_rel, std::abs(s.x - exact) / exact);
    }
    CHECK(max_rel <= 1e-3);
}

TEST_CASE("dead band produces a single resting sample") {
    // A = 0.3, B = 0.4, C = 0.7
    const MarketParams p{0.85, 0.3, 0.1, 0.3, 1.0, 0.7, 1000.0};
    SimConfig config = base_config(p, 0.85);
    const Trajectory traj = run(config);
    CHECK(traj.terminal == Terminal::Rest);
    CHECK(traj.samples.size() == 1);
    CHECK(detect_rest(traj) == doctest::Approx(0.85));
}

TEST_CASE("lp exodus is flagged, not modeled") {
    // B = 0.65, g = 0.3 below the buy-side curve
    const MarketParams p{0.5, 0.3, 0.3, 0.05, 1.0, 0.7, 1000.0};
    SimConfig config = base_config(p, 0.5);
    const Trajectory traj = run(config);
    CHECK(traj.terminal == Terminal::LpExodusFlagged);
    CHECK(traj.samples.size() == 1);
    CHECK_THROWS_AS(detect_rest(traj), NotTerminated);
}

TEST_CASE("reward-aware runs settle on the resting price from either side") {
    const NormalizedParams band{0.3, 0.7, 1.3, 1e-3};
    for (const double g : {0.701, 0.75, 0.8, 0.9}) {
        for (const double x0 : {1.0, 1.05, 1.25}) {
            SimConfig config = base_config(band_params(g), x0);
            config.role_model = RoleModel::RewardAware;
            config.max_time = 5000.0;
            const Trajectory traj = run(config);
            const double x_rest = detect_rest(traj);
            const double x_star = resting_price(g, band);
            CHECK(std::abs(x_rest - x_star) <= 2.0 * config.step_size / 1000.0);
        }
    }
}

TEST_CASE("seeded runs are deterministic and replayable") {
    SimConfig config = base_config(band_params(0.2), 1.1);
    config.arbitration = Arbitration::SeededRandom;
    config.seed = 1234;
    config.max_time = 50.0;
    const Trajectory a = run(config);
    const Trajectory b = run(config);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].x == b.samples[i].x);
        CHECK(a.samples[i].ledgers.seller_profit == b.samples[i].ledgers.seller_profit);
        CHECK(a.samples[i].ledgers.buyer_surplus == b.samples[i].ledgers.buyer_surplus);
    }
    CHECK(a.terminal == b.terminal);
}

TEST_CASE("horizon cap and invalid configs") {
    SimConfig config = base_config(band_params(0.2), 1.1);
    config.max_time = 1.0;
    CHECK(run(config).terminal == Terminal::HorizonCap);
    CHECK_THROWS_AS(detect_rest(run(config)), NotTerminated);

    SimConfig bad = config;
    bad.step_size = 0.0;
    CHECK_THROWS_AS(run(bad), InvalidConfig);
    bad = config;
    bad.x0 = -1.0;
    CHECK_THROWS_AS(run(bad), InvalidConfig);
    bad = config;
    bad.max_time = 0.01;  // below step_size
    CHECK_THROWS_AS(run(bad), InvalidConfig);
    bad = config;
    bad.params.depth = 1.1;  // below the minimum depth criterion
    CHECK_THROWS_AS(run(bad), InvalidConfig);
    bad = config;
    bad.params.fill_rate = 1.5;
    CHECK_THROWS_AS(run(bad), InvalidConfig);
}
