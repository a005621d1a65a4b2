#include "pinfi/phase.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "pinfi/analytics.hpp"

namespace pinfi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> make_axis(double lo, double hi, int steps) {
    std::vector<double> axis(steps);
    if (steps == 1) {
        axis[0] = lo;
        return axis;
    }
    for (int i = 0; i < steps; ++i)
        axis[i] = lo + (double(i) * (hi - lo)) / double(steps - 1);
    axis.back() = hi;  // pin the endpoint against rounding in (hi - lo)
    return axis;
}

void check_spec(const GridSpec& spec) {
    if (spec.x_steps < 1 || spec.g_steps < 1)
        throw InvalidGridSpec("grid steps must be >= 1");
    if (!(spec.x_min > 0.0 && spec.x_max <= 10.0 && spec.x_max >= spec.x_min))
        throw InvalidGridSpec("x axis must satisfy 0 < x_min <= x_max <= 10");
    if (!(spec.g_min >= 0.0 && spec.g_max <= 5.0 && spec.g_max >= spec.g_min))
        throw InvalidGridSpec("g axis must satisfy 0 <= g_min <= g_max <= 5");
}

PhaseGrid prepare(const GridSpec& spec, const NormalizedParams& normalized) {
    check_spec(spec);
    PhaseGrid grid;
    grid.x_axis = make_axis(spec.x_min, spec.x_max, spec.x_steps);
    grid.g_axis = make_axis(spec.g_min, spec.g_max, spec.g_steps);
    grid.labels.resize(std::size_t(spec.x_steps) * std::size_t(spec.g_steps));
    grid.curve_ss.assign(spec.x_steps, kNaN);
    grid.curve_sb.assign(spec.x_steps, kNaN);
    if (normalized.C > 1.0 && normalized.inv_depth <= 1.0 - normalized.A)
        grid.segment = stable_segment(normalized);
    return grid;
}

void fill_column(PhaseGrid& grid, const NormalizedParams& normalized, std::size_t ix) {
    const double x = grid.x_axis[ix];
    if (x >= 1.0)
        grid.curve_ss[ix] = ss_equilibrium_reward(x, normalized.A, normalized.inv_depth);
    if (x <= normalized.B)
        grid.curve_sb[ix] =
            sb_equilibrium_reward(x, normalized.A, normalized.B, normalized.inv_depth);
    const std::size_t ng = grid.g_axis.size();
    for (std::size_t ig = 0; ig < ng; ++ig)
        grid.labels[ix * ng + ig] = classify(x, grid.g_axis[ig], normalized);
}

}  // namespace

const char* zone_name(Zone zone) {
    switch (zone) {
        case Zone::aA: return "aA";
        case Zone::aB: return "aB";
        case Zone::aC: return "aC";
        case Zone::aD: return "aD";
        case Zone::aE: return "aE";
        case Zone::aF: return "aF";
        case Zone::aG: return "aG";
    }
    return "?";
}

const char* coarse_zone_name(CoarseZone zone) {
    switch (zone) {
        case CoarseZone::SS: return "SS";
        case CoarseZone::SB: return "SB";
        case CoarseZone::LP: return "LP";
    }
    return "?";
}

Zone classify(double x, double g, const NormalizedParams& normalized) {
    if (!(x > 0.0)) throw DomainError("classify requires x > 0");
    if (x < normalized.B) {
        // ties on the curves resolve to the LP-retaining zone
        const double gsb =
            sb_equilibrium_reward(x, normalized.A, normalized.B, normalized.inv_depth);
        return g < gsb ? Zone::aB : Zone::aC;
    }
    if (x < 1.0) return Zone::aA;
    const double gss = ss_equilibrium_reward(x, normalized.A, normalized.inv_depth);
    // At C = 1 the band degenerates to the single column x = 1 (point pD).
    const bool in_band = x < normalized.C || (x == 1.0 && normalized.C == 1.0);
    if (g >= gss) return in_band ? Zone::aG : Zone::aF;
    return x < normalized.C ? Zone::aD : Zone::aE;
}

CoarseZone classify_coarse(double x, double g, const NormalizedParams& normalized) {
    if (!(x > 0.0)) throw DomainError("classify requires x > 0");
    if (x > 1.0 && g < ss_equilibrium_reward(x, normalized.A, normalized.inv_depth))
        return CoarseZone::SS;
    if (x < normalized.B &&
        g < sb_equilibrium_reward(x, normalized.A, normalized.B, normalized.inv_depth))
        return CoarseZone::SB;
    return CoarseZone::LP;
}

StableSegment stable_segment(const NormalizedParams& normalized) {
    const RewardRange bounds = reward_bounds(normalized);
    return StableSegment{1.0, bounds.lower, normalized.C, bounds.upper};
}

PhaseGrid sweep_serial(const GridSpec& spec, const NormalizedParams& normalized) {
    PhaseGrid grid = prepare(spec, normalized);
    for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix)
        fill_column(grid, normalized, ix);
    return grid;
}

PhaseGrid sweep(const GridSpec& spec, const NormalizedParams& normalized) {
    PhaseGrid grid = prepare(spec, normalized);
    const std::int64_t nx = std::int64_t(grid.x_axis.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t ix = 0; ix < nx; ++ix)
        fill_column(grid, normalized, std::size_t(ix));
    return grid;
}

}  // namespace pinfi
