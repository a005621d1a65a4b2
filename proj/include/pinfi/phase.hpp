#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pinfi/market_params.hpp"

namespace pinfi {

enum class Zone { aA, aB, aC, aD, aE, aF, aG };

/// Coarse labels for the two-party diagrams.
enum class CoarseZone { SS, SB, LP };

const char* zone_name(Zone zone);
const char* coarse_zone_name(CoarseZone zone);

struct GridSpec {
    double x_min = 0.0, x_max = 0.0;
    int x_steps = 0;
    double g_min = 0.0, g_max = 0.0;
    int g_steps = 0;
};

/// Stable segment endpoints pD -> pB' on the SS-LP equilibrium curve.
struct StableSegment {
    double x_d = 0.0, g_d = 0.0;   ///< pD = (1, 1 + 1/N - A)
    double x_b = 0.0, g_b = 0.0;   ///< pB' = (C, (1 + 1/N)(C-1)/ln C - A)
};

struct PhaseGrid {
    std::vector<double> x_axis;
    std::vector<double> g_axis;
    /// Row-major, x outer: labels[ix * g_axis.size() + ig].
    std::vector<Zone> labels;
    /// Curves sampled on the x axis; NaN where out of domain.
    std::vector<double> curve_ss;
    std::vector<double> curve_sb;
    std::optional<StableSegment> segment;
};

Zone classify(double x, double g, const NormalizedParams& normalized);
CoarseZone classify_coarse(double x, double g, const NormalizedParams& normalized);

StableSegment stable_segment(const NormalizedParams& normalized);

/// Serial reference sweep.
PhaseGrid sweep_serial(const GridSpec& spec, const NormalizedParams& normalized);

/// OpenMP-parallel sweep; bit-identical to sweep_serial by construction
/// (classification is pure, cells are written independently).
PhaseGrid sweep(const GridSpec& spec, const NormalizedParams& normalized);

}  // namespace pinfi
