#pragma once

#include <string>

#include "pinfi/dynamics.hpp"
#include "pinfi/phase.hpp"

namespace pinfi {

/// Static price-path figure (price vs time).
std::string trajectory_svg(const Trajectory& trajectory);

/// Static phase diagram: zone-colored cells, both equilibrium curves, and
/// the stable segment markers when present.
std::string phase_svg(const PhaseGrid& grid);

}  // namespace pinfi
