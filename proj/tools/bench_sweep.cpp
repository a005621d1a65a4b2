// Times the serial reference sweep against the OpenMP sweep on a growing set
// of grid sizes and verifies the two produce identical grids.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "pinfi/phase.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

volatile std::size_t sink = 0;  // keeps the sweeps from being optimized away

double time_ms(const pinfi::GridSpec& spec, const pinfi::NormalizedParams& norm,
               pinfi::PhaseGrid (*fn)(const pinfi::GridSpec&, const pinfi::NormalizedParams&),
               int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        const auto grid = fn(spec, norm);
        const auto t1 = Clock::now();
        sink = sink + grid.labels.size() + std::size_t(grid.labels.back());
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

// bitwise vector comparison; the curves carry NaN outside their domains
bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

bool grids_equal(const pinfi::PhaseGrid& a, const pinfi::PhaseGrid& b) {
    return a.labels == b.labels && same_bits(a.curve_ss, b.curve_ss) &&
           same_bits(a.curve_sb, b.curve_sb) && same_bits(a.x_axis, b.x_axis) &&
           same_bits(a.g_axis, b.g_axis);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    const pinfi::NormalizedParams norm{0.3, 0.7, 1.3, 0.001};

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel sweep falls back to serial\n");
#endif
    std::printf("%10s %12s %12s %9s\n", "grid", "serial [ms]", "omp [ms]", "speedup");

    for (int n : {100, 200, 400, 800, 1600}) {
        const pinfi::GridSpec spec{0.1, 2.0, n, 0.0, 1.5, n};
        const auto serial = pinfi::sweep_serial(spec, norm);
        const auto parallel = pinfi::sweep(spec, norm);
        if (!grids_equal(serial, parallel)) {
            std::fprintf(stderr, "mismatch between serial and parallel sweep at n=%d\n", n);
            return 1;
        }
        const double ts = time_ms(spec, norm, pinfi::sweep_serial, reps);
        const double tp = time_ms(spec, norm, pinfi::sweep, reps);
        std::printf("%6dx%-4d %12.2f %12.2f %8.2fx\n", n, n, ts, tp, ts / tp);
    }
    return 0;
}
