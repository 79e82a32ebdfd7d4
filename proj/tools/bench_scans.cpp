// Timing comparison of the serial and OpenMP sweep paths on a realistic
// field scan. On a single-core host the two should be at parity; the point
// of the benchmark is catching parallel-path regressions, not a speedup brag.

#include <cstdio>

#include "xychain/scans.hpp"

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
static int threads() { return omp_get_max_threads(); }
#else
#include <chrono>
static double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
static int threads() { return 1; }
#endif

int main() {
    using namespace xychain;
    const double gamma = 0.5, t = 0.05;
    const auto grid = linspace(0.0, 1.5, 120);
    const TripleConfig config = TripleConfig::B(2);

    std::printf("sweep_field benchmark: %zu grid points, gamma=%g, T=%g, threads=%d\n",
                grid.size(), gamma, t, threads());

    // Warm-up fills the contraction cache so both timed runs see equal state.
    (void)sweep_field(gamma, t, config, grid, {}, ExecutionPolicy::Serial);

    double t0 = now();
    auto serial = sweep_field(gamma, t, config, grid, {}, ExecutionPolicy::Serial);
    double t1 = now();
    auto parallel = sweep_field(gamma, t, config, grid, {}, ExecutionPolicy::Parallel);
    double t2 = now();

    int mismatches = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (serial[i].neg_middle != parallel[i].neg_middle ||
            serial[i].conc_ij != parallel[i].conc_ij)
            ++mismatches;

    std::printf("%-10s %10s\n", "path", "seconds");
    std::printf("%-10s %10.3f\n", "serial", t1 - t0);
    std::printf("%-10s %10.3f\n", "parallel", t2 - t1);
    std::printf("speedup %.2fx, row mismatches: %d\n", (t1 - t0) / (t2 - t1), mismatches);
    return mismatches == 0 ? 0 : 1;
}
