#pragma once

#include "xychain/entanglement.hpp"

#include <string>
#include <vector>

namespace xychain {

// The two studied spin arrangements: (a) a spin facing an adjacent pair at
// distance d, (b) a symmetric triple with both gaps equal to d.
struct TripleConfig {
    TripleGeometry geom{1, 1};

    static TripleConfig A(int d) { return {{d, 1}}; }
    static TripleConfig B(int d) { return {{d, d}}; }
};

struct PairRangeResult {
    int range = 0;   // largest d <= d_max with pair concurrence > 1e-9 (0 if none)
    bool capped = false; // concurrence still alive at d_max: true range unknown
};

PairRangeResult pair_range(const ModelParams& p, int d_max,
                           const QuadratureConfig& quad = {});

enum class ExecutionPolicy { Serial, Parallel };

struct SweepRow {
    double h = 0, t = 0;
    int alpha = 0, beta = 0;
    double neg_first = 0, neg_middle = 0, neg_last = 0;
    double conc_ij = 0, conc_jk = 0, conc_ik = 0;
    std::string class_label;
    bool failed = false;
    std::string status; // error message for failed rows
};

// One row per grid point, emitted in grid order regardless of evaluation
// order; per-point failures are recorded in the row instead of aborting.
std::vector<SweepRow> sweep_field(double gamma, double t, const TripleConfig& config,
                                  const std::vector<double>& h_grid,
                                  const QuadratureConfig& quad = {},
                                  ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct Threshold {
    bool present = false; // absent when the quantity is already dead at t = 0
    double value = 0;
    double half_width = 0;
    bool flagged = false; // non-monotone sign pattern, located by grid fallback
};

// Death temperatures for the adjacent triple (alpha = beta = 1):
// external-pair concurrence, adjacent-pair concurrence, external-cut
// negativity, central-cut negativity. When all exist they are ordered
// t_c2 <= t_c1 <= t_n_ext <= t_n_centr.
struct ThresholdSet {
    Threshold t_c2, t_c1, t_n_ext, t_n_centr;
};

ThresholdSet thermal_thresholds(double gamma, double h, double t_max,
                                const QuadratureConfig& quad = {});

// h_f = sqrt(1 - gamma^2), the field where the ground state factorizes.
double factorizing_field(double gamma);

std::vector<double> linspace(double lo, double hi, int n);

} // namespace xychain
