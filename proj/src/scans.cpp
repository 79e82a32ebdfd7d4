#include "xychain/scans.hpp"

#include "xychain/errors.hpp"

#include <cmath>
#include <limits>

namespace xychain {

PairRangeResult pair_range(const ModelParams& p, int d_max,
                           const QuadratureConfig& quad) {
    if (d_max < 1) throw DomainError("d_max must be >= 1");
    constexpr double tol = 1e-9;
    auto table = GTableCache::global().get(p, d_max + 1, quad);
    PairRangeResult res;
    // no early exit: concurrence need not be monotone in d near the
    // factorizing field
    for (int d = 1; d <= d_max; ++d)
        if (concurrence(reduced_pair(d, *table)) > tol) {
            res.range = d;
            res.capped = d == d_max;
        }
    return res;
}

namespace {

SweepRow sweep_point(double gamma, double t, const TripleConfig& config, double h,
                     const QuadratureConfig& quad) {
    SweepRow row;
    row.h = h;
    row.t = t;
    row.alpha = config.geom.alpha;
    row.beta = config.geom.beta;
    try {
        const EntanglementReport rep =
            analyze_triple(ModelParams{h, gamma, t}, config.geom, quad);
        row.neg_first = rep.neg_first.value;
        row.neg_middle = rep.neg_middle.value;
        row.neg_last = rep.neg_last.value;
        row.conc_ij = rep.conc_ij;
        row.conc_jk = rep.conc_jk;
        row.conc_ik = rep.conc_ik;
        row.class_label = class_label(rep.classification);
    } catch (const Error& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        row.neg_first = row.neg_middle = row.neg_last = nan;
        row.conc_ij = row.conc_jk = row.conc_ik = nan;
        row.failed = true;
        row.status = e.what();
    }
    return row;
}

} // namespace

std::vector<SweepRow> sweep_field(double gamma, double t, const TripleConfig& config,
                                  const std::vector<double>& h_grid,
                                  const QuadratureConfig& quad,
                                  ExecutionPolicy policy) {
    if (h_grid.empty()) throw DomainError("empty field grid");
    config.geom.validate();
    const int n = static_cast<int>(h_grid.size());
    std::vector<SweepRow> rows(n);
    if (policy == ExecutionPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            rows[i] = sweep_point(gamma, t, config, h_grid[i], quad);
    } else {
        for (int i = 0; i < n; ++i)
            rows[i] = sweep_point(gamma, t, config, h_grid[i], quad);
    }
    return rows;
}

namespace {

constexpr double kDeathTol = 1e-9;
constexpr double kBracketHalfWidth = 1e-4;

// The four thermal scalars of the adjacent triple, cheapest first.
struct ThermalPoint {
    double conc_ext, conc_adj, neg_ext, neg_centr;
};

ThermalPoint thermal_point(double gamma, double h, double t,
                           const QuadratureConfig& quad) {
    const EntanglementReport rep =
        analyze_triple(ModelParams{h, gamma, t}, TripleGeometry{1, 1}, quad);
    return {rep.conc_ik, rep.conc_ij, rep.neg_first.value, rep.neg_middle.value};
}

Threshold locate(double gamma, double h, const QuadratureConfig& quad,
                 double ThermalPoint::*scalar, const std::vector<double>& grid,
                 const std::vector<ThermalPoint>& scout) {
    Threshold th;
    const auto alive = [&](const ThermalPoint& pt) { return pt.*scalar > kDeathTol; };
    if (!alive(scout.front())) return th; // dead at t = 0: threshold absent

    int last_alive = 0;
    bool monotone = true;
    for (int i = 1; i < static_cast<int>(scout.size()); ++i)
        if (alive(scout[i])) {
            if (i != last_alive + 1) monotone = false; // revived after a dead gap
            last_alive = i;
        }
    if (last_alive + 1 == static_cast<int>(scout.size()))
        throw DomainError("t_max does not bracket every death temperature");

    th.present = true;
    th.flagged = !monotone;
    double lo = grid[last_alive], hi = grid[last_alive + 1];
    if (monotone) {
        while (hi - lo > 2 * kBracketHalfWidth) {
            const double mid = 0.5 * (lo + hi);
            (alive(thermal_point(gamma, h, mid, quad)) ? lo : hi) = mid;
        }
    } else {
        // non-monotone within the scout grid: finest-grid scan over the last
        // alive interval instead of trusting bisection
        const int steps = std::max(2, static_cast<int>((hi - lo) / kBracketHalfWidth));
        double died = hi;
        for (int i = 1; i <= steps; ++i) {
            const double t = lo + (hi - lo) * i / steps;
            if (alive(thermal_point(gamma, h, t, quad)))
                lo = t;
            else {
                died = t;
                break;
            }
        }
        hi = died;
    }
    th.value = 0.5 * (lo + hi);
    th.half_width = 0.5 * (hi - lo);
    return th;
}

} // namespace

ThresholdSet thermal_thresholds(double gamma, double h, double t_max,
                                const QuadratureConfig& quad) {
    if (!(t_max > 0)) throw DomainError("t_max must be > 0");
    const int scout_n = 200;
    const std::vector<double> grid = linspace(0.0, t_max, scout_n);
    std::vector<ThermalPoint> scout(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(grid.size()); ++i)
        scout[i] = thermal_point(gamma, h, grid[i], quad);

    ThresholdSet set;
    set.t_c2 = locate(gamma, h, quad, &ThermalPoint::conc_ext, grid, scout);
    set.t_c1 = locate(gamma, h, quad, &ThermalPoint::conc_adj, grid, scout);
    set.t_n_ext = locate(gamma, h, quad, &ThermalPoint::neg_ext, grid, scout);
    set.t_n_centr = locate(gamma, h, quad, &ThermalPoint::neg_centr, grid, scout);
    return set;
}

double factorizing_field(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw DomainError("factorizing field defined for gamma in (0, 1]");
    return std::sqrt(1.0 - gamma * gamma);
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw DomainError("grid needs at least one point");
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

} // namespace xychain
