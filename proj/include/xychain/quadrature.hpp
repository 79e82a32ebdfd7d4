#pragma once

#include "xychain/errors.hpp"
#include "xychain/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace xychain {

// Gauss-Kronrod 7-15 pair, QUADPACK abscissae/weights on [-1,1].
// Odd-index Kronrod nodes are the embedded Gauss-7 nodes.
namespace gk {

inline constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

} // namespace gk

struct PanelEstimate {
    double value = 0.0;
    double error = 0.0; // |K15 - G7|, the usual conservative surrogate
};

template <class F>
PanelEstimate gk15_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(c);
    double resk = gk::wgk[7] * fc;
    double resg = gk::wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = hw * gk::xgk[j];
        const double s = f(c - dx) + f(c + dx);
        resk += gk::wgk[j] * s;
        if (j & 1) resg += gk::wg[(j - 1) / 2] * s;
    }
    return {resk * hw, std::abs((resk - resg) * hw)};
}

// Adaptive bisection, worst-panel-first. `interior` lists points in (a,b) where the
// integrand is seeded with a panel edge (kinks of the dispersion, oscillation scale);
// they need not be sorted or deduplicated. Deterministic: ties in the error scan
// resolve to the left-most panel, so results are bit-stable across runs.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg,
                          std::vector<double> interior = {}) {
    if (a == b) return 0.0;
    if (b < a) throw DomainError("integration interval is reversed");

    std::vector<double> edges;
    edges.push_back(a);
    for (double x : interior)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    struct Panel {
        double a, b;
        PanelEstimate est;
    };
    std::vector<Panel> panels;
    panels.reserve(64);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        panels.push_back({edges[i], edges[i + 1], gk15_panel(f, edges[i], edges[i + 1])});

    while (true) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total_err += panels[i].est.error;
            if (panels[i].est.error > panels[worst].est.error ||
                (panels[i].est.error == panels[worst].est.error &&
                 panels[i].a < panels[worst].a))
                worst = i;
        }
        if (total_err <= cfg.abs_tol) break;
        if (static_cast<int>(panels.size()) >= cfg.max_subdivisions)
            throw QuadratureNonConvergence("panel budget exhausted before tolerance");
        const Panel p = panels[worst];
        const double m = 0.5 * (p.a + p.b);
        panels[worst] = {p.a, m, gk15_panel(f, p.a, m)};
        panels.push_back({m, p.b, gk15_panel(f, m, p.b)});
    }

    // Sum left-to-right for run-to-run reproducibility.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double total = 0.0;
    for (const Panel& p : panels) total += p.est.value;
    return total;
}

} // namespace xychain
