#pragma once

#include "xychain/errors.hpp"

#include <cmath>

namespace xychain {

// XY chain in a transverse field, ferromagnetic convention:
//   H = -sum_l [ (1+gamma)/4 sx_l sx_{l+1} + (1-gamma)/4 sy_l sy_{l+1} ] - h/2 sum_l sz_l
// gamma = 1 is the transverse Ising chain, gamma -> 0 the isotropic XX chain.
// t is temperature in units of the coupling (k_B = 1); t = 0 means ground state.
struct ModelParams {
    double h = 1.0;
    double gamma = 1.0;
    double t = 0.0;

    void validate() const {
        if (!std::isfinite(h) || !std::isfinite(gamma) || !std::isfinite(t))
            throw DomainError("model parameters must be finite");
        if (h < 0.0) throw DomainError("h must be >= 0 (map h < 0 by symmetry)");
        if (gamma < 0.0 || gamma > 1.0) throw DomainError("gamma must lie in [0, 1]");
        if (t < 0.0) throw DomainError("temperature must be >= 0");
    }
};

// Quasiparticle dispersion Lambda(phi) = sqrt(gamma^2 sin^2 phi + (h - cos phi)^2).
// Gapless only at h = 1 (phi = 0) and along gamma = 0, h <= 1 (phi = arccos h).
inline double dispersion(const ModelParams& p, double phi) {
    const double s = p.gamma * std::sin(phi);
    const double c = p.h - std::cos(phi);
    return std::hypot(s, c);
}

// Three sites i < j < k with alpha = j - i, beta = k - j.
struct TripleGeometry {
    int alpha = 1;
    int beta = 1;

    int span() const { return alpha + beta; } // k - i

    void validate() const {
        if (alpha < 1 || beta < 1) throw DomainError("site separations must be >= 1");
    }
};

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_subdivisions = 2048;
};

} // namespace xychain
