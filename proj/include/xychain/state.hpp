#pragma once

#include "xychain/correlators.hpp"

#include <array>

namespace xychain {

// 8x8 real symmetric three-spin reduced density matrix. Row index r = 4a+2b+c,
// a,b,c in {0 (up), 1 (down)} for sites i, j, k (site i most significant).
struct Rho3 {
    std::array<double, 64> m{};

    double& at(int r, int c) { return m[r * 8 + c]; }
    double at(int r, int c) const { return m[r * 8 + c]; }
    double trace() const;
};

// 4x4 two-spin state, basis 2a + b. X-shaped in the non-broken phase.
struct Rho2 {
    std::array<double, 16> m{};

    double& at(int r, int c) { return m[r * 4 + c]; }
    double at(int r, int c) const { return m[r * 4 + c]; }
    double trace() const;
};

enum class Site { First, Middle, Last };

// rho = (1/8) sum <S> S over the parity-even Pauli strings (19 correlators +
// identity). Throws NotPositive when the minimum eigenvalue drops below -1e-6
// (inconsistent correlator input, e.g. quadrature tolerance too loose).
Rho3 assemble_rho3(const TripleCorrelators& c);
Rho3 assemble_rho3(const CorrelatorSet& c); // translation-invariant z

// tr(rho S) for each nonvanishing string; inverse of assemble_rho3.
TripleCorrelators correlators_of(const Rho3& rho);

Rho2 partial_trace(const Rho3& rho, Site traced_out);

// Single-site state diag((1+z)/2, (1-z)/2) from tracing one leg of a pair.
std::array<double, 4> partial_trace_pair(const Rho2& rho, Site traced_out);

// X-state from pair correlators.
Rho2 make_pair_state(double z_a, double z_b, double zz, double xx, double yy);

Rho2 reduced_pair(int d, const GTable& table);
Rho2 reduced_pair(int d, const ModelParams& p, const QuadratureConfig& quad = {});

// Smallest eigenvalue (Jacobi), for positivity checks.
double min_eigenvalue(const Rho3& rho);
double min_eigenvalue(const Rho2& rho);

} // namespace xychain
