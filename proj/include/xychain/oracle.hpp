#pragma once

#include "xychain/state.hpp"

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

namespace xychain {

// Open chain of N sites. Dense ED works up to N = 14 (2^N storage); the
// free-fermion contraction matrix only needs the N x N single-particle problem
// and is allowed a much larger N (used for thermodynamic-limit convergence).
struct FiniteChain {
    int n_sites = 8;
    ModelParams params{};

    void validate() const;
    static constexpr int kEdMax = 14;
    static constexpr int kFermionMax = 1024;
};

// H = -sum_l [(1+gamma)/4 sx sx + (1-gamma)/4 sy sy] - h/2 sum_l sz, open ends.
// Basis index bit order matches Rho3: site 1 is the most significant bit, up = 0.
Eigen::MatrixXd build_hamiltonian(const FiniteChain& chain);

struct EdSpectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors; // columns
};

EdSpectrum diagonalize(const Eigen::MatrixXd& h);

// Gibbs state exp(-H/t)/Z; at t = 0 the normalized projector onto the
// eigenvectors within 1e-10 of the ground energy (the non-broken mixture).
Eigen::MatrixXd thermal_state(const EdSpectrum& spec, double t);
Eigen::MatrixXd thermal_state(const Eigen::MatrixXd& h, double t);

// Partial trace onto the listed sites (1-based, strictly increasing).
Rho3 reduce_to_sites(const Eigen::MatrixXd& rho_full, int n_sites,
                     const std::array<int, 3>& sites);
Rho2 reduce_to_sites(const Eigen::MatrixXd& rho_full, int n_sites,
                     const std::array<int, 2>& sites);

// Open-chain contraction matrix g[l][m] = <A_l B_m> (1-based sites) from the
// N x N Bogoliubov problem, thermally occupied. Bulk rows converge to G_{m-l}.
struct GMatrix {
    int n = 0;
    std::vector<double> g; // row-major n x n

    double at(int l, int m) const { return g[(l - 1) * n + (m - 1)]; }
};

GMatrix finite_g_matrix(const FiniteChain& chain);

// Quasiparticle energies (singular values, descending).
std::vector<double> single_particle_energies(const FiniteChain& chain);

// Same Wick/determinant machinery as the bulk engine, with g[l][m] in place
// of G_{m-l}. This path involves no quadrature at all.
TripleCorrelators finite_triple(const GMatrix& g, const std::array<int, 3>& sites);
CorrelatorSet finite_correlators(const GMatrix& g, const std::array<int, 3>& sites);
Rho3 finite_rho3(const GMatrix& g, const std::array<int, 3>& sites);

// Three-engine comparison at one parameter point: ED (N <= 14), open-chain
// free fermions, and the thermodynamic-limit quadrature engine.
struct CompareReport {
    struct Entry {
        std::string name;
        double ed, ff, thermo;
    };
    double dev_ed_ff = 0, dev_ed_thermo = 0, dev_ff_thermo = 0; // max-abs over Rho3
    std::vector<Entry> correlators;
};

CompareReport compare(const ModelParams& p, int n_sites,
                      const std::array<int, 3>& sites,
                      const QuadratureConfig& quad = {});

// Centered bulk sites for a geometry on an N-site chain.
std::array<int, 3> centered_sites(int n_sites, const TripleGeometry& geom);

} // namespace xychain
