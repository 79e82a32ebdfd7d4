#include "xychain/oracle.hpp"

#include "xychain/errors.hpp"
#include "xychain/wick.hpp"

#include <algorithm>
#include <cmath>

namespace xychain {

void FiniteChain::validate() const {
    params.validate();
    if (n_sites < 2) throw DomainError("chain needs at least 2 sites");
    if (n_sites > kFermionMax) throw SizeLimit("chain too long for the dense solvers");
}

Eigen::MatrixXd build_hamiltonian(const FiniteChain& chain) {
    chain.validate();
    const int n = chain.n_sites;
    if (n > FiniteChain::kEdMax)
        throw SizeLimit("dense ED is capped at N = " + std::to_string(FiniteChain::kEdMax));
    const double jx = (1.0 + chain.params.gamma) / 4.0;
    const double jy = (1.0 - chain.params.gamma) / 4.0;
    const double h = chain.params.h;
    const long dim = 1L << n;
    Eigen::MatrixXd ham = Eigen::MatrixXd::Zero(dim, dim);
    for (long r = 0; r < dim; ++r) {
        double diag = 0; // -h/2 sum sz, sz = +1 for a clear bit (up)
        for (int s = 0; s < n; ++s) diag -= 0.5 * h * ((r >> s) & 1 ? -1.0 : 1.0);
        ham(r, r) = diag;
        for (int s = 0; s < n - 1; ++s) {
            // bond between sites s+1 and s+2 (1-based); site 1 = MSB
            const long b1 = 1L << (n - 1 - s), b2 = 1L << (n - 2 - s);
            const long rr = r ^ b1 ^ b2;
            const bool equal = ((r & b1) != 0) == ((r & b2) != 0);
            // sx sx flips both bits with +1; sy sy with -1 if the bits agree else +1
            ham(rr, r) += -jx - jy * (equal ? -1.0 : 1.0);
        }
    }
    return ham;
}

EdSpectrum diagonalize(const Eigen::MatrixXd& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw EigenNonConvergence("dense ED failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXd thermal_state(const EdSpectrum& spec, double t) {
    if (t < 0) throw DomainError("temperature must be >= 0");
    const long dim = spec.values.size();
    Eigen::VectorXd w(dim);
    const double e0 = spec.values.minCoeff();
    if (t == 0.0) {
        for (long i = 0; i < dim; ++i) w(i) = spec.values(i) <= e0 + 1e-10 ? 1.0 : 0.0;
    } else {
        for (long i = 0; i < dim; ++i) w(i) = std::exp(-(spec.values(i) - e0) / t);
    }
    w /= w.sum();
    return spec.vectors * w.asDiagonal() * spec.vectors.transpose();
}

Eigen::MatrixXd thermal_state(const Eigen::MatrixXd& h, double t) {
    return thermal_state(diagonalize(h), t);
}

namespace {

// Scatter the kept-site bits into a full-chain basis index. Site 1 is the MSB,
// so site s occupies bit (n - s).
template <std::size_t K>
long scatter(int n, const std::array<int, K>& sites, long kept, long rest) {
    long idx = 0;
    int rest_bit = 0;
    std::array<bool, 64> is_kept{};
    for (int s : sites) is_kept[n - s] = true;
    for (int b = 0; b < n; ++b) {
        long bit;
        if (is_kept[b]) {
            // which kept site is this? kept index ordered as (site1..siteK) msb-first
            int ki = 0;
            for (std::size_t q = 0; q < K; ++q)
                if (n - sites[q] == b) ki = static_cast<int>(K - 1 - q);
            // kept value uses site order: site_1 highest bit
            bit = (kept >> ki) & 1;
        } else {
            bit = (rest >> rest_bit) & 1;
            ++rest_bit;
        }
        idx |= bit << b;
    }
    return idx;
}

template <std::size_t K>
void check_sites(int n, const std::array<int, K>& sites) {
    for (std::size_t q = 0; q < K; ++q) {
        if (sites[q] < 1 || sites[q] > n) throw DomainError("site index out of chain");
        if (q > 0 && sites[q] <= sites[q - 1])
            throw DomainError("sites must be strictly increasing");
    }
}

template <std::size_t K>
std::array<double, (1u << K) * (1u << K)> reduce(const Eigen::MatrixXd& rho_full,
                                                 int n, const std::array<int, K>& sites) {
    check_sites(n, sites);
    if (rho_full.rows() != (1L << n)) throw DomainError("state size mismatch");
    constexpr long kd = 1L << K;
    std::array<double, kd * kd> out{};
    const long rest_dim = 1L << (n - K);
    for (long r = 0; r < kd; ++r)
        for (long c = 0; c < kd; ++c) {
            double s = 0;
            for (long rest = 0; rest < rest_dim; ++rest)
                s += rho_full(scatter(n, sites, r, rest), scatter(n, sites, c, rest));
            out[r * kd + c] = s;
        }
    return out;
}

} // namespace

Rho3 reduce_to_sites(const Eigen::MatrixXd& rho_full, int n_sites,
                     const std::array<int, 3>& sites) {
    Rho3 rho;
    rho.m = reduce<3>(rho_full, n_sites, sites);
    return rho;
}

Rho2 reduce_to_sites(const Eigen::MatrixXd& rho_full, int n_sites,
                     const std::array<int, 2>& sites) {
    Rho2 rho;
    rho.m = reduce<2>(rho_full, n_sites, sites);
    return rho;
}

namespace {

struct Bogoliubov {
    Eigen::MatrixXd u, v; // singular vectors of A + B
    Eigen::VectorXd eps;  // singular values, descending
};

// Single-particle problem of H = sum c~ A c + 1/2 (c~ B c~ + h.c.):
// A has h on the diagonal and -1/2 on the off-diagonals, B has -gamma/2 above
// and +gamma/2 below. SVD of A + B gives phi (right), psi (left), energies.
Bogoliubov solve_single_particle(const FiniteChain& chain) {
    chain.validate();
    const int n = chain.n_sites;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int l = 0; l < n; ++l) {
        m(l, l) = chain.params.h;
        if (l + 1 < n) {
            m(l, l + 1) = -0.5 - 0.5 * chain.params.gamma; // A - gamma/2
            m(l + 1, l) = -0.5 + 0.5 * chain.params.gamma; // A + gamma/2
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success) throw EigenNonConvergence("single-particle SVD failed");
    return {svd.matrixU(), svd.matrixV(), svd.singularValues()};
}

// Occupation factor tanh(eps/2t); at t = 0 exact zero modes (the degenerate
// ground doublet below the factorizing line) get theta = 0, i.e. the equal
// ground-multiplet mixture that ED's t = 0 rule also produces.
double theta_of(double eps, double t) {
    if (t == 0.0) return eps > 1e-8 ? 1.0 : 0.0;
    return std::tanh(eps / (2.0 * t));
}

} // namespace

GMatrix finite_g_matrix(const FiniteChain& chain) {
    const Bogoliubov bog = solve_single_particle(chain);
    const int n = chain.n_sites;
    Eigen::VectorXd theta(n);
    for (int k = 0; k < n; ++k) theta(k) = theta_of(bog.eps(k), chain.params.t);
    // <A_p B_q> = -sum_k theta_k phi_k(p) psi_k(q), phi = V columns, psi = U columns
    Eigen::MatrixXd w = -bog.v * theta.asDiagonal() * bog.u.transpose();
    GMatrix g;
    g.n = n;
    g.g.resize(static_cast<std::size_t>(n) * n);
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) g.g[l * n + m] = w(l, m);
    return g;
}

std::vector<double> single_particle_energies(const FiniteChain& chain) {
    const Bogoliubov bog = solve_single_particle(chain);
    return {bog.eps.data(), bog.eps.data() + bog.eps.size()};
}

namespace {

struct GMatrixContraction {
    const GMatrix* g;
    double operator()(int l, int m) const { return g->at(l, m); }
};

} // namespace

TripleCorrelators finite_triple(const GMatrix& g, const std::array<int, 3>& sites) {
    check_sites(g.n, sites);
    WickEngine<GMatrixContraction> eng{GMatrixContraction{&g}};
    return eng.triple(sites[0], sites[1], sites[2]);
}

CorrelatorSet finite_correlators(const GMatrix& g, const std::array<int, 3>& sites) {
    return collapse(finite_triple(g, sites));
}

Rho3 finite_rho3(const GMatrix& g, const std::array<int, 3>& sites) {
    return assemble_rho3(finite_triple(g, sites));
}

std::array<int, 3> centered_sites(int n_sites, const TripleGeometry& geom) {
    geom.validate();
    const int span = geom.span();
    if (span + 1 > n_sites) throw DomainError("geometry does not fit on the chain");
    const int first = (n_sites - span + 1) / 2;
    return {first, first + geom.alpha, first + span};
}

namespace {

double max_abs_dev(const Rho3& a, const Rho3& b) {
    double m = 0;
    for (int e = 0; e < 64; ++e) m = std::max(m, std::abs(a.m[e] - b.m[e]));
    return m;
}

} // namespace

CompareReport compare(const ModelParams& p, int n_sites,
                      const std::array<int, 3>& sites, const QuadratureConfig& quad) {
    check_sites(n_sites, sites);
    const FiniteChain chain{n_sites, p};
    const TripleGeometry geom{sites[1] - sites[0], sites[2] - sites[1]};

    const Rho3 rho_ed =
        reduce_to_sites(thermal_state(build_hamiltonian(chain), p.t), n_sites, sites);
    const GMatrix g = finite_g_matrix(chain);
    const TripleCorrelators c_ff = finite_triple(g, sites);
    const Rho3 rho_ff = assemble_rho3(c_ff);
    auto table = GTableCache::global().get(p, geom.span() + 1, quad);
    const TripleCorrelators c_th = triple_correlators(geom, *table);
    const Rho3 rho_th = assemble_rho3(c_th);

    CompareReport rep;
    rep.dev_ed_ff = max_abs_dev(rho_ed, rho_ff);
    rep.dev_ed_thermo = max_abs_dev(rho_ed, rho_th);
    rep.dev_ff_thermo = max_abs_dev(rho_ff, rho_th);

    const TripleCorrelators c_ed = correlators_of(rho_ed);
    const std::array<std::pair<const char*, double TripleCorrelators::*>, 19> fields{{
        {"z1", &TripleCorrelators::z1},       {"z2", &TripleCorrelators::z2},
        {"z3", &TripleCorrelators::z3},       {"zz12", &TripleCorrelators::zz12},
        {"zz23", &TripleCorrelators::zz23},   {"zz13", &TripleCorrelators::zz13},
        {"xx12", &TripleCorrelators::xx12},   {"xx23", &TripleCorrelators::xx23},
        {"xx13", &TripleCorrelators::xx13},   {"yy12", &TripleCorrelators::yy12},
        {"yy23", &TripleCorrelators::yy23},   {"yy13", &TripleCorrelators::yy13},
        {"zzz", &TripleCorrelators::zzz},     {"xxz", &TripleCorrelators::xxz},
        {"xzx", &TripleCorrelators::xzx},     {"zxx", &TripleCorrelators::zxx},
        {"yyz", &TripleCorrelators::yyz},     {"yzy", &TripleCorrelators::yzy},
        {"zyy", &TripleCorrelators::zyy},
    }};
    for (const auto& [name, field] : fields)
        rep.correlators.push_back({name, c_ed.*field, c_ff.*field, c_th.*field});
    return rep;
}

} // namespace xychain
