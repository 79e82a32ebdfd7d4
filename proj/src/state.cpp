#include "xychain/state.hpp"

#include "xychain/errors.hpp"
#include "xychain/linalg.hpp"

#include <cmath>
#include <vector>

namespace xychain {

double Rho3::trace() const {
    double s = 0;
    for (int r = 0; r < 8; ++r) s += at(r, r);
    return s;
}

double Rho2::trace() const {
    double s = 0;
    for (int r = 0; r < 4; ++r) s += at(r, r);
    return s;
}

namespace {

// Real 2x2 blocks: 'y' stands for i*sigma^y so every string stays real; a string
// with 2n y's then needs an extra factor (-1)^n.
using M2 = std::array<double, 4>;
constexpr M2 kId{1, 0, 0, 1};
constexpr M2 kX{0, 1, 1, 0};
constexpr M2 kIY{0, 1, -1, 0};
constexpr M2 kZ{1, 0, 0, -1};

const M2& block(char p) {
    switch (p) {
    case 'i': return kId;
    case 'x': return kX;
    case 'y': return kIY;
    case 'z': return kZ;
    }
    throw Error("bad Pauli label");
}

std::array<double, 64> pauli_string(char pi, char pj, char pk) {
    const M2 &a = block(pi), &b = block(pj), &c = block(pk);
    int ny = (pi == 'y') + (pj == 'y') + (pk == 'y');
    if (ny % 2 != 0) throw Error("odd-y strings are imaginary, not representable");
    const double sign = (ny == 2) ? -1.0 : 1.0;
    std::array<double, 64> out{};
    for (int r = 0; r < 8; ++r)
        for (int col = 0; col < 8; ++col) {
            const int a1 = r >> 2, b1 = (r >> 1) & 1, c1 = r & 1;
            const int a2 = col >> 2, b2 = (col >> 1) & 1, c2 = col & 1;
            out[r * 8 + col] =
                sign * a[a1 * 2 + a2] * b[b1 * 2 + b2] * c[c1 * 2 + c2];
        }
    return out;
}

struct StringTerm {
    double TripleCorrelators::*field;
    std::array<double, 64> mat;
};

const std::vector<StringTerm>& string_terms() {
    static const std::vector<StringTerm> terms = [] {
        std::vector<StringTerm> v;
        auto add = [&v](double TripleCorrelators::*f, char a, char b, char c) {
            v.push_back({f, pauli_string(a, b, c)});
        };
        add(&TripleCorrelators::z1, 'z', 'i', 'i');
        add(&TripleCorrelators::z2, 'i', 'z', 'i');
        add(&TripleCorrelators::z3, 'i', 'i', 'z');
        add(&TripleCorrelators::zz12, 'z', 'z', 'i');
        add(&TripleCorrelators::zz23, 'i', 'z', 'z');
        add(&TripleCorrelators::zz13, 'z', 'i', 'z');
        add(&TripleCorrelators::xx12, 'x', 'x', 'i');
        add(&TripleCorrelators::xx23, 'i', 'x', 'x');
        add(&TripleCorrelators::xx13, 'x', 'i', 'x');
        add(&TripleCorrelators::yy12, 'y', 'y', 'i');
        add(&TripleCorrelators::yy23, 'i', 'y', 'y');
        add(&TripleCorrelators::yy13, 'y', 'i', 'y');
        add(&TripleCorrelators::zzz, 'z', 'z', 'z');
        add(&TripleCorrelators::xxz, 'x', 'x', 'z');
        add(&TripleCorrelators::xzx, 'x', 'z', 'x');
        add(&TripleCorrelators::zxx, 'z', 'x', 'x');
        add(&TripleCorrelators::yyz, 'y', 'y', 'z');
        add(&TripleCorrelators::yzy, 'y', 'z', 'y');
        add(&TripleCorrelators::zyy, 'z', 'y', 'y');
        return v;
    }();
    return terms;
}

} // namespace

Rho3 assemble_rho3(const TripleCorrelators& c) {
    Rho3 rho;
    for (int r = 0; r < 8; ++r) rho.at(r, r) = 1.0;
    for (const auto& term : string_terms()) {
        const double coeff = c.*(term.field);
        if (coeff == 0.0) continue;
        for (int e = 0; e < 64; ++e) rho.m[e] += coeff * term.mat[e];
    }
    for (double& e : rho.m) e /= 8.0;
    const double lo = min_eigenvalue(rho);
    if (lo < -1e-6)
        throw NotPositive("assembled state has eigenvalue " + std::to_string(lo));
    return rho;
}

Rho3 assemble_rho3(const CorrelatorSet& s) {
    TripleCorrelators c;
    c.z1 = c.z2 = c.z3 = s.z;
    c.zz12 = s.zz_alpha;
    c.zz23 = s.zz_beta;
    c.zz13 = s.zz_gamma;
    c.xx12 = s.xx_alpha;
    c.xx23 = s.xx_beta;
    c.xx13 = s.xx_gamma;
    c.yy12 = s.yy_alpha;
    c.yy23 = s.yy_beta;
    c.yy13 = s.yy_gamma;
    c.zzz = s.zzz;
    c.xxz = s.xxz;
    c.xzx = s.xzx;
    c.zxx = s.zxx;
    c.yyz = s.yyz;
    c.yzy = s.yzy;
    c.zyy = s.zyy;
    return assemble_rho3(c);
}

TripleCorrelators correlators_of(const Rho3& rho) {
    TripleCorrelators c;
    for (const auto& term : string_terms()) {
        double tr = 0;
        for (int e = 0; e < 64; ++e) tr += rho.m[e] * term.mat[e]; // strings are symmetric
        c.*(term.field) = tr;
    }
    return c;
}

Rho2 partial_trace(const Rho3& rho, Site traced_out) {
    // bit weights of (kept_hi, kept_lo, traced) within r = 4a + 2b + c
    int hi = 4, lo = 2, tr = 1;
    switch (traced_out) {
    case Site::First: hi = 2, lo = 1, tr = 4; break;
    case Site::Middle: hi = 4, lo = 1, tr = 2; break;
    case Site::Last: hi = 4, lo = 2, tr = 1; break;
    }
    Rho2 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const int rh = r >> 1, rl = r & 1, ch = c >> 1, cl = c & 1;
            double s = 0;
            for (int x = 0; x < 2; ++x)
                s += rho.at(rh * hi + rl * lo + x * tr, ch * hi + cl * lo + x * tr);
            out.at(r, c) = s;
        }
    return out;
}

std::array<double, 4> partial_trace_pair(const Rho2& rho, Site traced_out) {
    if (traced_out == Site::Middle) throw DomainError("a pair has no middle site");
    const int keep = traced_out == Site::Last ? 2 : 1;
    const int tr = traced_out == Site::Last ? 1 : 2;
    std::array<double, 4> out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int x = 0; x < 2; ++x)
                out[r * 2 + c] += rho.at(r * keep + x * tr, c * keep + x * tr);
    return out;
}

Rho2 make_pair_state(double z_a, double z_b, double zz, double xx, double yy) {
    Rho2 r;
    r.at(0, 0) = (1 + z_a + z_b + zz) / 4;
    r.at(1, 1) = (1 + z_a - z_b - zz) / 4;
    r.at(2, 2) = (1 - z_a + z_b - zz) / 4;
    r.at(3, 3) = (1 - z_a - z_b + zz) / 4;
    r.at(0, 3) = r.at(3, 0) = (xx - yy) / 4;
    r.at(1, 2) = r.at(2, 1) = (xx + yy) / 4;
    return r;
}

Rho2 reduced_pair(int d, const GTable& table) {
    if (d < 1) throw DomainError("pair distance must be >= 1");
    const double z = -table.at(0);
    return make_pair_state(z, z, two_point(PairKind::ZZ, d, table),
                           two_point(PairKind::XX, d, table),
                           two_point(PairKind::YY, d, table));
}

Rho2 reduced_pair(int d, const ModelParams& p, const QuadratureConfig& quad) {
    if (d < 1) throw DomainError("pair distance must be >= 1");
    auto table = GTableCache::global().get(p, d + 1, quad);
    return reduced_pair(d, *table);
}

double min_eigenvalue(const Rho3& rho) {
    return jacobi_eigenvalues({rho.m.begin(), rho.m.end()}, 8).front();
}

double min_eigenvalue(const Rho2& rho) {
    return jacobi_eigenvalues({rho.m.begin(), rho.m.end()}, 4).front();
}

} // namespace xychain
