#include "xychain/correlators.hpp"

#include "xychain/errors.hpp"
#include "xychain/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace xychain {

namespace {

// tanh(lam/2t)/lam, continued smoothly through lam -> 0 (value 1/2t); at t = 0
// the pointwise limit 1/lam is used (panel edges are placed on dispersion zeros,
// so quadrature nodes never hit lam = 0 exactly).
double thermal_kernel(double lam, double t) {
    if (t == 0.0) return 1.0 / lam;
    const double x = lam / (2.0 * t);
    if (x < 1e-4) {
        const double x2 = x * x;
        return (1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0) / (2.0 * t);
    }
    return std::tanh(x) / lam;
}

std::vector<double> integrand_breaks(int k, const ModelParams& p) {
    std::vector<double> br;
    // seed one panel edge per oscillation half-period of cos(k phi)
    const int n = std::max(4, std::abs(k));
    for (int i = 1; i < n; ++i) br.push_back(std::numbers::pi * i / n);
    // dispersion zero at phi = arccos(h) (kink at t = 0, jump when gamma = 0)
    if (p.h <= 1.0) br.push_back(std::acos(p.h));
    return br;
}

} // namespace

double g_k(int k, const ModelParams& p, const QuadratureConfig& quad) {
    p.validate();
    if (p.t > 1e300) return 0.0; // tanh kernel underflows anyway; avoid 0*inf
    auto f = [k, &p](double phi) {
        const double lam = dispersion(p, phi);
        const double num = std::cos(k * phi) * (std::cos(phi) - p.h) -
                           p.gamma * std::sin(k * phi) * std::sin(phi);
        return num * thermal_kernel(lam, p.t);
    };
    const double val =
        integrate_adaptive(f, 0.0, std::numbers::pi, quad, integrand_breaks(k, p));
    return val / std::numbers::pi;
}

GTable GTable::build(const ModelParams& p, int kmax, const QuadratureConfig& quad) {
    p.validate();
    if (kmax < 0) throw DomainError("kmax must be >= 0");
    GTable t;
    t.params_ = p;
    t.kmax_ = kmax;
    t.g_.resize(2 * kmax + 1);
    for (int k = -kmax; k <= kmax; ++k) t.g_[k + kmax] = g_k(k, p, quad);
    return t;
}

double GTable::at(int k) const {
    if (k < -kmax_ || k > kmax_) throw DomainError("G table index out of range");
    return g_[k + kmax_];
}

namespace {

using CacheKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t,
                            std::uint64_t, int>;

CacheKey make_key(const ModelParams& p, const QuadratureConfig& q) {
    return {std::bit_cast<std::uint64_t>(p.h), std::bit_cast<std::uint64_t>(p.gamma),
            std::bit_cast<std::uint64_t>(p.t), std::bit_cast<std::uint64_t>(q.abs_tol),
            q.max_subdivisions};
}

} // namespace

struct GTableCache::Impl {
    std::mutex mu;
    std::map<CacheKey, std::shared_ptr<const GTable>> tables;
};

std::shared_ptr<GTableCache::Impl> GTableCache::make_impl() {
    return std::make_shared<Impl>();
}

std::shared_ptr<const GTable> GTableCache::get(const ModelParams& p, int kmax,
                                               const QuadratureConfig& quad) {
    const CacheKey key = make_key(p, quad);
    {
        std::lock_guard lock(impl_->mu);
        auto it = impl_->tables.find(key);
        if (it != impl_->tables.end() && it->second->kmax() >= kmax) return it->second;
    }
    auto fresh = std::make_shared<const GTable>(GTable::build(p, kmax, quad));
    std::lock_guard lock(impl_->mu);
    auto& slot = impl_->tables[key];
    if (!slot || slot->kmax() < kmax) slot = std::move(fresh);
    return slot;
}

void GTableCache::clear() {
    std::lock_guard lock(impl_->mu);
    impl_->tables.clear();
}

GTableCache& GTableCache::global() {
    static GTableCache cache;
    return cache;
}

namespace {

// Bulk contraction: <A_p B_q> = G_{q-p}.
struct TableContraction {
    const GTable* g;
    double operator()(int p, int q) const { return g->at(q - p); }
};

WickEngine<TableContraction> engine(const GTable& t) {
    return WickEngine<TableContraction>{TableContraction{&t}};
}

} // namespace

CorrelatorSet collapse(const TripleCorrelators& c) {
    CorrelatorSet s;
    s.z = (c.z1 + c.z2 + c.z3) / 3.0;
    s.zz_alpha = c.zz12;
    s.zz_beta = c.zz23;
    s.zz_gamma = c.zz13;
    s.xx_alpha = c.xx12;
    s.xx_beta = c.xx23;
    s.xx_gamma = c.xx13;
    s.yy_alpha = c.yy12;
    s.yy_beta = c.yy23;
    s.yy_gamma = c.yy13;
    s.zzz = c.zzz;
    s.xxz = c.xxz;
    s.zxx = c.zxx;
    s.xzx = c.xzx;
    s.yyz = c.yyz;
    s.zyy = c.zyy;
    s.yzy = c.yzy;
    return s;
}

double magnetization(const ModelParams& p, const QuadratureConfig& quad) {
    return -g_k(0, p, quad); // sigma^z = -A B
}

double two_point(PairKind kind, int d, const GTable& table) {
    if (d < 1) throw DomainError("pair distance must be >= 1");
    auto eng = engine(table);
    switch (kind) {
    case PairKind::XX: return eng.xx(0, d);
    case PairKind::YY: return eng.yy(0, d);
    case PairKind::ZZ: return eng.zz(0, d);
    }
    throw DomainError("unknown pair kind");
}

double two_point(PairKind kind, int d, const ModelParams& p,
                 const QuadratureConfig& quad) {
    if (d < 1) throw DomainError("pair distance must be >= 1");
    auto table = GTableCache::global().get(p, d + 1, quad);
    return two_point(kind, d, *table);
}

double three_point(TripleKind kind, const TripleGeometry& geom, const GTable& table) {
    geom.validate();
    const int a = geom.alpha, s = geom.span();
    auto eng = engine(table);
    switch (kind) {
    case TripleKind::ZZZ: return eng.zzz(0, a, s);
    case TripleKind::XXZ: return eng.xxz(0, a, s);
    case TripleKind::YYZ: return eng.yyz(0, a, s);
    case TripleKind::XZX: return eng.xzx(0, a, s);
    case TripleKind::YZY: return eng.yzy(0, a, s);
    // reflection identities, exact by definition
    case TripleKind::ZXX: return eng.xxz(0, geom.beta, s);
    case TripleKind::ZYY: return eng.yyz(0, geom.beta, s);
    }
    throw DomainError("unknown triple kind");
}

double three_point(TripleKind kind, const TripleGeometry& geom, const ModelParams& p,
                   const QuadratureConfig& quad) {
    geom.validate();
    auto table = GTableCache::global().get(p, geom.span() + 1, quad);
    return three_point(kind, geom, *table);
}

TripleCorrelators triple_correlators(const TripleGeometry& geom, const GTable& table) {
    geom.validate();
    auto eng = engine(table);
    TripleCorrelators c = eng.triple(0, geom.alpha, geom.span());
    // keep the definitional reflection identities bit-exact
    c.zxx = eng.xxz(0, geom.beta, geom.span());
    c.zyy = eng.yyz(0, geom.beta, geom.span());
    return c;
}

CorrelatorSet correlator_set(const TripleGeometry& geom, const ModelParams& p,
                             const QuadratureConfig& quad) {
    geom.validate();
    auto table = GTableCache::global().get(p, geom.span() + 1, quad);
    return collapse(triple_correlators(geom, *table));
}

} // namespace xychain
