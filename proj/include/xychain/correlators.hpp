#pragma once

#include "xychain/model.hpp"
#include "xychain/wick.hpp"

#include <memory>
#include <vector>

namespace xychain {

// Thermodynamic-limit contraction G_k = <A_l B_{l+k}> =
//   (1/pi) Int_0^pi [cos(k phi)(cos phi - h) - gamma sin(k phi) sin phi]
//                   * tanh(Lambda/2t)/Lambda dphi,
// tanh factor -> 1 at t = 0. Single building block of every spin correlator.
double g_k(int k, const ModelParams& p, const QuadratureConfig& quad = {});

// Precomputed G_k for |k| <= kmax, one table shared by all determinants of a
// geometry.
class GTable {
public:
    static GTable build(const ModelParams& p, int kmax, const QuadratureConfig& quad = {});

    double at(int k) const; // throws DomainError outside [-kmax, kmax]
    int kmax() const { return kmax_; }
    const ModelParams& params() const { return params_; }

private:
    GTable() = default;
    ModelParams params_{};
    int kmax_ = 0;
    std::vector<double> g_; // g_[k + kmax_]
};

// Read-through cache keyed by the exact parameter bits (h, gamma, t, quad).
// Purely an optimization: results never depend on cache state.
class GTableCache {
public:
    std::shared_ptr<const GTable> get(const ModelParams& p, int kmax,
                                      const QuadratureConfig& quad = {});
    void clear();
    static GTableCache& global();

private:
    struct Impl;
    std::shared_ptr<Impl> impl_ = make_impl();
    static std::shared_ptr<Impl> make_impl();
};

enum class PairKind { XX, YY, ZZ };
enum class TripleKind { ZZZ, XXZ, ZXX, XZX, YYZ, ZYY, YZY };

// The full nonvanishing correlator list for one (params, geometry) point.
// Suffixes name the pair distance: alpha = j-i, beta = k-j, gamma = k-i.
struct CorrelatorSet {
    double z = 0;
    double zz_alpha = 0, zz_beta = 0, zz_gamma = 0;
    double xx_alpha = 0, xx_beta = 0, xx_gamma = 0;
    double yy_alpha = 0, yy_beta = 0, yy_gamma = 0;
    double zzz = 0;
    double xxz = 0, zxx = 0, xzx = 0;
    double yyz = 0, zyy = 0, yzy = 0;
};

// Collapse site-resolved correlators to the translation-invariant set
// (z is site-averaged; exact in the bulk, a bulk approximation on open chains).
CorrelatorSet collapse(const TripleCorrelators& c);

double magnetization(const ModelParams& p, const QuadratureConfig& quad = {});

double two_point(PairKind kind, int d, const GTable& table);
double two_point(PairKind kind, int d, const ModelParams& p,
                 const QuadratureConfig& quad = {});

// ZXX/ZYY are defined via chain reflection: ZXX_(a,b) := XXZ_(b,a), exactly.
double three_point(TripleKind kind, const TripleGeometry& geom, const GTable& table);
double three_point(TripleKind kind, const TripleGeometry& geom, const ModelParams& p,
                   const QuadratureConfig& quad = {});

TripleCorrelators triple_correlators(const TripleGeometry& geom, const GTable& table);
CorrelatorSet correlator_set(const TripleGeometry& geom, const ModelParams& p,
                             const QuadratureConfig& quad = {});

} // namespace xychain
