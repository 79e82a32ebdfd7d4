#include "xychain/entanglement.hpp"

#include "xychain/errors.hpp"
#include "xychain/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace xychain {

const char* class_label(EntanglementClass c) {
    switch (c) {
    case EntanglementClass::AllPpt: return "all_ppt_or_undetected";
    case EntanglementClass::BoundBySingleNptCut: return "bound_single_npt_cut";
    case EntanglementClass::NptMultiCut: return "npt_multi_cut";
    case EntanglementClass::PairwiseEntangled: return "pairwise_entangled";
    }
    return "?";
}

const NegativityResult& EntanglementReport::neg(Cut c) const {
    switch (c) {
    case Cut::FirstVsRest: return neg_first;
    case Cut::MiddleVsRest: return neg_middle;
    case Cut::LastVsRest: return neg_last;
    }
    throw DomainError("bad cut");
}

Rho3 partial_transpose(const Rho3& rho, Cut cut) {
    const int w = cut == Cut::FirstVsRest ? 4 : cut == Cut::MiddleVsRest ? 2 : 1;
    Rho3 out;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            const int rb = (r / w) % 2, cb = (c / w) % 2;
            // swap the cut spin's bra/ket bits
            const int rr = r + (cb - rb) * w;
            const int cc = c + (rb - cb) * w;
            out.at(rr, cc) = rho.at(r, c);
        }
    return out;
}

NegativityResult negativity(const Rho3& rho, Cut cut, double tol) {
    if (!(tol > 0)) throw DomainError("negativity tolerance must be > 0");
    const Rho3 pt = partial_transpose(rho, cut);
    const auto evals = jacobi_eigenvalues({pt.m.begin(), pt.m.end()}, 8);
    NegativityResult res;
    for (double mu : evals)
        if (mu < -tol) {
            res.negative_eigenvalues.push_back(mu);
            res.value += -mu;
        }
    return res;
}

double concurrence(const Rho2& rho) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (r != c && r + c != 3 && std::abs(rho.at(r, c)) > 1e-9)
                throw ShapeViolation("pair state is not X-shaped");
    auto root = [](double x) { return std::sqrt(std::max(x, 0.0)); };
    const double a = std::abs(rho.at(0, 3)) - root(rho.at(1, 1) * rho.at(2, 2));
    const double b = std::abs(rho.at(1, 2)) - root(rho.at(0, 0) * rho.at(3, 3));
    return 2.0 * std::max({0.0, a, b});
}

namespace {

using M4 = std::array<double, 16>;

M4 mul(const M4& a, const M4& b) {
    M4 out{};
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k) {
            const double arc = a[r * 4 + k];
            if (arc == 0.0) continue;
            for (int c = 0; c < 4; ++c) out[r * 4 + c] += arc * b[k * 4 + c];
        }
    return out;
}

// sy x sy is real: the spin-flip operator for real states.
constexpr M4 kFlip{0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0};

M4 sqrt_psd(const M4& a) {
    SymmetricEigen es = jacobi_eigensystem({a.begin(), a.end()}, 4);
    M4 out{};
    for (int j = 0; j < 4; ++j) {
        const double s = std::sqrt(std::max(es.values[j], 0.0));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                out[r * 4 + c] += s * es.vectors[r * 4 + j] * es.vectors[c * 4 + j];
    }
    return out;
}

} // namespace

double concurrence_wootters(const Rho2& rho) {
    M4 r{};
    std::copy(rho.m.begin(), rho.m.end(), r.begin());
    const M4 sr = sqrt_psd(r);
    const M4 mid = mul(mul(kFlip, r), kFlip); // rho is real, so rho* = rho
    const M4 w = mul(mul(sr, mid), sr);
    auto evals = jacobi_eigenvalues({w.begin(), w.end()}, 4); // ascending
    double c = std::sqrt(std::max(evals[3], 0.0));
    for (int j = 0; j < 3; ++j) c -= std::sqrt(std::max(evals[j], 0.0));
    return std::max(c, 0.0);
}

EntanglementClass classify(const std::vector<Cut>& npt_cuts,
                           const std::array<double, 3>& concurrences,
                           double tol) {
    for (double c : concurrences)
        if (c > tol) return EntanglementClass::PairwiseEntangled;
    if (npt_cuts.empty()) return EntanglementClass::AllPpt;
    if (npt_cuts.size() == 1) return EntanglementClass::BoundBySingleNptCut;
    return EntanglementClass::NptMultiCut;
}

EntanglementReport analyze_rho(const Rho3& rho, double tol) {
    EntanglementReport rep;
    rep.neg_first = negativity(rho, Cut::FirstVsRest, tol);
    rep.neg_middle = negativity(rho, Cut::MiddleVsRest, tol);
    rep.neg_last = negativity(rho, Cut::LastVsRest, tol);
    rep.conc_ij = concurrence(partial_trace(rho, Site::Last));
    rep.conc_jk = concurrence(partial_trace(rho, Site::First));
    rep.conc_ik = concurrence(partial_trace(rho, Site::Middle));
    for (Cut c : {Cut::FirstVsRest, Cut::MiddleVsRest, Cut::LastVsRest})
        if (!rep.neg(c).negative_eigenvalues.empty()) rep.npt_cuts.push_back(c);
    rep.classification =
        classify(rep.npt_cuts, {rep.conc_ij, rep.conc_jk, rep.conc_ik}, tol);
    return rep;
}

EntanglementReport analyze_triple(const ModelParams& p, const TripleGeometry& geom,
                                  const QuadratureConfig& quad, double tol) {
    geom.validate();
    auto table = GTableCache::global().get(p, geom.span() + 1, quad);
    return analyze_rho(assemble_rho3(triple_correlators(geom, *table)), tol);
}

} // namespace xychain
