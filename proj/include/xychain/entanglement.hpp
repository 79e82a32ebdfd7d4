#pragma once

#include "xychain/state.hpp"

#include <string>
#include <vector>

namespace xychain {

// Bipartitions of the triple: one spin vs the remaining two.
enum class Cut { FirstVsRest, MiddleVsRest, LastVsRest };

struct NegativityResult {
    double value = 0.0;                       // sum of |mu| over listed eigenvalues
    std::vector<double> negative_eigenvalues; // those below -tol, ascending
};

enum class EntanglementClass {
    AllPpt,               // "separable or undetected PPT entanglement"
    BoundBySingleNptCut,  // exactly one NPT cut, no pairwise entanglement
    NptMultiCut,          // >= 2 NPT cuts, no pairwise entanglement
    PairwiseEntangled,
};

const char* class_label(EntanglementClass c);

struct EntanglementReport {
    NegativityResult neg_first, neg_middle, neg_last;
    double conc_ij = 0, conc_jk = 0, conc_ik = 0;
    std::vector<Cut> npt_cuts;
    EntanglementClass classification = EntanglementClass::AllPpt;

    const NegativityResult& neg(Cut c) const;
};

// Transpose the chosen spin's indices; involution, trace- and symmetry-preserving.
Rho3 partial_transpose(const Rho3& rho, Cut cut);

// N = sum |mu_i| over eigenvalues mu_i < -tol of the partial transpose.
NegativityResult negativity(const Rho3& rho, Cut cut, double tol = 1e-9);

// X-state closed form C = 2 max(0, |m14| - sqrt(m22 m33), |m23| - sqrt(m11 m44)).
// Throws ShapeViolation if entries outside the X pattern exceed 1e-9.
double concurrence(const Rho2& rho);

// General four-root formula (sqrt(rho) F rho F sqrt(rho), F = sy x sy), as a
// cross-check path; no shape assumption.
double concurrence_wootters(const Rho2& rho);

EntanglementClass classify(const std::vector<Cut>& npt_cuts,
                           const std::array<double, 3>& concurrences,
                           double tol = 1e-9);

// Full report for an already-built state (shared by all three engines).
EntanglementReport analyze_rho(const Rho3& rho, double tol = 1e-9);

// Thermodynamic-limit pipeline: correlators -> Rho3 -> report.
EntanglementReport analyze_triple(const ModelParams& p, const TripleGeometry& geom,
                                  const QuadratureConfig& quad = {}, double tol = 1e-9);

} // namespace xychain
