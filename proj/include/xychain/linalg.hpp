#pragma once

#include <vector>

namespace xychain {

// Determinant of a dense n x n matrix (row-major), via LU with partial pivoting.
// Matrices here are tiny (correlator minors, <= ~20 x 20), so no blocking.
double det_lu(std::vector<double> a, int n);

struct SymmetricEigen {
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // row-major, column j is the eigenvector of values[j]
};

// Cyclic Jacobi for real symmetric matrices. Deterministic sweep order, converges
// when the off-diagonal Frobenius norm drops below 1e-13 * max(1, ||A||_F).
// Throws EigenNonConvergence on NaN input or if 100 sweeps are not enough.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);
SymmetricEigen jacobi_eigensystem(std::vector<double> a, int n);

} // namespace xychain
