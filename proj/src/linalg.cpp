#include "xychain/linalg.hpp"

#include "xychain/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace xychain {

double det_lu(std::vector<double> a, int n) {
    if (n == 0) return 1.0;
    double det = 1.0;
    double piv_max = 0.0, piv_min = 0.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        const double p = a[piv * n + col];
        if (p == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            det = -det;
        }
        det *= p;
        const double ap = std::abs(p);
        if (col == 0) piv_max = piv_min = ap;
        piv_max = std::max(piv_max, ap);
        piv_min = std::min(piv_min, ap);
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / p;
            if (f == 0.0) continue;
            for (int c = col + 1; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
        }
    }
#ifndef NDEBUG
    if (piv_min > 0.0 && piv_max / piv_min > 1e12)
        std::fprintf(stderr, "det_lu: pivot ratio %.3e, result may lose digits\n",
                     piv_max / piv_min);
#endif
    return det;
}

namespace {

double offdiag_frob(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return std::sqrt(2.0 * s);
}

// In-place cyclic Jacobi; vectors (if non-null) accumulates the rotations.
void jacobi_core(std::vector<double>& a, int n, std::vector<double>* vectors) {
    for (double x : a)
        if (!std::isfinite(x)) throw EigenNonConvergence("non-finite matrix entry");
    if (vectors) {
        vectors->assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*vectors)[i * n + i] = 1.0;
    }
    double frob = 0.0;
    for (double x : a) frob += x * x;
    const double tol = 1e-13 * std::max(1.0, std::sqrt(frob));

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_frob(a, n) <= tol) return;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                if (vectors)
                    for (int k = 0; k < n; ++k) {
                        const double vkp = (*vectors)[k * n + p];
                        const double vkq = (*vectors)[k * n + q];
                        (*vectors)[k * n + p] = c * vkp - s * vkq;
                        (*vectors)[k * n + q] = s * vkp + c * vkq;
                    }
            }
    }
    if (offdiag_frob(a, n) > tol)
        throw EigenNonConvergence("Jacobi sweeps exhausted");
}

} // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    jacobi_core(a, n, nullptr);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a[i * n + i];
    std::sort(vals.begin(), vals.end());
    return vals;
}

SymmetricEigen jacobi_eigensystem(std::vector<double> a, int n) {
    std::vector<double> vecs;
    jacobi_core(a, n, &vecs);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });
    SymmetricEigen out;
    out.values.resize(n);
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a[order[j] * n + order[j]];
        for (int k = 0; k < n; ++k) out.vectors[k * n + j] = vecs[k * n + order[j]];
    }
    return out;
}

} // namespace xychain
