#pragma once

#include "xychain/linalg.hpp"

#include <utility>
#include <vector>

namespace xychain {

// All nonvanishing one-, two-, three-point correlators of three sites i < j < k,
// site-resolved (open chains have no translation invariance, so each z and each
// pair distance carries its own value). Index pairs: 12 = (i,j), 23 = (j,k),
// 13 = (i,k).
struct TripleCorrelators {
    double z1 = 0, z2 = 0, z3 = 0;
    double zz12 = 0, zz23 = 0, zz13 = 0;
    double xx12 = 0, xx23 = 0, xx13 = 0;
    double yy12 = 0, yy23 = 0, yy13 = 0;
    double zzz = 0;
    double xxz = 0, xzx = 0, zxx = 0;
    double yyz = 0, yzy = 0, zyy = 0;
};

// Wick reduction of spin-correlator strings over a contraction provider
// w(p, q) = <A_p B_q> with A = c + c~, B = c - c~ after the Jordan-Wigner map
// (sigma^z_l = -A_l B_l, strings absorbed into the row/column index sets).
// Every correlator is a determinant det[w(arow_r, bcol_c)]; the prefactors
// below are fixed by the ferromagnetic sign convention of the chain and are
// certified against exact diagonalization.
template <class W>
class WickEngine {
public:
    explicit WickEngine(W w) : w_(std::move(w)) {}

    double z(int a) const { return -w_(a, a); }

    double zz(int a, int b) const {
        return w_(a, a) * w_(b, b) - w_(a, b) * w_(b, a);
    }

    // <sx_a sx_b>: rows A_{a+1..b}, cols B_{a..b-1} (Toeplitz G_{c-r-1} in the bulk)
    double xx(int a, int b) const {
        return det(range(a + 1, b), range(a, b - 1));
    }

    // <sy_a sy_b>: rows A_{a..b-1}, cols B_{a+1..b}
    double yy(int a, int b) const {
        return det(range(a, b - 1), range(a + 1, b));
    }

    double zzz(int i, int j, int k) const {
        return -det({i, j, k}, {i, j, k});
    }

    double xxz(int i, int j, int k) const {
        return -det(join(range(i + 1, j), k), join(range(i, j - 1), k));
    }

    double yyz(int i, int j, int k) const {
        return -det(join(range(i, j - 1), k), join(range(i + 1, j), k));
    }

    // <sx_i sz_j sx_k>: the sz collapses the string pair at j, leaving the
    // (k-i-1)-minor of the xx(i,k) determinant.
    double xzx(int i, int j, int k) const {
        return det(range_skip(i + 1, k, j), range_skip(i, k - 1, j));
    }

    double yzy(int i, int j, int k) const {
        return det(range_skip(i, k - 1, j), range_skip(i + 1, k, j));
    }

    double zxx(int i, int j, int k) const {
        return -det(join_front(i, range(j + 1, k)), join_front(i, range(j, k - 1)));
    }

    double zyy(int i, int j, int k) const {
        return -det(join_front(i, range(j, k - 1)), join_front(i, range(j + 1, k)));
    }

    TripleCorrelators triple(int i, int j, int k) const {
        TripleCorrelators c;
        c.z1 = z(i);
        c.z2 = z(j);
        c.z3 = z(k);
        c.zz12 = zz(i, j);
        c.zz23 = zz(j, k);
        c.zz13 = zz(i, k);
        c.xx12 = xx(i, j);
        c.xx23 = xx(j, k);
        c.xx13 = xx(i, k);
        c.yy12 = yy(i, j);
        c.yy23 = yy(j, k);
        c.yy13 = yy(i, k);
        c.zzz = zzz(i, j, k);
        c.xxz = xxz(i, j, k);
        c.xzx = xzx(i, j, k);
        c.zxx = zxx(i, j, k);
        c.yyz = yyz(i, j, k);
        c.yzy = yzy(i, j, k);
        c.zyy = zyy(i, j, k);
        return c;
    }

private:
    static std::vector<int> range(int lo, int hi) { // inclusive
        std::vector<int> v;
        v.reserve(hi - lo + 1);
        for (int s = lo; s <= hi; ++s) v.push_back(s);
        return v;
    }

    static std::vector<int> range_skip(int lo, int hi, int skip) {
        std::vector<int> v;
        v.reserve(hi - lo);
        for (int s = lo; s <= hi; ++s)
            if (s != skip) v.push_back(s);
        return v;
    }

    static std::vector<int> join(std::vector<int> v, int tail) {
        v.push_back(tail);
        return v;
    }

    static std::vector<int> join_front(int head, std::vector<int> v) {
        v.insert(v.begin(), head);
        return v;
    }

    double det(const std::vector<int>& arows, const std::vector<int>& bcols) const {
        const int n = static_cast<int>(arows.size());
        std::vector<double> m(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m[r * n + c] = w_(arows[r], bcols[c]);
        return det_lu(std::move(m), n);
    }

    W w_;
};

} // namespace xychain
