#pragma once

#include <vector>

#include "vec.hpp"

namespace symcurve {

struct Mat3 {
    // a[row][col]
    std::array<std::array<long long, 3>, 3> a{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    static Mat3 identity() { return Mat3{}; }

    Vec mul(const Vec& v) const {
        Vec r(3);
        for (int i = 0; i < 3; ++i) {
            long long s = 0;
            for (int j = 0; j < 3; ++j) s = cadd(s, cmul(a[i][j], v[j]));
            r[i] = s;
        }
        return r;
    }

    Vec row(int i) const { return Vec(a[i][0], a[i][1], a[i][2]); }
    Vec col(int j) const { return Vec(a[0][j], a[1][j], a[2][j]); }

    long long det() const {
        long long d = 0;
        d = cadd(d, cmul(a[0][0], csub(cmul(a[1][1], a[2][2]), cmul(a[1][2], a[2][1]))));
        d = csub(d, cmul(a[0][1], csub(cmul(a[1][0], a[2][2]), cmul(a[1][2], a[2][0]))));
        d = cadd(d, cmul(a[0][2], csub(cmul(a[1][0], a[2][1]), cmul(a[1][1], a[2][0]))));
        return d;
    }

    // Inverse of a matrix with det = ±1 (adjugate divided by det).
    Mat3 unimodular_inverse() const {
        long long d = det();
        if (d != 1 && d != -1) throw internal_error("matrix is not unimodular");
        Mat3 inv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
                int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                long long cof = csub(cmul(a[r0][c0], a[r1][c1]), cmul(a[r0][c1], a[r1][c0]));
                inv.a[i][j] = d == 1 ? cof : cneg(cof);
            }
        return inv;
    }
};

// Unimodular U with U*v = (g,0,0)^T, g = content(v) > 0. Rows 2,3 of U give the
// surjection Z^3 -> Z^2 with kernel Z*primitive(v); columns of U^{-1} complete
// primitive(v) to a lattice basis.
inline Mat3 column_reduce(const Vec& v) {
    if (v.dim != 3 || v.is_zero()) throw internal_error("column_reduce needs a nonzero 3-vector");
    Mat3 U = Mat3::identity();
    std::array<long long, 3> w{v[0], v[1], v[2]};
    auto row_sub = [&](int dst, int src, long long q) {
        for (int j = 0; j < 3; ++j) U.a[dst][j] = csub(U.a[dst][j], cmul(q, U.a[src][j]));
        w[dst] = csub(w[dst], cmul(q, w[src]));
    };
    auto row_swap = [&](int i, int j) {
        std::swap(U.a[i], U.a[j]);
        std::swap(w[i], w[j]);
    };
    for (int i = 1; i < 3; ++i) {
        while (w[i] != 0) {
            if (w[0] == 0) {
                row_swap(0, i);
                continue;
            }
            row_sub(0, i, w[0] / w[i]);
            row_swap(0, i);
        }
    }
    if (w[0] < 0) {
        for (int j = 0; j < 3; ++j) U.a[0][j] = cneg(U.a[0][j]);
        w[0] = -w[0];
    }
    return U;
}

// Unimodular V with gamma*V = (g,0,0), g = content(gamma) > 0. Columns 2,3 of V
// form a basis of ker(gamma); rows 2,3 of V^{-1} are plane coordinates.
inline Mat3 row_reduce(const Vec& gamma) {
    if (gamma.dim != 3 || gamma.is_zero()) throw internal_error("row_reduce needs a nonzero 3-covector");
    Mat3 V = Mat3::identity();
    std::array<long long, 3> w{gamma[0], gamma[1], gamma[2]};
    auto col_sub = [&](int dst, int src, long long q) {
        for (int i = 0; i < 3; ++i) V.a[i][dst] = csub(V.a[i][dst], cmul(q, V.a[i][src]));
        w[dst] = csub(w[dst], cmul(q, w[src]));
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < 3; ++r) std::swap(V.a[r][i], V.a[r][j]);
        std::swap(w[i], w[j]);
    };
    for (int i = 1; i < 3; ++i) {
        while (w[i] != 0) {
            if (w[0] == 0) {
                col_swap(0, i);
                continue;
            }
            col_sub(0, i, w[0] / w[i]);
            col_swap(0, i);
        }
    }
    if (w[0] < 0) {
        for (int i = 0; i < 3; ++i) V.a[i][0] = cneg(V.a[i][0]);
        w[0] = -w[0];
    }
    return V;
}

// Diagonal of a Smith-type reduction of the dim x k matrix whose columns are the
// given vectors. The product of the nonzero entries equals the index of the
// generated sublattice in its saturation; their count is the rank.
inline std::vector<long long> smith_diagonal(const std::vector<Vec>& cols, int dim) {
    size_t k = cols.size();
    std::vector<std::vector<long long>> m(static_cast<size_t>(dim), std::vector<long long>(k, 0));
    for (size_t j = 0; j < k; ++j)
        for (int i = 0; i < dim; ++i) m[static_cast<size_t>(i)][j] = cols[j][i];

    std::vector<long long> diag;
    size_t top = 0;
    while (top < m.size() && top < (m.empty() ? 0 : m[0].size())) {
        // find a nonzero pivot of minimal absolute value
        size_t pi = top, pj = top;
        long long best = 0;
        for (size_t i = top; i < m.size(); ++i)
            for (size_t j = top; j < m[0].size(); ++j)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(m[top], m[pi]);
        for (auto& row : m) std::swap(row[top], row[pj]);
        // eliminate row and column below/right of the pivot
        bool again = false;
        for (size_t i = top + 1; i < m.size(); ++i) {
            long long q = m[i][top] / m[top][top];
            for (size_t j = top; j < m[0].size(); ++j) m[i][j] = csub(m[i][j], cmul(q, m[top][j]));
            if (m[i][top] != 0) again = true;
        }
        for (size_t j = top + 1; j < m[0].size(); ++j) {
            long long q = m[top][j] / m[top][top];
            for (size_t i = top; i < m.size(); ++i) m[i][j] = csub(m[i][j], cmul(q, m[i][top]));
            if (m[top][j] != 0) again = true;
        }
        if (again) continue; // remainders left; repeat with a smaller pivot
        diag.push_back(std::llabs(m[top][top]));
        ++top;
    }
    return diag;
}

inline int affine_rank(const std::vector<Vec>& pts, int dim) {
    if (pts.empty()) return -1;
    std::vector<Vec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    if (diffs.empty()) return 0;
    return static_cast<int>(smith_diagonal(diffs, dim).size());
}

} // namespace symcurve
