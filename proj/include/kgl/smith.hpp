#pragma once

#include <vector>

#include "kgl/matrix.hpp"

namespace kgl {

// U * phi * V = diag(t^m[0], ..., t^m[n-1]) with U, V unimodular over the
// valuation ring A and m ascending.
struct SmithData {
    MatK U, V;
    std::vector<long> m;
};

namespace detail {

// position of the entry of minimal tval in m[k.., k..]; (-1,-1) if that block
// is zero; lexicographic (row, col) tie-break
inline std::pair<int, int> min_tval_pivot(const MatK& m, int k) {
    int bi = -1, bj = -1;
    Valuation best = Valuation::infinity();
    for (int i = k; i < m.rows; ++i)
        for (int j = k; j < m.cols; ++j) {
            if (m.at(i, j).is_zero()) continue;
            Valuation v = m.at(i, j).tval();
            if (v < best) {
                best = v;
                bi = i;
                bj = j;
            }
        }
    return {bi, bj};
}

}  // namespace detail

// Smith normal form over the DVR A. Pivot rule: entry of minimal tval,
// ties broken by lowest (row, col).
inline SmithData smith_dvr(const MatK& phi) {
    if (!phi.is_square()) throw SizeMismatch("smith_dvr needs a square matrix");
    int n = phi.rows;
    MatK s = phi, u = MatK::identity(n), v = MatK::identity(n);
    std::vector<long> m(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        auto [pi, pj] = detail::min_tval_pivot(s, k);
        if (pi < 0) throw Singular("smith_dvr: matrix is singular");
        if (pi != k)
            for (int c = 0; c < n; ++c) {
                std::swap(s.at(pi, c), s.at(k, c));
                std::swap(u.at(pi, c), u.at(k, c));
            }
        if (pj != k)
            for (int r = 0; r < n; ++r) {
                std::swap(s.at(r, pj), s.at(r, k));
                std::swap(v.at(r, pj), v.at(r, k));
            }
        const RatFun piv = s.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (s.at(i, k).is_zero()) continue;
            RatFun f = s.at(i, k) / piv;  // tval >= 0 by pivot minimality
            for (int c = 0; c < n; ++c) {
                s.at(i, c) -= f * s.at(k, c);
                u.at(i, c) -= f * u.at(k, c);
            }
        }
        for (int j = k + 1; j < n; ++j) {
            if (s.at(k, j).is_zero()) continue;
            RatFun f = s.at(k, j) / piv;
            for (int r = 0; r < n; ++r) {
                s.at(r, j) -= f * s.at(r, k);
                v.at(r, j) -= f * v.at(r, k);
            }
        }
        long mk = piv.tval().v;
        m[static_cast<std::size_t>(k)] = mk;
        // normalize the pivot to exactly t^mk
        RatFun unit = piv / RatFun::t_pow(mk);
        RatFun unit_inv = unit.inv();
        for (int r = 0; r < n; ++r) {
            s.at(r, k) *= unit_inv;
            v.at(r, k) *= unit_inv;
        }
    }
    return SmithData{std::move(u), std::move(v), std::move(m)};
}

// Canonical representative of the GL_n(A) column-equivalence class of a
// nonsingular matrix over K: lower triangular, pivot (i,i) equal to t^{k_i},
// and in each row the entries left of the pivot are polynomials of degree
// < k_i (Taylor representatives mod t^{k_i}).
inline MatK hnf_dvr(const MatK& m0) {
    if (!m0.is_square()) throw SizeMismatch("hnf_dvr needs a square matrix");
    int n = m0.rows;
    MatK m = m0;
    for (int i = 0; i < n; ++i) {
        int piv = -1;
        Valuation best = Valuation::infinity();
        for (int j = i; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            Valuation v = m.at(i, j).tval();
            if (v < best) {
                best = v;
                piv = j;
            }
        }
        if (piv < 0) throw Singular("hnf_dvr: matrix is singular");
        if (piv != i)
            for (int r = 0; r < n; ++r) std::swap(m.at(r, piv), m.at(r, i));
        long k = m.at(i, i).tval().v;
        RatFun tk = RatFun::t_pow(k);
        RatFun unit_inv = (m.at(i, i) / tk).inv();
        for (int r = 0; r < n; ++r) m.at(r, i) *= unit_inv;
        for (int j = i + 1; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            RatFun q = m.at(i, j) / tk;  // in A by pivot minimality
            for (int r = 0; r < n; ++r) m.at(r, j) -= q * m.at(r, i);
        }
        for (int j = 0; j < i; ++j) {
            if (m.at(i, j).is_zero()) continue;
            RatFun e = m.at(i, j);
            RatFun q = (e - laurent_prefix(e, k)) / tk;  // in A
            if (q.is_zero()) continue;
            for (int r = 0; r < n; ++r) m.at(r, j) -= q * m.at(r, i);
        }
    }
    return m;
}

// Column reduction of an n x c matrix (c >= n) of full row rank over K to the
// HNF basis of the lattice generated by its columns.
inline MatK hnf_cols(const MatK& gen) {
    int n = gen.rows;
    MatK m = gen;
    // eliminate to n independent columns first, minimal-tval pivot per row
    std::vector<int> pivot_of_row;
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int piv = -1;
        Valuation best = Valuation::infinity();
        for (int j = next; j < m.cols; ++j) {
            if (m.at(i, j).is_zero()) continue;
            Valuation v = m.at(i, j).tval();
            if (v < best) {
                best = v;
                piv = j;
            }
        }
        if (piv < 0) throw Singular("hnf_cols: generators do not span");
        if (piv != next)
            for (int r = 0; r < n; ++r) std::swap(m.at(r, piv), m.at(r, next));
        for (int j = next + 1; j < m.cols; ++j) {
            if (m.at(i, j).is_zero()) continue;
            RatFun q = m.at(i, j) / m.at(i, next);
            for (int r = 0; r < n; ++r) m.at(r, j) -= q * m.at(r, next);
        }
        ++next;
    }
    MatK basis(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis.at(i, j) = m.at(i, j);
    return hnf_dvr(basis);
}

}  // namespace kgl
