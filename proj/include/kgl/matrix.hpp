#pragma once

#include <cassert>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "kgl/errors.hpp"
#include "kgl/ratfun.hpp"

namespace kgl {

namespace fieldops {
inline bool is_zero(const Rational& x) { return rat_is_zero(x); }
inline bool is_zero(const RatFun& x) { return x.is_zero(); }
inline Rational one(const Rational*) { return Rational(1); }
inline RatFun one(const RatFun*) { return RatFun::one(); }
}  // namespace fieldops

// Dense matrix over an exact field (RatFun for K = Q(t), Rational for the
// residue field). Row-major, 0-based storage; the 1-based index-set
// conventions of minors live at the API boundary only.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, T()) {}
    Mat(int r, int c, std::vector<T> data) : rows(r), cols(c), a(std::move(data)) {
        assert(a.size() == static_cast<std::size_t>(r) * c);
    }

    T& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = fieldops::one(static_cast<const T*>(nullptr));
        return m;
    }
    static Mat diagonal(const std::vector<T>& d) {
        Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < m.rows; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    bool is_square() const { return rows == cols; }
    bool is_zero() const {
        for (const auto& x : a)
            if (!fieldops::is_zero(x)) return false;
        return true;
    }

    Mat transpose() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
        return v;
    }
    std::vector<T> row(int i) const {
        std::vector<T> v(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
        return v;
    }

    // rows/cols are 0-based index lists here
    Mat submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
        Mat m(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = at(ri[i], ci[j]);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw SizeMismatch("matrix addition");
        Mat m = x;
        for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = m.a[i] + y.a[i];
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw SizeMismatch("matrix subtraction");
        Mat m = x;
        for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = m.a[i] - y.a[i];
        return m;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw SizeMismatch("matrix product");
        Mat m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T& xik = x.at(i, k);
                if (fieldops::is_zero(xik)) continue;
                for (int j = 0; j < y.cols; ++j) m.at(i, j) = m.at(i, j) + xik * y.at(k, j);
            }
        return m;
    }
    friend Mat operator*(const T& s, const Mat& x) {
        Mat m = x;
        for (auto& e : m.a) e = s * e;
        return m;
    }
    friend std::vector<T> operator*(const Mat& x, const std::vector<T>& v) {
        if (x.cols != static_cast<int>(v.size())) throw SizeMismatch("matrix-vector product");
        std::vector<T> r(static_cast<std::size_t>(x.rows), T());
        for (int i = 0; i < x.rows; ++i)
            for (int j = 0; j < x.cols; ++j) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + x.at(i, j) * v[static_cast<std::size_t>(j)];
        return r;
    }
};

using MatK = Mat<RatFun>;
using QMat = Mat<Rational>;

// ---------------------------------------------------------------------------
// Exact Gaussian elimination.

template <class T>
struct Rref {
    Mat<T> m;
    std::vector<int> pivot_cols;
    int rank = 0;
};

template <class T>
Rref<T> rref(Mat<T> m) {
    Rref<T> out;
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!fieldops::is_zero(m.at(i, j))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(r, c));
        T inv = fieldops::one(static_cast<const T*>(nullptr)) / m.at(r, j);
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = inv * m.at(r, c);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || fieldops::is_zero(m.at(i, j))) continue;
            T f = m.at(i, j);
            for (int c = 0; c < m.cols; ++c) m.at(i, c) = m.at(i, c) - f * m.at(r, c);
        }
        out.pivot_cols.push_back(j);
        ++r;
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

template <class T>
int field_rank(const Mat<T>& m) {
    return rref(m).rank;
}

// basis of the right kernel, as columns; canonical w.r.t. RREF pivots
template <class T>
Mat<T> field_kernel(const Mat<T>& m) {
    Rref<T> r = rref(m);
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols), false);
    for (int p : r.pivot_cols) is_piv[static_cast<std::size_t>(p)] = true;
    int nfree = m.cols - r.rank;
    Mat<T> ker(m.cols, nfree);
    int fi = 0;
    for (int j = 0; j < m.cols; ++j) {
        if (is_piv[static_cast<std::size_t>(j)]) continue;
        ker.at(j, fi) = fieldops::one(static_cast<const T*>(nullptr));
        for (int p = 0; p < r.rank; ++p) ker.at(r.pivot_cols[static_cast<std::size_t>(p)], fi) = -r.m.at(p, j);
        ++fi;
    }
    return ker;
}

// canonical basis of the column space, as columns (RREF of the row space of
// the transpose)
template <class T>
Mat<T> field_image(const Mat<T>& m) {
    Rref<T> r = rref(m.transpose());
    Mat<T> img(m.rows, r.rank);
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < m.rows; ++j) img.at(j, i) = r.m.at(i, j);
    return img;
}

template <class T>
T det(const Mat<T>& m0) {
    if (!m0.is_square()) throw SizeMismatch("determinant of a non-square matrix");
    Mat<T> m = m0;
    T d = fieldops::one(static_cast<const T*>(nullptr));
    for (int j = 0; j < m.cols; ++j) {
        int piv = -1;
        for (int i = j; i < m.rows; ++i)
            if (!fieldops::is_zero(m.at(i, j))) {
                piv = i;
                break;
            }
        if (piv < 0) return T();
        if (piv != j) {
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(j, c));
            d = -d;
        }
        d = d * m.at(j, j);
        T inv = fieldops::one(static_cast<const T*>(nullptr)) / m.at(j, j);
        for (int i = j + 1; i < m.rows; ++i) {
            if (fieldops::is_zero(m.at(i, j))) continue;
            T f = inv * m.at(i, j);
            for (int c = j; c < m.cols; ++c) m.at(i, c) = m.at(i, c) - f * m.at(j, c);
        }
    }
    return d;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
    if (!m.is_square()) throw SizeMismatch("inverse of a non-square matrix");
    int n = m.rows;
    Mat<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = fieldops::one(static_cast<const T*>(nullptr));
    }
    Rref<T> r = rref(std::move(aug));
    if (r.rank < n || r.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1) throw Singular();
    Mat<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

// unique solution x of B x = v for B with full column rank; throws Singular
// if v is outside the column space or the solution is not unique
template <class T>
std::vector<T> solve_exact(const Mat<T>& B, const std::vector<T>& v) {
    if (B.rows != static_cast<int>(v.size())) throw SizeMismatch("solve");
    Mat<T> aug(B.rows, B.cols + 1);
    for (int i = 0; i < B.rows; ++i) {
        for (int j = 0; j < B.cols; ++j) aug.at(i, j) = B.at(i, j);
        aug.at(i, B.cols) = v[static_cast<std::size_t>(i)];
    }
    Rref<T> r = rref(std::move(aug));
    std::vector<T> x(static_cast<std::size_t>(B.cols), T());
    int nr = 0;
    for (int p = 0; p < r.rank; ++p) {
        int pc = r.pivot_cols[static_cast<std::size_t>(p)];
        if (pc == B.cols) throw Singular("inconsistent linear system");
        x[static_cast<std::size_t>(pc)] = r.m.at(p, B.cols);
        ++nr;
    }
    if (nr != B.cols) throw Singular("underdetermined linear system");
    return x;
}

// ---------------------------------------------------------------------------
// Index sets and compound matrices. Index sets are 1-based ascending, listed
// in lexicographic order, matching the paper's det_{AB} convention.

inline const std::vector<std::vector<int>>& subsets_lex(int n, int r) {
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    auto key = std::make_pair(n, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (r - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return cache.emplace(key, std::move(out)).first->second;
}

inline int subset_index(int n, const std::vector<int>& s) {
    const auto& all = subsets_lex(n, static_cast<int>(s.size()));
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == s) return static_cast<int>(i);
    throw SizeMismatch("not an ascending index set in range");
}

// minor with rows A, columns B (1-based ascending index sets)
template <class T>
T minor(const Mat<T>& m, const std::vector<int>& A, const std::vector<int>& B) {
    if (A.size() != B.size()) throw SizeMismatch("minor needs |A| = |B|");
    if (static_cast<int>(A.size()) > std::min(m.rows, m.cols)) throw SizeMismatch("minor larger than matrix");
    std::vector<int> ri, ci;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i] < 1 || A[i] > m.rows || B[i] < 1 || B[i] > m.cols) throw SizeMismatch("minor index out of range");
        if (i > 0 && (A[i] <= A[i - 1] || B[i] <= B[i - 1])) throw SizeMismatch("minor index sets must ascend");
        ri.push_back(A[i] - 1);
        ci.push_back(B[i] - 1);
    }
    return det(m.submatrix(ri, ci));
}

// r-th compound: all r x r minors, index sets in lexicographic order
template <class T>
Mat<T> compound(const Mat<T>& m, int r) {
    if (r < 1 || r > std::min(m.rows, m.cols)) throw SizeMismatch("compound order out of range");
    const auto& rowsets = subsets_lex(m.rows, r);
    const auto& colsets = subsets_lex(m.cols, r);
    Mat<T> c(static_cast<int>(rowsets.size()), static_cast<int>(colsets.size()));
    for (std::size_t i = 0; i < rowsets.size(); ++i)
        for (std::size_t j = 0; j < colsets.size(); ++j) c.at(static_cast<int>(i), static_cast<int>(j)) = minor(m, rowsets[i], colsets[j]);
    return c;
}

// ---------------------------------------------------------------------------
// Valuation-ring helpers for matrices over K.

inline bool entries_in_A(const MatK& m) {
    for (const auto& x : m.a)
        if (!x.in_A()) return false;
    return true;
}

inline bool is_unimodular(const MatK& m) { return m.is_square() && entries_in_A(m) && det(m).is_unit(); }

inline QMat mat_residue(const MatK& m) {
    QMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j).residue();
    return r;
}

inline MatK mat_from_residue(const QMat& m) {
    MatK r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(i, j) = RatFun(m.at(i, j));
    return r;
}

}  // namespace kgl
