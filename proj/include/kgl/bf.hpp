#pragma once

#include <utility>

#include "kgl/matrix.hpp"
#include "kgl/report.hpp"

namespace kgl {

// A "back and forth" morphism between two free rank-n modules: a pair of
// matrices over A whose two composites are multiplication by the section mu,
// with prescribed fibre rank r wherever mu vanishes. Line bundles are carried
// trivialized, so mu is an element of A and twists reduce to integer tags.
// The rank tag is stored, never inferred: when mu is a unit it cannot be
// recovered from the matrices.
struct BfMorphism {
    int n = 0;
    int r = 0;       // rank tag
    RatFun mu;       // section of the (trivialized) line bundle, element of A
    MatK fwd;        // E -> F, the sharp component
    MatK bwd;        // F -> M (x) E under the trivialization, the flat component

    static BfMorphism identity(int n) {
        return BfMorphism{n, n, RatFun::one(), MatK::identity(n), MatK::identity(n)};
    }
};

inline ValidationReport validate_bf(const BfMorphism& g) {
    ValidationReport rep;
    bool shape = g.fwd.rows == g.n && g.fwd.cols == g.n && g.bwd.rows == g.n && g.bwd.cols == g.n;
    rep.add("shape", shape);
    rep.add("rank_range", 0 <= g.r && g.r <= g.n);
    if (!shape) return rep;
    rep.add("entries_integral", g.mu.in_A() && entries_in_A(g.fwd) && entries_in_A(g.bwd));
    MatK muI = RatFun(g.mu) * MatK::identity(g.n);
    rep.add("composite_bwd_fwd", g.bwd * g.fwd == muI);
    rep.add("composite_fwd_bwd", g.fwd * g.bwd == muI);
    bool mu_zero = g.mu.is_zero();
    bool vanishes_closed = mu_zero || g.mu.tval().v > 0;
    if (vanishes_closed) {
        QMat f = mat_residue(g.fwd), b = mat_residue(g.bwd);
        int rf = field_rank(f), rb = field_rank(b);
        rep.add("fibre_rank_closed", rf == g.r, "rank " + std::to_string(rf) + " expected " + std::to_string(g.r));
        // composites vanish at the fibre, so exactness at both middle spots
        // reduces to the ranks being complementary
        rep.add("fibre_exact_closed", rf + rb == g.n);
    }
    if (mu_zero) {
        int rf = field_rank(g.fwd), rb = field_rank(g.bwd);
        rep.add("fibre_rank_generic", rf == g.r);
        rep.add("fibre_exact_generic", rf + rb == g.n);
    }
    return rep;
}

// Matrix of an exterior power together with the integer twist tag of the
// line-bundle factor it lives in.
struct WedgeResult {
    MatK mat;
    int twist = 0;  // power of M for wedge_bwd, power of M^dual for wedge_fwd
};

namespace detail {

// Frames T_E, T_F in GL_n(A) with fwd = T_F diag(I_r, 0) T_E^{-1} and
// bwd = T_E diag(0, I_{n-r}) T_F^{-1}; exists when mu = 0 for a valid
// bf-morphism.
struct LocalFrames {
    MatK t_e, t_f, t_e_inv, t_f_inv;
    int r = 0;
};

inline LocalFrames local_frames_mu_zero(const BfMorphism& g) {
    int n = g.n;
    MatK s = g.fwd, p = MatK::identity(n), q = MatK::identity(n);
    int r = 0;
    for (int k = 0; k < n; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (s.at(i, j).is_unit()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != k)
            for (int c = 0; c < n; ++c) {
                std::swap(s.at(pi, c), s.at(k, c));
                std::swap(p.at(pi, c), p.at(k, c));
            }
        if (pj != k)
            for (int rr = 0; rr < n; ++rr) {
                std::swap(s.at(rr, pj), s.at(rr, k));
                std::swap(q.at(rr, pj), q.at(rr, k));
            }
        RatFun piv = s.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (s.at(i, k).is_zero()) continue;
            RatFun f = s.at(i, k) / piv;
            for (int c = 0; c < n; ++c) {
                s.at(i, c) -= f * s.at(k, c);
                p.at(i, c) -= f * p.at(k, c);
            }
        }
        for (int j = k + 1; j < n; ++j) {
            if (s.at(k, j).is_zero()) continue;
            RatFun f = s.at(k, j) / piv;
            for (int rr = 0; rr < n; ++rr) {
                s.at(rr, j) -= f * s.at(rr, k);
                q.at(rr, j) -= f * q.at(rr, k);
            }
        }
        RatFun inv = piv.inv();
        for (int rr = 0; rr < n; ++rr) {
            s.at(rr, k) *= inv;
            q.at(rr, k) *= inv;
        }
        ++r;
    }
    for (int i = r; i < n; ++i)
        for (int j = r; j < n; ++j)
            if (!s.at(i, j).is_zero())
                throw IntegralityViolation("fwd does not have constant rank; not a bf-morphism with mu = 0");
    if (r != g.r) throw IntegralityViolation("fwd rank disagrees with the rank tag");
    // p * fwd * q = diag(I_r, 0)  =>  fwd = p^{-1} diag(I_r, 0) q^{-1},
    // so the frames are t_f = p^{-1}, t_e = q
    LocalFrames lf;
    lf.t_f = inverse(p);
    lf.t_f_inv = p;
    lf.t_e = q;
    lf.t_e_inv = inverse(q);
    // align the complementary block of bwd to the identity
    MatK b = lf.t_e_inv * g.bwd * lf.t_f;
    int m = g.n - r;
    MatK blk(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) blk.at(i, j) = b.at(r + i, r + j);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if ((i < r || j < r) && !b.at(i, j).is_zero())
                throw IntegralityViolation("bwd is not complementary to fwd; not a bf-morphism");
    if (!is_unimodular(blk)) throw IntegralityViolation("bwd complement block is not unimodular");
    MatK adj = MatK::identity(g.n);
    MatK blk_inv = inverse(blk);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) adj.at(r + i, r + j) = blk_inv.at(i, j);
    lf.t_f = lf.t_f * adj;
    lf.t_f_inv = inverse(lf.t_f);
    lf.r = r;
    return lf;
}

}  // namespace detail

// Matrix of the r-th exterior power of g, twisted by (M^dual)^{max(0, r - rk g)}.
// For nonzero mu this is mu^{-max(0, r - rk g)} compound(fwd, r); its entries
// land in A for every valid bf-morphism, which is asserted. For mu = 0 it is
// computed from the simultaneous local frames.
inline WedgeResult wedge_fwd(const BfMorphism& g, int r) {
    if (r < 1 || r > g.n) throw SizeMismatch("wedge order out of range");
    int twist = std::max(0, r - g.r);
    if (!g.mu.is_zero()) {
        MatK m = compound(g.fwd, r);
        RatFun f = g.mu.pow(-twist);
        m = f * m;
        if (!entries_in_A(m)) throw IntegralityViolation("wedge_fwd entry with tval < 0");
        return WedgeResult{std::move(m), twist};
    }
    detail::LocalFrames lf = detail::local_frames_mu_zero(g);
    const auto& sets = subsets_lex(g.n, r);
    MatK delta(static_cast<int>(sets.size()), static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        int p = 0;
        for (int v : sets[i])
            if (v <= lf.r) ++p;
        if (p == std::min(lf.r, r)) delta.at(static_cast<int>(i), static_cast<int>(i)) = RatFun::one();
    }
    return WedgeResult{compound(lf.t_f, r) * delta * compound(lf.t_e_inv, r), twist};
}

// Matrix of the (-r)-th exterior power of g (wedge of the flat component),
// twisted by M^{min(r, n - rk g)}.
inline WedgeResult wedge_bwd(const BfMorphism& g, int r) {
    if (r < 1 || r > g.n) throw SizeMismatch("wedge order out of range");
    int twist = std::min(r, g.n - g.r);
    if (!g.mu.is_zero()) {
        MatK m = compound(g.bwd, r);
        RatFun f = g.mu.pow(twist - r);
        m = f * m;
        if (!entries_in_A(m)) throw IntegralityViolation("wedge_bwd entry with tval < 0");
        return WedgeResult{std::move(m), twist};
    }
    detail::LocalFrames lf = detail::local_frames_mu_zero(g);
    const auto& sets = subsets_lex(g.n, r);
    MatK delta(static_cast<int>(sets.size()), static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        int p = 0;
        for (int v : sets[i])
            if (v > lf.r) ++p;
        if (p == std::min(r, g.n - lf.r)) delta.at(static_cast<int>(i), static_cast<int>(i)) = RatFun::one();
    }
    return WedgeResult{compound(lf.t_e, r) * delta * compound(lf.t_f_inv, r), twist};
}

inline BfMorphism bf_direct_sum(const BfMorphism& g1, const BfMorphism& g2) {
    if (g1.mu != g2.mu) throw SectionMismatch("direct sum needs equal sections");
    int n = g1.n + g2.n;
    BfMorphism g;
    g.n = n;
    g.r = g1.r + g2.r;
    g.mu = g1.mu;
    g.fwd = MatK(n, n);
    g.bwd = MatK(n, n);
    for (int i = 0; i < g1.n; ++i)
        for (int j = 0; j < g1.n; ++j) {
            g.fwd.at(i, j) = g1.fwd.at(i, j);
            g.bwd.at(i, j) = g1.bwd.at(i, j);
        }
    for (int i = 0; i < g2.n; ++i)
        for (int j = 0; j < g2.n; ++j) {
            g.fwd.at(g1.n + i, g1.n + j) = g2.fwd.at(i, j);
            g.bwd.at(g1.n + i, g1.n + j) = g2.bwd.at(i, j);
        }
    return g;
}

}  // namespace kgl
