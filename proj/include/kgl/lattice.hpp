#pragma once

#include "kgl/smith.hpp"

namespace kgl {

// Full-rank A-lattice in K^n, represented by the canonical column Hermite
// basis, so structural equality decides equality of lattices.
struct Lattice {
    int n = 0;
    MatK basis;  // n x n, canonical HNF

    Lattice() = default;
    Lattice(int rank, const MatK& gen_basis) : n(rank), basis(hnf_dvr(gen_basis)) {
        if (gen_basis.rows != rank || gen_basis.cols != rank) throw SizeMismatch("lattice basis shape");
    }

    static Lattice standard(int rank) { return Lattice(rank, MatK::identity(rank)); }
    // t^k A^n
    static Lattice scaled_standard(int rank, long k) {
        MatK b = MatK::identity(rank);
        for (int i = 0; i < rank; ++i) b.at(i, i) = RatFun::t_pow(k);
        return Lattice(rank, b);
    }

    friend bool operator==(const Lattice& x, const Lattice& y) { return x.n == y.n && x.basis == y.basis; }
    friend bool operator!=(const Lattice& x, const Lattice& y) { return !(x == y); }

    bool contains(const std::vector<RatFun>& v) const {
        std::vector<RatFun> x = solve_exact(basis, v);
        for (const auto& c : x)
            if (!c.in_A()) return false;
        return true;
    }
    bool contains(const Lattice& other) const {
        for (int j = 0; j < n; ++j)
            if (!contains(other.basis.col(j))) return false;
        return true;
    }
};

inline Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.n != b.n) throw SizeMismatch("lattice sum");
    MatK gen(a.n, 2 * a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            gen.at(i, j) = a.basis.at(i, j);
            gen.at(i, a.n + j) = b.basis.at(i, j);
        }
    Lattice out;
    out.n = a.n;
    out.basis = hnf_cols(gen);
    return out;
}

// dual lattice w.r.t. the standard pairing; basis = inverse transpose
inline Lattice lattice_dual(const Lattice& a) {
    Lattice out;
    out.n = a.n;
    out.basis = hnf_dvr(inverse(a.basis).transpose());
    return out;
}

// intersection by duality: (L1 cap L2)^dual = L1^dual + L2^dual
inline Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    return lattice_dual(lattice_sum(lattice_dual(a), lattice_dual(b)));
}

inline Lattice lattice_image(const MatK& phi, const Lattice& l) {
    if (phi.cols != l.n) throw SizeMismatch("lattice image");
    return Lattice(l.n, phi * l.basis);
}

inline Lattice lattice_preimage(const MatK& phi, const Lattice& l) {
    if (phi.cols != l.n || !phi.is_square()) throw SizeMismatch("lattice preimage");
    return Lattice(l.n, inverse(phi) * l.basis);
}

}  // namespace kgl
