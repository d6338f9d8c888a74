#ifndef NOVIKOV_LUCK_HPP
#define NOVIKOV_LUCK_HPP

#include "novikov/morse_bott.hpp"

namespace novikov {

// ---------------------------------------------------------------------------
// QuotientTower: a surjection psi onto Z^r (integer weight vector per 1-cell)
// together with a nested chain of finite-index subgroups given by
// componentwise moduli. Nesting means every modulus divides its successor.
// ---------------------------------------------------------------------------
struct QuotientTower {
    std::size_t r = 1;
    std::vector<ExpVec> psi;                // per edge, size r
    std::vector<std::vector<long>> moduli;  // per level, size r

    long index_of(std::size_t level) const {
        long idx = 1;
        for (long m : moduli.at(level)) idx *= m;
        return idx;
    }

    void validate(std::size_t edges) const {
        if (r == 0) throw std::invalid_argument("tower: rank must be positive");
        if (psi.size() != edges)
            throw ComplexError(ComplexErrorKind::IllFormed, "tower", "one psi vector per 1-cell");
        for (const auto& w : psi)
            if (w.size() != r)
                throw ComplexError(ComplexErrorKind::IllFormed, "tower", "psi vector of wrong rank");
        long prev_index = 0;
        for (std::size_t l = 0; l < moduli.size(); ++l) {
            if (moduli[l].size() != r)
                throw ComplexError(ComplexErrorKind::IllFormed, "tower",
                                   "level " + std::to_string(l) + " has wrong rank");
            for (long m : moduli[l])
                if (m < 1)
                    throw ComplexError(ComplexErrorKind::IllFormed, "tower",
                                       "moduli must be positive");
            if (l > 0)
                for (std::size_t j = 0; j < r; ++j)
                    if (moduli[l][j] % moduli[l - 1][j] != 0)
                        throw ComplexError(ComplexErrorKind::IllFormed,
                                           "level " + std::to_string(l),
                                           "moduli are not nested");
            long idx = index_of(l);
            if (idx <= prev_index)
                throw ComplexError(ComplexErrorKind::IllFormed, "level " + std::to_string(l),
                                   "indices must strictly increase");
            prev_index = idx;
        }
    }

    static QuotientTower cyclic(std::vector<ExpVec> psi, std::vector<long> moduli) {
        QuotientTower t;
        t.r = 1;
        t.psi = std::move(psi);
        for (long m : moduli) t.moduli.push_back({m});
        return t;
    }
};

struct NormalizedBettiSequence {
    std::vector<long> indices;            // |pi / Gamma_m| per level
    std::vector<std::vector<Rat>> levels; // normalized exact Betti vectors
    BettiVector limit;                    // generic multivariable Betti vector
};

namespace detail {

inline Matrix<Scalar> kronecker(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return out;
}

// cyclic shift by s on C[Z/m]: e_i -> e_{i+s}
inline Matrix<Scalar> cyclic_shift(long s, long m) {
    Matrix<Scalar> p(m, m);
    long sh = ((s % m) + m) % m;
    for (long i = 0; i < m; ++i) p((i + sh) % m, i) = Scalar(1);
    return p;
}

}  // namespace detail

// The flat bundle of the level with the given componentwise moduli: on edge e
// the monodromy is (tensor of cyclic shifts by psi(e)) tensor rho(e).
inline FlatBundle induced_bundle(const std::vector<ExpVec>& psi, const std::vector<long>& moduli,
                                 const FlatBundle& base) {
    FlatBundle out;
    long idx = 1;
    for (long m : moduli) {
        if (m < 1) throw std::invalid_argument("induced_bundle: modulus must be positive");
        idx *= m;
    }
    out.dim = static_cast<std::size_t>(idx) * base.dim;
    for (std::size_t e = 0; e < base.rho.size(); ++e) {
        Matrix<Scalar> perm(1, 1);
        perm(0, 0) = Scalar(1);
        for (std::size_t j = 0; j < moduli.size(); ++j)
            perm = detail::kronecker(perm, detail::cyclic_shift(psi.at(e).at(j), moduli[j]));
        out.rho.push_back(detail::kronecker(perm, base.rho[e]));
    }
    return out;
}

inline FlatBundle induced_bundle(const std::vector<ExpVec>& psi, long m, const FlatBundle& base) {
    return induced_bundle(psi, std::vector<long>{m}, base);
}

// ---------------------------------------------------------------------------
// normalized_betti_sequence: per level, the generic Betti vector of the
// complex with the induced permutation bundle, divided by the index. The
// limit candidate carries psi on independent deformation variables
// v_1..v_r appended after the z-variables.
// ---------------------------------------------------------------------------
inline NormalizedBettiSequence normalized_betti_sequence(const CellComplex& cx, const Cocycle& z,
                                                         const FlatBundle& F,
                                                         const QuotientTower& tower) {
    tower.validate(cx.count(1));
    NormalizedBettiSequence out;
    for (std::size_t l = 0; l < tower.moduli.size(); ++l) {
        FlatBundle Fm = induced_bundle(tower.psi, tower.moduli[l], F);
        NovikovComplex nc = build_novikov_complex(cx, z, Fm);
        BettiVector b = generic_betti(nc);
        long idx = tower.index_of(l);
        out.indices.push_back(idx);
        std::vector<Rat> norm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
            norm[i] = Rat(b[i], idx);
            norm[i].canonicalize();
        }
        out.levels.push_back(std::move(norm));
    }
    Cocycle joint;
    joint.k = z.k + tower.r;
    for (std::size_t e = 0; e < cx.count(1); ++e) {
        ExpVec w = z.weight.at(e);
        w.resize(z.k);
        for (long v : tower.psi[e]) w.push_back(v);
        joint.weight.push_back(std::move(w));
    }
    out.limit = generic_betti(build_novikov_complex(cx, joint, F));
    return out;
}

// ---------------------------------------------------------------------------
// character_decomposition_oracle: for pi = Z the level-m dimension splits as a
// sum over the m characters of Z/m. Independent of the permutation-bundle
// route, hence usable as a cross-check.
// ---------------------------------------------------------------------------
inline BettiVector character_decomposition_oracle(const CellComplex& cx, const Cocycle& z,
                                                  const FlatBundle& F,
                                                  const std::vector<ExpVec>& psi, long m) {
    if (m < 1) throw std::invalid_argument("character_decomposition_oracle: m must be positive");
    for (const auto& w : psi)
        if (w.size() != 1)
            throw ComplexError(ComplexErrorKind::MultivariableUnsupported, "oracle",
                               "character decomposition requires pi = Z");
    BettiVector sum;
    for (long j = 0; j < m; ++j) {
        FlatBundle Fj = F;
        Scalar zeta = Scalar::zeta(static_cast<unsigned long>(m)).pow(j);
        for (std::size_t e = 0; e < Fj.rho.size(); ++e) {
            Scalar chi = zeta.pow(psi.at(e)[0]);
            for (std::size_t a = 0; a < Fj.rho[e].rows(); ++a)
                for (std::size_t b = 0; b < Fj.rho[e].cols(); ++b) Fj.rho[e](a, b) *= chi;
        }
        BettiVector b = generic_betti(build_novikov_complex(cx, z, Fj));
        if (sum.empty()) sum.assign(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Rate bound for pi = Z: per degree, the distance between the normalized
// level-m vector and the limit is at most J_i(m)/m, where J_i(m) counts (with
// multiplicity) the m-th-root-of-unity zeros of the witnessing pivot minors
// adjacent to degree i. The localized Smith form bounds the rank drop at any
// point by the vanishing order of the witness minor there.
// ---------------------------------------------------------------------------
inline std::vector<long> rate_bound_vector(const CellComplex& cx, const std::vector<ExpVec>& psi,
                                           const FlatBundle& F, long m) {
    for (const auto& w : psi)
        if (w.size() != 1)
            throw ComplexError(ComplexErrorKind::MultivariableUnsupported, "rate bound",
                               "pi = Z required");
    Cocycle zc{1, psi};
    NovikovComplex nc = build_novikov_complex(cx, zc, F);
    std::vector<LaurentPoly> minors;
    generic_betti(nc, &minors);
    UniPoly cyclo_m;  // v^m - 1
    {
        std::vector<Scalar> c(m + 1);
        c[0] = Scalar(-1);
        c[m] = Scalar(1);
        cyclo_m = UniPoly(std::move(c));
    }
    auto unit_root_multiplicity = [&](const LaurentPoly& lp) {
        if (lp.is_zero()) return 0L;
        ExpVec mn = lp.min_exponents(1);
        ExpVec shift{mn[0] < 0 ? -mn[0] : 0};
        UniPoly p = lp.shifted(shift).to_unipoly();
        if (!p.rational_coeffs()) p = p.galois_norm();
        long count = 0;
        for (;;) {
            UniPoly g = UniPoly::gcd(p, cyclo_m);
            if (g.degree() <= 0) break;
            count += g.degree();
            p = *UniPoly::exact_div(p, g);
        }
        return count;
    };
    std::vector<long> mult(nc.diff.size(), 0);
    for (std::size_t i = 0; i < minors.size(); ++i) mult[i] = unit_root_multiplicity(minors[i]);
    std::size_t n = nc.dim();
    std::vector<long> J(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (i < mult.size()) J[i] += mult[i];
        if (i >= 1 && i - 1 < mult.size()) J[i] += mult[i - 1];
    }
    return J;
}

inline InequalityCertificate verify_l2_novikov_bott(const LambdaPoly& M, const LambdaPoly& N) {
    return verify_novikov_bott(M, N, CoefficientMode::Rational);
}

}  // namespace novikov

#endif
