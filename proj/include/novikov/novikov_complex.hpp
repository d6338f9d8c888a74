#ifndef NOVIKOV_NOVIKOV_COMPLEX_HPP
#define NOVIKOV_NOVIKOV_COMPLEX_HPP

#include "novikov/algebraic.hpp"
#include "novikov/cell_complex.hpp"

namespace novikov {

using BettiVector = std::vector<long>;

// ---------------------------------------------------------------------------
// NovikovComplex: the deformed cochain complex. diff[i] maps degree i to
// degree i+1 and has size (d*c_{i+1}) x (d*c_i); entries are Laurent
// polynomials in the deformation variables u_1..u_k.
// ---------------------------------------------------------------------------
struct NovikovComplex {
    std::vector<std::size_t> cells;           // c_0..c_n
    std::size_t fiber_dim = 1;                // d
    std::size_t k = 1;                        // deformation variables
    std::vector<Matrix<LaurentPoly>> diff;    // size n

    std::size_t dim() const { return cells.empty() ? 0 : cells.size() - 1; }
    std::size_t chain_dim(std::size_t i) const {
        return (i < cells.size() ? cells[i] : 0) * fiber_dim;
    }
};

// A specialization of the above (or a directly supplied twisted complex).
struct TwistedComplex {
    std::vector<std::size_t> cells;
    std::size_t fiber_dim = 1;
    std::vector<Matrix<Scalar>> diff;

    std::size_t dim() const { return cells.empty() ? 0 : cells.size() - 1; }
    std::size_t chain_dim(std::size_t i) const {
        return (i < cells.size() ? cells[i] : 0) * fiber_dim;
    }
};

struct JumpPoint {
    IsolatedRoot root;
    std::optional<BettiVector> betti;  // Betti vector at the root, when confirmed
    bool confirmed = false;
};

struct JumpSet {
    UniPoly defining;               // squarefree J(u); candidates are its positive roots
    std::vector<JumpPoint> points;  // confirmed jump points
    std::vector<JumpPoint> unconfirmed;  // candidates the scalar layer cannot decide
};

// ---------------------------------------------------------------------------
// build_novikov_complex: validation layers (shape, untwisted boundary,
// cocycle, flatness, symbolic delta^2 = 0) followed by assembly of the
// deformed differentials.
// ---------------------------------------------------------------------------
inline NovikovComplex build_novikov_complex(const CellComplex& cx, const Cocycle& z,
                                            const FlatBundle& F) {
    cx.validate_shape();
    const std::size_t n = cx.cells.empty() ? 0 : cx.cells.size() - 1;
    const std::size_t edges = cx.count(1);
    if (z.weight.size() != edges)
        throw ComplexError(ComplexErrorKind::IllFormed, "cocycle", "one weight vector per 1-cell required");
    for (std::size_t e = 0; e < edges; ++e)
        if (z.weight[e].size() != z.k)
            throw ComplexError(ComplexErrorKind::IllFormed, cx.cell_name(1, e),
                               "weight vector has wrong rank");
    if (F.rho.size() != edges)
        throw ComplexError(ComplexErrorKind::IllFormed, "bundle", "one monodromy matrix per 1-cell required");
    for (std::size_t e = 0; e < edges; ++e) {
        if (F.rho[e].rows() != F.dim || F.rho[e].cols() != F.dim)
            throw ComplexError(ComplexErrorKind::IllFormed, cx.cell_name(1, e),
                               "monodromy matrix has wrong shape");
        if (F.dim > 0) F.inverse_of(e);  // throws on singular monodromy
    }

    cx.validate_boundary_squares_to_zero();

    // cocycle condition on every 2-cell
    if (n >= 2) {
        for (std::size_t c = 0; c < cx.boundaries[1].size(); ++c) {
            ExpVec acc(z.k, 0);
            for (const auto& t : cx.boundaries[1][c])
                for (std::size_t i = 0; i < z.k; ++i) acc[i] += t.coeff * z.weight[t.cell][i];
            for (long v : acc)
                if (v != 0)
                    throw ComplexError(ComplexErrorKind::CocycleViolation, cx.cell_name(2, c),
                                       "attaching boundary has nonzero cocycle weight");
            if (c < cx.attaching_words.size() && !cx.attaching_words[c].empty()) {
                for (long v : z.weight_of(cx.attaching_words[c]))
                    if (v != 0)
                        throw ComplexError(ComplexErrorKind::CocycleViolation, cx.cell_name(2, c),
                                           "attaching word has nonzero cocycle weight");
            }
        }
    }

    // direct flatness check where attaching words are available
    if (F.dim > 0)
        for (std::size_t c = 0; c < cx.attaching_words.size(); ++c) {
            if (cx.attaching_words[c].empty()) continue;
            if (!(F.of_word(cx.attaching_words[c]) == FlatBundle::identity(F.dim)))
                throw ComplexError(ComplexErrorKind::FlatnessViolation, cx.cell_name(2, c),
                                   "monodromy around attaching word is not the identity");
        }

    NovikovComplex nc;
    nc.cells = cx.cells;
    nc.fiber_dim = F.dim;
    nc.k = z.k;
    const std::size_t d = F.dim;
    for (std::size_t i = 0; i + 1 <= n; ++i) {
        Matrix<LaurentPoly> m(cx.count(i + 1) * d, cx.count(i) * d);
        for (std::size_t c = 0; c < cx.boundaries[i].size(); ++c)
            for (const auto& t : cx.boundaries[i][c]) {
                ExpVec w = z.weight_of(t.path);
                Matrix<Scalar> hol = F.of_word(t.path);
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b) {
                        if (hol(a, b).is_zero()) continue;
                        m(c * d + a, t.cell * d + b) +=
                            LaurentPoly::monomial(hol(a, b) * Scalar(t.coeff), w);
                    }
            }
        nc.diff.push_back(std::move(m));
    }

    // flatness at u == 1, reported per 2-cell
    if (nc.diff.size() >= 2 && d > 0) {
        std::vector<Scalar> ones(nc.k, Scalar(1));
        Matrix<Scalar> d0 = nc.diff[0].map([&](const LaurentPoly& p) { return p.eval(ones); });
        Matrix<Scalar> d1 = nc.diff[1].map([&](const LaurentPoly& p) { return p.eval(ones); });
        Matrix<Scalar> prod = d1 * d0;
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t cidx = 0; cidx < prod.cols(); ++cidx)
                if (!prod(r, cidx).is_zero())
                    throw ComplexError(ComplexErrorKind::FlatnessViolation, cx.cell_name(2, r / d),
                                       "deformed differential does not square to zero at u = 1");
    }

    // full symbolic check, identically in u
    for (std::size_t i = 0; i + 1 < nc.diff.size(); ++i) {
        if (nc.diff[i].empty() || nc.diff[i + 1].empty()) continue;
        Matrix<LaurentPoly> prod = nc.diff[i + 1] * nc.diff[i];
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                if (!prod(r, c).is_zero())
                    throw ComplexError(ComplexErrorKind::IllFormed,
                                       cx.cell_name(i + 2, d > 0 ? r / d : r),
                                       "twisted differential does not square to zero");
    }
    return nc;
}

// ---------------------------------------------------------------------------
// specialize: entrywise evaluation at a nonzero point of the torus.
// ---------------------------------------------------------------------------
inline TwistedComplex specialize(const NovikovComplex& nc, const std::vector<Scalar>& u0) {
    if (u0.size() != nc.k)
        throw ComplexError(ComplexErrorKind::ZeroSpecialization, "specialization point",
                           "expected " + std::to_string(nc.k) + " coordinates");
    for (std::size_t i = 0; i < u0.size(); ++i)
        if (u0[i].is_zero())
            throw ComplexError(ComplexErrorKind::ZeroSpecialization,
                               "u_" + std::to_string(i + 1), "coordinate is zero");
    TwistedComplex tc;
    tc.cells = nc.cells;
    tc.fiber_dim = nc.fiber_dim;
    for (const auto& m : nc.diff)
        tc.diff.push_back(m.map([&](const LaurentPoly& p) { return p.eval(u0); }));
    return tc;
}

inline TwistedComplex specialize(const NovikovComplex& nc, const Scalar& u0) {
    return specialize(nc, std::vector<Scalar>{u0});
}

// ---------------------------------------------------------------------------
// Betti numbers: b_i = dim C^i - rank delta_i - rank delta_{i-1}.
// ---------------------------------------------------------------------------
inline BettiVector betti(const TwistedComplex& tc) {
    std::size_t n = tc.dim();
    std::vector<std::size_t> ranks(tc.diff.size(), 0);
    for (std::size_t i = 0; i < tc.diff.size(); ++i)
        ranks[i] = rank_fraction_free(tc.diff[i]).rank;
    BettiVector b(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        long v = static_cast<long>(tc.chain_dim(i));
        if (i < ranks.size()) v -= static_cast<long>(ranks[i]);
        if (i >= 1 && i - 1 < ranks.size()) v -= static_cast<long>(ranks[i - 1]);
        b[i] = v;
    }
    return b;
}

// Generic Betti vector over the rational function field Q(u_1..u_k), with the
// witnessing pivot minors per degree.
inline BettiVector generic_betti(const NovikovComplex& nc,
                                 std::vector<LaurentPoly>* minors = nullptr) {
    std::size_t n = nc.dim();
    std::vector<std::size_t> ranks(nc.diff.size(), 0);
    if (minors) minors->assign(nc.diff.size(), LaurentPoly(Scalar(1)));
    for (std::size_t i = 0; i < nc.diff.size(); ++i) {
        auto r = rank_fraction_free(nc.diff[i]);
        ranks[i] = r.rank;
        if (minors) (*minors)[i] = r.pivot_minor;
    }
    BettiVector b(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        long v = static_cast<long>(nc.chain_dim(i));
        if (i < ranks.size()) v -= static_cast<long>(ranks[i]);
        if (i >= 1 && i - 1 < ranks.size()) v -= static_cast<long>(ranks[i - 1]);
        b[i] = v;
    }
    return b;
}

inline long euler_characteristic(const NovikovComplex& nc) {
    long chi = 0;
    for (std::size_t i = 0; i < nc.cells.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(nc.chain_dim(i));
    return chi;
}

inline bool betti_dominates_strictly(const BettiVector& a, const BettiVector& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strict = true;
    }
    return strict;
}

namespace detail {

// All rational roots of a rational polynomial, via the rational root theorem
// on the cleared integer polynomial. nullopt when divisor enumeration would
// be unreasonably large.
inline std::optional<std::vector<Rat>> rational_roots(const UniPoly& f) {
    if (f.degree() < 1) return std::vector<Rat>{};
    Int den_lcm(1);
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.rational_value().get_den());
    std::vector<Int> a(f.coeffs().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat v = f.coeff(i).rational_value() * Rat(den_lcm);
        a[i] = v.get_num();
    }
    Int content(0);
    for (const auto& v : a) content = gcd(content, v);
    if (content != 0)
        for (auto& v : a) v /= content;
    std::vector<Rat> roots;
    std::size_t low = 0;
    while (low < a.size() && a[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low + 1 >= a.size()) return roots;
    Int a0 = abs(a[low]), an = abs(a.back());
    auto divisors = [](Int v) -> std::optional<std::vector<Int>> {
        std::vector<std::pair<Int, unsigned>> fac;
        Int m = v;
        for (Int p(2); p * p <= m && p < 2000000; ++p) {
            if (m % p == 0) {
                unsigned e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                fac.push_back({p, e});
            }
        }
        if (m > 1) {
            if (m > Int("1000000000000")) return std::nullopt;  // give up on huge prime parts
            fac.push_back({m, 1});
        }
        std::vector<Int> divs{Int(1)};
        for (auto& [p, e] : fac) {
            std::size_t base = divs.size();
            Int pk(1);
            for (unsigned i = 1; i <= e; ++i) {
                pk *= p;
                for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
            }
            if (divs.size() > 20000) return std::nullopt;
        }
        return divs;
    };
    auto dn = divisors(a0), dq = divisors(an);
    if (!dn || !dq) return std::nullopt;
    for (const auto& p : *dn)
        for (const auto& q : *dq) {
            for (int s : {1, -1}) {
                Rat cand(s * p, q);
                cand.canonicalize();
                if (f.eval_rational(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// jump_points: sound and complete enumeration of the positive-real jump locus
// for k = 1. Candidates are the positive roots of the product of the pivot
// minors; each candidate is confirmed by an exact rank computation at the
// point (rational or real-algebraic).
// ---------------------------------------------------------------------------
inline JumpSet jump_points(const NovikovComplex& nc) {
    if (nc.k != 1)
        throw ComplexError(ComplexErrorKind::MultivariableUnsupported, "jump_points",
                           "single deformation variable required");
    std::vector<LaurentPoly> minors;
    BettiVector generic = generic_betti(nc, &minors);

    unsigned long conductor = 1;
    for (const auto& m : nc.diff)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (const auto& [e, c] : m(i, j).terms())
                    conductor = std::lcm(conductor, c.conductor());

    UniPoly product = UniPoly::constant(Scalar(1));
    for (const auto& m : minors) {
        if (m.is_constant()) continue;
        // clear to a polynomial; u = 0 is excluded so this changes no roots
        ExpVec mins = m.min_exponents(1);
        ExpVec shift{mins[0] < 0 ? -mins[0] : 0};
        UniPoly p = m.shifted(shift).to_unipoly();
        if (!p.rational_coeffs()) p = p.galois_norm();
        product = product * p;
    }

    JumpSet js;
    if (product.degree() < 1) {
        js.defining = UniPoly::constant(Scalar(1));
        return js;
    }
    js.defining = product.squarefree_part();
    auto roots = sturm_isolate_positive_roots(product);

    for (auto& root : roots) {
        JumpPoint jp;
        jp.root = root;
        // rational candidates are cheapest and yield a linear defining factor
        auto rats = detail::rational_roots(root.poly);
        std::optional<Rat> hit;
        if (rats)
            for (const auto& r : *rats)
                if (root.contains(r)) hit = r;
        if (hit) {
            BettiVector b = betti(specialize(nc, Scalar(*hit)));
            jp.confirmed = true;
            jp.betti = b;
            jp.root.poly = UniPoly({0, 1}) - UniPoly::constant(Scalar(*hit));
            if (betti_dominates_strictly(b, generic)) js.points.push_back(std::move(jp));
        } else if (conductor == 1) {
            AlgebraicPoint alpha(root);
            std::vector<std::size_t> ranks(nc.diff.size(), 0);
            for (std::size_t i = 0; i < nc.diff.size(); ++i)
                ranks[i] = rank_at_algebraic(nc.diff[i], alpha);
            BettiVector b(nc.dim() + 1, 0);
            for (std::size_t i = 0; i <= nc.dim(); ++i) {
                long v = static_cast<long>(nc.chain_dim(i));
                if (i < ranks.size()) v -= static_cast<long>(ranks[i]);
                if (i >= 1 && i - 1 < ranks.size()) v -= static_cast<long>(ranks[i - 1]);
                b[i] = v;
            }
            jp.root = alpha.as_isolated_root();
            jp.confirmed = true;
            jp.betti = b;
            if (betti_dominates_strictly(b, generic)) js.points.push_back(std::move(jp));
        } else {
            // cyclotomic coefficients at an irrational candidate: the scalar
            // layer cannot decide, report unconfirmed rather than guess
            js.unconfirmed.push_back(std::move(jp));
        }
    }
    return js;
}

}  // namespace novikov

#endif
