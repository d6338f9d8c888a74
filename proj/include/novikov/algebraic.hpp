#ifndef NOVIKOV_ALGEBRAIC_HPP
#define NOVIKOV_ALGEBRAIC_HPP

#include "novikov/bareiss.hpp"

namespace novikov {

// ---------------------------------------------------------------------------
// A real algebraic number alpha, held as a squarefree rational polynomial
// together with an isolating interval. Zero tests against alpha may split the
// defining polynomial; the stored polynomial only ever shrinks toward the
// minimal polynomial of alpha (dynamic evaluation).
// ---------------------------------------------------------------------------
class AlgebraicPoint {
public:
    explicit AlgebraicPoint(IsolatedRoot r) : f_(r.poly.monic()), lo_(r.lo), hi_(r.hi) {
        if (!f_.rational_coeffs())
            throw std::invalid_argument("AlgebraicPoint: rational coefficients required");
    }

    const UniPoly& defining() const { return f_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }

    std::optional<Rat> rational_value() const {
        if (f_.degree() == 1)
            return -f_.coeff(0).rational_value() / f_.coeff(1).rational_value();
        return std::nullopt;
    }

    IsolatedRoot as_isolated_root() const { return {f_, lo_, hi_, lo_ >= 0 ? 1 : -1}; }

    UniPoly reduce(const UniPoly& g) const { return g.mod(f_); }

    // Does g vanish at alpha? May replace the defining polynomial by the
    // factor of it that alpha actually satisfies.
    bool vanishes(const UniPoly& g) {
        UniPoly r = g.mod(f_);
        if (r.is_zero()) return true;
        UniPoly d = UniPoly::gcd(r, f_);
        if (d.degree() <= 0) return false;
        UniPoly h = *UniPoly::exact_div(f_, d);
        // alpha is a root of exactly one of d, h; separate by refinement
        auto seq_d = sturm_sequence(d);
        auto seq_h = sturm_sequence(h);
        for (;;) {
            int in_d = d.degree() > 0 ? sturm_count(seq_d, lo_, hi_) : 0;
            int in_h = h.degree() > 0 ? sturm_count(seq_h, lo_, hi_) : 0;
            if (in_d + in_h == 1) {
                f_ = (in_d == 1 ? d : h).monic();
                return in_d == 1;
            }
            refine_interval();
        }
    }

    // Inverse of g modulo the defining polynomial; call only after vanishes(g)
    // returned false (which guarantees coprimality).
    UniPoly inverse_of(const UniPoly& g) const {
        UniPoly a = g.mod(f_);
        // extended Euclid in Q[x]
        UniPoly r0 = a, r1 = f_, s0 = UniPoly::constant(Scalar(1)), s1;
        while (!r1.is_zero()) {
            UniPoly q, r;
            UniPoly::divmod(r0, r1, q, r);
            UniPoly s = s0 - q * s1;
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if (r0.degree() != 0) throw std::logic_error("AlgebraicPoint: element not invertible");
        return (s0.scaled(r0.coeff(0).inverse())).mod(f_);
    }

private:
    UniPoly f_;
    Rat lo_, hi_;

    void refine_interval() {
        auto seq = sturm_sequence(f_);
        Rat mid = (lo_ + hi_) / 2;
        while (f_.eval_rational(mid) == 0) mid = (mid + hi_) / 2;
        if (sturm_count(seq, lo_, mid) == 1)
            hi_ = mid;
        else
            lo_ = mid;
    }
};

// Rank of a one-variable Laurent matrix specialized at u = alpha (alpha != 0).
// Entries must have rational Scalar coefficients. Exact Gaussian elimination
// with alpha-aware zero tests.
inline std::size_t rank_at_algebraic(const Matrix<LaurentPoly>& m, AlgebraicPoint& alpha) {
    if (m.empty()) return 0;
    // clear Laurent rows to polynomials (row scaling by alpha^k, alpha != 0)
    Matrix<UniPoly> w(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        long mn = 0;
        bool any = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            long e = m(i, j).min_exponents(1)[0];
            mn = any ? std::min(mn, e) : e;
            any = true;
        }
        ExpVec shift{any && mn < 0 ? -mn : 0};
        for (std::size_t j = 0; j < m.cols(); ++j)
            w(i, j) = alpha.reduce(m(i, j).shifted(shift).to_unipoly());
    }
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        std::size_t pivot = w.rows();
        for (std::size_t i = row; i < w.rows(); ++i) {
            if (!alpha.vanishes(w(i, col))) {
                pivot = i;
                break;
            }
        }
        if (pivot == w.rows()) continue;
        w.swap_rows(row, pivot);
        UniPoly inv = alpha.inverse_of(w(row, col));
        for (std::size_t i = row + 1; i < w.rows(); ++i) {
            if (w(i, col).is_zero()) continue;
            UniPoly factor = alpha.reduce(w(i, col) * inv);
            for (std::size_t j = col; j < w.cols(); ++j)
                w(i, j) = alpha.reduce(w(i, j) - factor * w(row, j));
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace novikov

#endif
