#ifndef NOVIKOV_BAREISS_HPP
#define NOVIKOV_BAREISS_HPP

#include "novikov/laurent.hpp"
#include "novikov/matrix.hpp"

namespace novikov {

template <class T>
struct RankResult {
    std::size_t rank = 0;
    T pivot_minor;  // nonzero rank x rank minor, up to sign; 1 for rank 0
};

namespace detail {

struct ScalarRing {
    static bool is_zero(const Scalar& s) { return s.is_zero(); }
    static Scalar one() { return Scalar(1); }
    static Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }
    static long pivot_weight(const Scalar&) { return 0; }
};

struct LaurentRing {
    static bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
    static LaurentPoly one() { return LaurentPoly(Scalar(1)); }
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
        auto q = LaurentPoly::exact_div(a, b);
        if (!q) throw std::logic_error("Bareiss: non-exact division (not an integral domain?)");
        return *q;
    }
    static long pivot_weight(const LaurentPoly& p) { return p.degree_span(); }
};

// Fraction-free Bareiss elimination. Pivot rule: nonzero entry of minimal
// weight in the remaining submatrix, ties broken row-major. Returns the rank
// and the final pivot, which equals an r x r minor of the input up to sign.
template <class T, class Ring>
RankResult<T> bareiss(Matrix<T> m) {
    RankResult<T> res;
    res.pivot_minor = Ring::one();
    if (m.empty()) return res;
    T prev = Ring::one();
    std::size_t step = 0;
    const std::size_t maxstep = std::min(m.rows(), m.cols());
    while (step < maxstep) {
        // pivot search
        bool found = false;
        std::size_t pi = 0, pj = 0;
        long best = 0;
        for (std::size_t i = step; i < m.rows(); ++i)
            for (std::size_t j = step; j < m.cols(); ++j) {
                if (Ring::is_zero(m(i, j))) continue;
                long w = Ring::pivot_weight(m(i, j));
                if (!found || w < best) {
                    found = true;
                    best = w;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != step) m.swap_rows(step, pi);
        if (pj != step) m.swap_cols(step, pj);
        const T pivot = m(step, step);
        for (std::size_t i = step + 1; i < m.rows(); ++i) {
            for (std::size_t j = step + 1; j < m.cols(); ++j)
                m(i, j) = Ring::exact_div(m(i, j) * pivot - m(i, step) * m(step, j), prev);
            m(i, step) = T();
        }
        prev = pivot;
        res.pivot_minor = pivot;
        ++step;
    }
    res.rank = step;
    return res;
}

}  // namespace detail

inline RankResult<Scalar> rank_fraction_free(const Matrix<Scalar>& m) {
    return detail::bareiss<Scalar, detail::ScalarRing>(m);
}

// Laurent entries are first cleared row-by-row to polynomials (multiplying a
// row by a monomial changes neither the rank nor the positive-real root
// locus of the minors).
inline RankResult<LaurentPoly> rank_fraction_free(const Matrix<LaurentPoly>& m) {
    Matrix<LaurentPoly> cleared = m;
    std::size_t k = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) k = std::max(k, m(i, j).nvars());
    for (std::size_t i = 0; i < cleared.rows(); ++i) {
        ExpVec mins(k, 0);
        bool any = false;
        for (std::size_t j = 0; j < cleared.cols(); ++j) {
            if (cleared(i, j).is_zero()) continue;
            ExpVec e = cleared(i, j).min_exponents(k);
            if (!any) {
                mins = e;
            } else {
                for (std::size_t v = 0; v < k; ++v) mins[v] = std::min(mins[v], e[v]);
            }
            any = true;
        }
        if (!any) continue;
        ExpVec shift(k, 0);
        bool nontrivial = false;
        for (std::size_t v = 0; v < k; ++v) {
            if (mins[v] < 0) {
                shift[v] = -mins[v];
                nontrivial = true;
            }
        }
        if (nontrivial)
            for (std::size_t j = 0; j < cleared.cols(); ++j)
                cleared(i, j) = cleared(i, j).shifted(shift);
    }
    return detail::bareiss<LaurentPoly, detail::LaurentRing>(cleared);
}

}  // namespace novikov

#endif
