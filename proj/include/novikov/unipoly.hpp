#ifndef NOVIKOV_UNIPOLY_HPP
#define NOVIKOV_UNIPOLY_HPP

#include <algorithm>
#include <optional>
#include <variant>

#include "novikov/scalar.hpp"

namespace novikov {

// ---------------------------------------------------------------------------
// UniPoly: dense univariate polynomial with Scalar coefficients (low degree
// first, trailing zeros trimmed). Hosts the lambda-polynomials, the minor
// polynomials on the positive u-axis, and the Sturm machinery (the latter
// requires rational coefficients).
// ---------------------------------------------------------------------------
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
    UniPoly(std::initializer_list<long> v) {
        for (long x : v) c_.emplace_back(x);
        trim();
    }

    static UniPoly constant(Scalar s) { return UniPoly(std::vector<Scalar>{std::move(s)}); }
    static UniPoly variable() { return UniPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    static UniPoly monomial(Scalar c, std::size_t deg) {
        std::vector<Scalar> v(deg + 1);
        v[deg] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(); }
    const Scalar& lead() const {
        if (c_.empty()) throw std::logic_error("UniPoly: zero has no leading coefficient");
        return c_.back();
    }

    bool rational_coeffs() const {
        return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Scalar> r = a.c_;
        if (r.size() < b.c_.size()) r.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Scalar> r = a.c_;
        if (r.size() < b.c_.size()) r.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<Scalar> r = c_;
        for (auto& v : r) v = -v;
        return UniPoly(std::move(r));
    }
    UniPoly scaled(const Scalar& s) const {
        std::vector<Scalar> r = c_;
        for (auto& v : r) v *= s;
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Division with remainder over the coefficient field; den nonzero.
    static void divmod(const UniPoly& num, const UniPoly& den, UniPoly& q, UniPoly& r) {
        if (den.is_zero()) throw std::domain_error("UniPoly: division by zero");
        std::vector<Scalar> rem = num.c_;
        std::vector<Scalar> quo(rem.size() >= den.c_.size() ? rem.size() - den.c_.size() + 1 : 0);
        Scalar inv_lead = den.lead().inverse();
        while (rem.size() >= den.c_.size()) {
            Scalar c = rem.back() * inv_lead;
            std::size_t shift = rem.size() - den.c_.size();
            quo[shift] = c;
            for (std::size_t i = 0; i < den.c_.size(); ++i) rem[shift + i] -= c * den.c_[i];
            rem.pop_back();
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        }
        q = UniPoly(std::move(quo));
        r = UniPoly(std::move(rem));
    }

    UniPoly mod(const UniPoly& den) const {
        UniPoly q, r;
        divmod(*this, den, q, r);
        return r;
    }

    // Exact quotient, or nullopt when the remainder is nonzero.
    static std::optional<UniPoly> exact_div(const UniPoly& num, const UniPoly& den) {
        UniPoly q, r;
        divmod(num, den, q, r);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inverse());
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a.mod(b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Scalar> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
        return UniPoly(std::move(r));
    }

    UniPoly squarefree_part() const {
        if (is_zero()) throw std::domain_error("UniPoly: squarefree part of zero");
        UniPoly g = gcd(*this, derivative());
        return exact_div(*this, g)->monic();
    }

    Scalar eval(const Scalar& x) const {
        Scalar r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Rat eval_rational(const Rat& x) const {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->rational_value();
        return r;
    }

    // Product of the Galois conjugates of the coefficients' field; the result
    // has rational coefficients and the same real roots (with multiplicity
    // folded in over the conjugates).
    UniPoly galois_norm() const {
        unsigned long n = 1;
        for (const auto& c : c_) n = std::lcm(n, c.conductor());
        if (n == 1) return *this;
        UniPoly acc = UniPoly::constant(Scalar(1));
        for (unsigned long a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            std::vector<Scalar> conj(c_.size());
            for (std::size_t i = 0; i < c_.size(); ++i) conj[i] = c_[i].promoted(n).conjugate(a);
            acc = acc * UniPoly(std::move(conj));
        }
        for (const auto& c : acc.c_)
            if (!c.is_rational()) throw std::logic_error("UniPoly: Galois norm not rational");
        return acc;
    }

    std::string to_string(const std::string& var = "u") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].to_string();
            bool negated = false;
            if (!first) {
                if (c_[i].is_rational() && sign_of(c_[i].rational_value()) < 0) {
                    os << "-";
                    cs = (-c_[i]).to_string();
                    negated = true;
                } else {
                    os << "+";
                }
            }
            (void)negated;
            first = false;
            bool composite = cs.find('+') != std::string::npos ||
                             (cs.find('-') != std::string::npos && cs.rfind('-') > 0);
            if (i == 0) {
                os << (composite ? "(" + cs + ")" : cs);
            } else {
                if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    std::vector<Scalar> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// ---------------------------------------------------------------------------
// Sturm sequences and real root isolation on (0, oo). Rational coefficients
// only; everything is exact.
// ---------------------------------------------------------------------------

inline std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    seq.push_back(p);
    UniPoly d = p.derivative();
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2 && !seq.back().is_zero()) {
        UniPoly r = seq[seq.size() - 2].mod(seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

inline int sturm_variations_at(const std::vector<UniPoly>& seq, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sign_of(p.eval_rational(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

inline int sturm_variations_at_infinity(const std::vector<UniPoly>& seq) {
    int var = 0, prev = 0;
    for (const auto& p : seq) {
        if (p.is_zero()) continue;
        int s = sign_of(p.lead().rational_value());
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots in (a, b], for a squarefree input of the
// sequence's head.
inline int sturm_count(const std::vector<UniPoly>& seq, const Rat& a, const Rat& b) {
    return sturm_variations_at(seq, a) - sturm_variations_at(seq, b);
}

// IsolatedRoot: one real root of a squarefree rational polynomial, certified
// by Sturm counts on an interval whose endpoints are not roots.
struct IsolatedRoot {
    UniPoly poly;  // squarefree, rational coefficients
    Rat lo, hi;    // exactly one root of poly in (lo, hi)
    int sign = 1;  // sign of the root

    // Halve the interval width while keeping the certificate.
    void refine() {
        Rat mid = (lo + hi) / 2;
        while (poly.eval_rational(mid) == 0) mid = (mid + hi) / 2;  // avoid landing on the root
        auto seq = sturm_sequence(poly);
        if (sturm_count(seq, lo, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }

    void refine_below(const Rat& width) {
        while (hi - lo > width) refine();
    }

    bool contains(const Rat& x) const { return lo < x && x < hi; }

    // Present iff the isolated root is rational (detected when the defining
    // polynomial has been reduced to a linear one).
    std::optional<Rat> rational_value() const {
        if (poly.degree() == 1) {
            Rat v = -poly.coeff(0).rational_value() / poly.coeff(1).rational_value();
            return v;
        }
        return std::nullopt;
    }

    // Non-authoritative decimal rendering for human output.
    double approx() const { return (lo.get_d() + hi.get_d()) / 2; }
};

// Cauchy-style bound: all real roots lie in (-B, B).
inline Rat root_bound(const UniPoly& p) {
    Rat m(0);
    Rat lead = abs(p.lead().rational_value());
    for (long i = 0; i < p.degree(); ++i) {
        Rat a = abs(p.coeff(i).rational_value()) / lead;
        if (a > m) m = a;
    }
    return m + 1;
}

// Isolating intervals for the roots of p in (0, oo); throws on p == 0.
// Intervals are pairwise disjoint with rational non-root endpoints; each
// contains exactly one root of the squarefree part of p.
inline std::vector<IsolatedRoot> sturm_isolate_positive_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("sturm_isolate_positive_roots: zero polynomial");
    if (!p.rational_coeffs())
        throw std::invalid_argument("sturm_isolate_positive_roots: rational coefficients required");
    UniPoly f = p.squarefree_part();
    // strip the root at u = 0 so the open interval (0, B) is usable
    while (f.coeff(0).is_zero() && f.degree() >= 1) f = *UniPoly::exact_div(f, UniPoly::variable());
    if (f.degree() < 1) return {};
    auto seq = sturm_sequence(f);
    std::vector<IsolatedRoot> out;
    Rat B = root_bound(f);
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> stack;
    int total = sturm_count(seq, Rat(0), B);
    if (total > 0) stack.push_back({Rat(0), B, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            out.push_back({f, s.a, s.b, 1});
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        while (f.eval_rational(mid) == 0) mid = (mid + s.b) / 2;
        int left = sturm_count(seq, s.a, mid);
        if (left > 0) stack.push_back({s.a, mid, left});
        if (s.count - left > 0) stack.push_back({mid, s.b, s.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace novikov

#endif
