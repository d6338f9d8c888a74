#ifndef NOVIKOV_LAURENT_HPP
#define NOVIKOV_LAURENT_HPP

#include <map>

#include "novikov/unipoly.hpp"

namespace novikov {

// Exponent vectors are stored with trailing zeros trimmed, so a constant is
// the empty vector and univariate monomials are length-1 vectors. Comparison
// is lex with implicit zero padding.
using ExpVec = std::vector<long>;

struct ExpLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            long x = i < a.size() ? a[i] : 0;
            long y = i < b.size() ? b[i] : 0;
            if (x != y) return x < y;
        }
        return false;
    }
};

inline void trim_exp(ExpVec& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

// ---------------------------------------------------------------------------
// LaurentPoly: finite Scalar-combination of monomials u^e, e in Z^k. The ring
// is an integral domain; all arithmetic is exact.
// ---------------------------------------------------------------------------
class LaurentPoly {
public:
    using Terms = std::map<ExpVec, Scalar, ExpLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(Scalar s) {
        if (!s.is_zero()) t_[{}] = std::move(s);
    }
    LaurentPoly(long v) : LaurentPoly(Scalar(v)) {}

    static LaurentPoly monomial(Scalar c, ExpVec e) {
        LaurentPoly p;
        trim_exp(e);
        if (!c.is_zero()) p.t_[std::move(e)] = std::move(c);
        return p;
    }
    static LaurentPoly variable(std::size_t idx = 0) {
        ExpVec e(idx + 1, 0);
        e[idx] = 1;
        return monomial(Scalar(1), std::move(e));
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t nvars() const {
        std::size_t k = 0;
        for (const auto& [e, c] : t_) k = std::max(k, e.size());
        return k;
    }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Scalar constant_value() const {
        if (t_.empty()) return Scalar();
        if (!is_constant()) throw std::logic_error("LaurentPoly: not constant");
        return t_.begin()->second;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                ExpVec e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = (i < ea.size() ? ea[i] : 0) + (i < eb.size() ? eb[i] : 0);
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const Scalar& s) const {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : t_) r.t_[e] = c * s;
        return r;
    }

    // Multiply by the monomial u^e.
    LaurentPoly shifted(const ExpVec& shift) const {
        LaurentPoly r;
        for (const auto& [e, c] : t_) {
            ExpVec ne(std::max(e.size(), shift.size()), 0);
            for (std::size_t i = 0; i < ne.size(); ++i)
                ne[i] = (i < e.size() ? e[i] : 0) + (i < shift.size() ? shift[i] : 0);
            trim_exp(ne);
            r.t_[std::move(ne)] = c;
        }
        return r;
    }

    // Componentwise minimum of the exponent vectors over all terms (0 for
    // the zero polynomial); used to clear Laurent entries to polynomials.
    ExpVec min_exponents(std::size_t k) const {
        ExpVec m(k, 0);
        bool first = true;
        for (const auto& [e, c] : t_) {
            for (std::size_t i = 0; i < k; ++i) {
                long v = i < e.size() ? e[i] : 0;
                if (first || v < m[i]) m[i] = first ? v : std::min(m[i], v);
            }
            first = false;
        }
        return m;
    }

    long max_total_degree() const {
        long m = 0;
        bool first = true;
        for (const auto& [e, c] : t_) {
            long s = 0;
            for (long v : e) s += v;
            if (first || s > m) m = s;
            first = false;
        }
        return m;
    }

    // max total degree minus min total degree; pivot weight for Bareiss
    long degree_span() const {
        if (t_.empty()) return 0;
        long lo = 0, hi = 0;
        bool first = true;
        for (const auto& [e, c] : t_) {
            long s = 0;
            for (long v : e) s += v;
            if (first) lo = hi = s;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            first = false;
        }
        return hi - lo;
    }

    Scalar eval(const std::vector<Scalar>& point) const {
        Scalar r;
        for (const auto& [e, c] : t_) {
            Scalar term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (i >= point.size()) throw std::invalid_argument("LaurentPoly: missing coordinate");
                term *= point[i].pow(e[i]);
            }
            r += term;
        }
        return r;
    }

    // Substitute u_idx -> value, keeping the other variables symbolic.
    LaurentPoly substituted(std::size_t idx, const Scalar& value) const {
        LaurentPoly r;
        for (const auto& [e, c] : t_) {
            ExpVec ne = e;
            Scalar nc = c;
            if (idx < ne.size() && ne[idx] != 0) {
                nc *= value.pow(ne[idx]);
                ne[idx] = 0;
            }
            trim_exp(ne);
            r.add_term(std::move(ne), nc);
        }
        return r;
    }

    // Exact quotient in the Laurent ring (leading-term division, lex order);
    // nullopt when not an exact multiple.
    static std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (num.is_zero()) return LaurentPoly();
        // divisibility in the Laurent ring is divisibility of the monomial-
        // content-free polynomial parts; shift both operands so every
        // componentwise minimum exponent is zero and remember the net shift
        std::size_t k = std::max(num.nvars(), den.nvars());
        ExpVec num_min = num.min_exponents(k), den_min = den.min_exponents(k);
        ExpVec neg_num(k), neg_den(k), net(k);
        for (std::size_t i = 0; i < k; ++i) {
            neg_num[i] = -num_min[i];
            neg_den[i] = -den_min[i];
            net[i] = num_min[i] - den_min[i];
        }
        LaurentPoly rem = num.shifted(neg_num);
        LaurentPoly d = den.shifted(neg_den);
        LaurentPoly quo;
        auto lead = std::prev(d.t_.end());
        Scalar lead_inv = lead->second.inverse();
        std::size_t guard = 1u << 20;
        while (!rem.is_zero()) {
            if (guard-- == 0) return std::nullopt;
            auto rl = std::prev(rem.t_.end());
            ExpVec e(k, 0);
            for (std::size_t i = 0; i < k; ++i) {
                e[i] = (i < rl->first.size() ? rl->first[i] : 0) -
                       (i < lead->first.size() ? lead->first[i] : 0);
                // lead(den) must divide lead(rem) componentwise, else the
                // quotient would need a unit denominator
                if (e[i] < 0) return std::nullopt;
            }
            trim_exp(e);
            Scalar c = rl->second * lead_inv;
            LaurentPoly t = monomial(c, e);
            quo += t;
            rem -= t * d;
            // the lex-leading term strictly decreases on exact division
            if (!rem.is_zero() && !ExpLess{}(std::prev(rem.t_.end())->first, rl->first))
                return std::nullopt;
        }
        return quo.shifted(net);
    }

    // For k == 1 inputs with nonnegative exponents: the corresponding UniPoly.
    UniPoly to_unipoly() const {
        if (nvars() > 1) throw std::logic_error("LaurentPoly: more than one variable");
        std::vector<Scalar> c;
        for (const auto& [e, s] : t_) {
            long d = e.empty() ? 0 : e[0];
            if (d < 0) throw std::logic_error("LaurentPoly: negative exponent");
            if (c.size() <= static_cast<std::size_t>(d)) c.resize(d + 1);
            c[d] = s;
        }
        return UniPoly(std::move(c));
    }

    std::string to_string(const std::vector<std::string>& vars = {"u", "v", "w"}) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            std::string cs = c.to_string();
            if (!first) {
                if (c.is_rational() && sign_of(c.rational_value()) < 0) {
                    os << "-";
                    cs = (-c).to_string();
                } else {
                    os << "+";
                }
            }
            first = false;
            bool composite = cs.find('+') != std::string::npos ||
                             (cs.find('-') != std::string::npos && cs.rfind('-') > 0);
            if (composite) cs = "(" + cs + ")";
            if (e.empty()) {
                os << cs;
                continue;
            }
            bool printed = cs != "1";
            if (printed) os << cs;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << (i < vars.size() ? vars[i] : "x" + std::to_string(i));
                if (e[i] != 1) os << "^" << e[i];
                printed = true;
            }
            if (!printed) os << "1";
        }
        return os.str();
    }

private:
    Terms t_;

    void add_term(ExpVec e, const Scalar& c) {
        if (c.is_zero()) return;
        trim_exp(e);
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
};

}  // namespace novikov

#endif
