#ifndef NOVIKOV_SCALAR_HPP
#define NOVIKOV_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace novikov {

using Rat = mpq_class;
using Int = mpz_class;

inline int sign_of(const Rat& q) { return sgn(q); }

// ---------------------------------------------------------------------------
// Dense rational polynomial helpers (coefficient vectors, low degree first).
// Used internally for cyclotomic moduli; the public polynomial type over
// Scalar lives in unipoly.hpp.
// ---------------------------------------------------------------------------
namespace ratpoly {

using Vec = std::vector<Rat>;

inline void trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Vec mul(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Vec sub(Vec a, const Vec& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Division with remainder; den must be nonzero.
inline void divmod(Vec num, const Vec& den, Vec& q, Vec& r) {
    if (den.empty()) throw std::invalid_argument("ratpoly: division by zero");
    trim(num);
    q.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    const Rat& lead = den.back();
    while (num.size() >= den.size()) {
        Rat c = num.back() / lead;
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        num.pop_back();
        trim(num);
    }
    trim(q);
    r = num;
}

inline Vec exact_div(const Vec& num, const Vec& den) {
    Vec q, r;
    divmod(num, den, q, r);
    if (!r.empty()) throw std::logic_error("ratpoly: division not exact");
    return q;
}

inline Vec mod(const Vec& num, const Vec& den) {
    Vec q, r;
    divmod(num, den, q, r);
    return r;
}

// Monic gcd via Euclid.
inline Vec gcd(Vec a, Vec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Extended Euclid: returns (g, s) with s*a == g (mod m), g monic gcd(a, m).
inline std::pair<Vec, Vec> half_ext_gcd(Vec a, Vec m) {
    Vec r0 = std::move(a), r1 = std::move(m);
    Vec s0 = {Rat(1)}, s1 = {};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        Vec q, r;
        divmod(r0, r1, q, r);
        Vec s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (!r0.empty()) {
        Rat lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : s0) c /= lead;
    }
    return {r0, s0};
}

}  // namespace ratpoly

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// n-th cyclotomic polynomial over Q, cached. x^n - 1 = prod_{d|n} Phi_d.
inline const ratpoly::Vec& cyclotomic_polynomial(unsigned long n) {
    static std::map<unsigned long, ratpoly::Vec> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::function<ratpoly::Vec(unsigned long)> phi_poly = [&](unsigned long k) -> ratpoly::Vec {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        ratpoly::Vec xk_minus_1(k + 1, Rat(0));
        xk_minus_1[0] = -1;
        xk_minus_1[k] = 1;
        ratpoly::Vec acc = xk_minus_1;
        for (unsigned long d = 1; d < k; ++d)
            if (k % d == 0) acc = ratpoly::exact_div(acc, phi_poly(d));
        cache[k] = acc;
        return acc;
    };
    phi_poly(n);
    return cache[n];
}

// ---------------------------------------------------------------------------
// Scalar: an element of Q (conductor 1) or of the cyclotomic field Q(zeta_n),
// stored as a rational polynomial of degree < phi(n) in zeta_n, reduced
// modulo the n-th cyclotomic polynomial. Constants collapse to conductor 1,
// so rational values compare equal across fields.
// ---------------------------------------------------------------------------
class Scalar {
public:
    Scalar() : n_(1) {}
    Scalar(long v) : n_(1) {
        if (v != 0) c_ = {Rat(v)};
    }
    Scalar(const Rat& v) : n_(1) {
        Rat c = v;
        c.canonicalize();  // callers may pass mpq values built from raw p/q
        if (c != 0) c_ = {std::move(c)};
    }
    Scalar(unsigned long conductor, ratpoly::Vec coeffs) : n_(conductor), c_(std::move(coeffs)) {
        reduce();
    }

    static Scalar zeta(unsigned long n) {
        if (n <= 1) return Scalar(1);
        if (n == 2) return Scalar(-1);
        ratpoly::Vec v(2, Rat(0));
        v[1] = 1;
        return Scalar(n, std::move(v));
    }

    unsigned long conductor() const { return n_; }
    const ratpoly::Vec& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return n_ == 1 && c_.size() == 1 && c_[0] == 1; }
    bool is_rational() const { return n_ == 1; }

    Rat rational_value() const {
        if (n_ != 1) throw std::logic_error("Scalar: not rational");
        return c_.empty() ? Rat(0) : c_[0];
    }

    // Embed into Q(zeta_N); requires conductor | N.
    Scalar promoted(unsigned long N) const {
        if (n_ == N) return *this;
        if (N % n_ != 0) throw std::invalid_argument("Scalar: incompatible conductors");
        unsigned long step = N / n_;
        ratpoly::Vec big;
        if (!c_.empty()) {
            big.assign((c_.size() - 1) * step + 1, Rat(0));
            for (std::size_t i = 0; i < c_.size(); ++i) big[i * step] = c_[i];
        }
        return Scalar(N, std::move(big));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        auto [x, y, n] = align(a, b);
        ratpoly::Vec r = x;
        if (r.size() < y.size()) r.resize(y.size(), Rat(0));
        for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
        return Scalar(n, std::move(r));
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        auto [x, y, n] = align(a, b);
        return Scalar(n, ratpoly::sub(x, y));
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        auto [x, y, n] = align(a, b);
        return Scalar(n, ratpoly::mul(x, y));
    }
    Scalar operator-() const {
        ratpoly::Vec r = c_;
        for (auto& v : r) v = -v;
        return Scalar(n_, std::move(r));
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        if (n_ == 1) return Scalar(Rat(1) / c_[0]);
        auto [g, s] = ratpoly::half_ext_gcd(c_, cyclotomic_polynomial(n_));
        if (g.size() != 1) throw std::logic_error("Scalar: cyclotomic modulus not coprime");
        for (auto& v : s) v /= g[0];
        return Scalar(n_, std::move(s));
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Galois conjugate zeta -> zeta^a, gcd(a, n) = 1.
    Scalar conjugate(unsigned long a) const {
        if (n_ == 1) return *this;
        ratpoly::Vec r;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            std::size_t e = (i * a) % n_;
            if (r.size() <= e) r.resize(e + 1, Rat(0));
            r[e] += c_[i];
        }
        return Scalar(n_, std::move(r));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        if (n_ == 1) return c_[0].get_str();
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat v = c_[i];
            if (!first) {
                os << (sgn(v) < 0 ? "-" : "+");
                if (sgn(v) < 0) v = -v;
            }
            first = false;
            if (i == 0) {
                os << v.get_str();
            } else {
                if (v != 1) os << v.get_str() << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    static Scalar parse(const std::string& s, unsigned long conductor);

private:
    unsigned long n_;
    ratpoly::Vec c_;

    void reduce() {
        if (n_ >= 2) {
            const auto& phi = cyclotomic_polynomial(n_);
            if (c_.size() >= phi.size()) c_ = ratpoly::mod(c_, phi);
        }
        ratpoly::trim(c_);
        if (c_.size() <= 1) n_ = 1;  // constants are rational
    }

    static std::tuple<ratpoly::Vec, ratpoly::Vec, unsigned long> align(const Scalar& a,
                                                                       const Scalar& b) {
        unsigned long n = std::lcm(a.n_, b.n_);
        return {a.promoted(n).c_, b.promoted(n).c_, n};
    }
};

// Parses "p/q", "-3", "1-2*z^3+z", "z^4" etc. The conductor comes from the
// surrounding field declaration.
inline Scalar Scalar::parse(const std::string& s, unsigned long conductor) {
    ratpoly::Vec acc;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("Scalar: empty string");
    bool any = false;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        if (i == s.size()) throw std::invalid_argument("Scalar: dangling sign in '" + s + "'");
        Rat coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
            coef = Rat(s.substr(i, j - i));
            coef.canonicalize();
            i = j;
            have_coef = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        std::size_t exp = 0;
        if (i < s.size() && s[i] == 'z') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw std::invalid_argument("Scalar: bad exponent in '" + s + "'");
                exp = std::stoul(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_coef) {
            throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
        }
        if (exp > 0 && conductor <= 1)
            throw std::invalid_argument("Scalar: 'z' used but field is Q in '" + s + "'");
        if (acc.size() <= exp) acc.resize(exp + 1, Rat(0));
        acc[exp] += sign * coef;
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
    return Scalar(conductor <= 1 ? 1 : conductor, std::move(acc));
}

// "Q" or "Q(zeta_n)"
inline std::string field_name(unsigned long conductor) {
    if (conductor <= 1) return "Q";
    return "Q(zeta_" + std::to_string(conductor) + ")";
}

inline unsigned long parse_field_name(const std::string& s) {
    if (s == "Q") return 1;
    const std::string pre = "Q(zeta_";
    if (s.rfind(pre, 0) == 0 && s.back() == ')') {
        unsigned long n = std::stoul(s.substr(pre.size(), s.size() - pre.size() - 1));
        if (n >= 1) return n;
    }
    throw std::invalid_argument("unknown field '" + s + "'");
}

}  // namespace novikov

#endif
