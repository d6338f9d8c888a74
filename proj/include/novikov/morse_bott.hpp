#ifndef NOVIKOV_MORSE_BOTT_HPP
#define NOVIKOV_MORSE_BOTT_HPP

#include "novikov/novikov_complex.hpp"

namespace novikov {

// ---------------------------------------------------------------------------
// CriticalComponent: one connected component Z of the zero set. Twisted Betti
// data is either explicit or computed from a supplied complex+bundle pair
// with the orientation character folded into the monodromies as a -1 factor.
// ---------------------------------------------------------------------------
struct CriticalComponent {
    std::string name;
    std::size_t index = 0;      // ind(Z)
    bool orientation_twist = false;

    std::optional<BettiVector> explicit_betti;
    std::optional<CellComplex> complex;
    std::optional<FlatBundle> bundle;         // defaults to trivial rank 1
    std::optional<long> explicit_euler;       // chi(Z), when supplied directly
};

// lambda-polynomials carry rational coefficients; integrality is a verdict
// concern, not a representation one.
using LambdaPoly = UniPoly;

struct InequalityCertificate {
    LambdaPoly Q;
    enum class Verdict { Holds, NotDivisible, NegativeCoefficient, NonIntegerCoefficient } verdict;
    long offending_degree = -1;

    bool holds() const { return verdict == Verdict::Holds; }

    std::string verdict_string() const {
        switch (verdict) {
            case Verdict::Holds: return "Holds";
            case Verdict::NotDivisible: return "Fails(NotDivisible)";
            case Verdict::NegativeCoefficient:
                return "Fails(NegativeCoefficient(" + std::to_string(offending_degree) + "))";
            case Verdict::NonIntegerCoefficient:
                return "Fails(NonIntegerCoefficient(" + std::to_string(offending_degree) + "))";
        }
        return "?";
    }
};

// P_{Z,F}(lambda): twisted Poincare polynomial of one component.
inline LambdaPoly twisted_poincare(const CriticalComponent& z) {
    BettiVector b;
    if (z.explicit_betti) {
        b = *z.explicit_betti;
        for (long v : b)
            if (v < 0)
                throw std::invalid_argument("twisted_poincare: negative Betti number on " + z.name);
    } else if (z.complex) {
        FlatBundle F = z.bundle ? *z.bundle : FlatBundle::trivial(z.complex->count(1));
        if (z.orientation_twist)
            for (auto& m : F.rho)
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
        Cocycle zero = Cocycle::zero(z.complex->count(1));
        NovikovComplex nc = build_novikov_complex(*z.complex, zero, F);
        b = betti(specialize(nc, Scalar(1)));
    } else {
        throw std::invalid_argument("twisted_poincare: component " + z.name + " carries no Betti data");
    }
    std::vector<Scalar> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = Scalar(b[i]);
    return LambdaPoly(std::move(c));
}

// M_{omega,F}(lambda) = sum_Z lambda^{ind(Z)} P_{Z,F}(lambda).
inline LambdaPoly morse_polynomial(const std::vector<CriticalComponent>& components) {
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j)
            if (components[i].name == components[j].name)
                throw std::invalid_argument("morse_polynomial: duplicate component name '" +
                                            components[i].name + "'");
    LambdaPoly m;
    for (const auto& z : components)
        m = m + UniPoly::monomial(Scalar(1), z.index) * twisted_poincare(z);
    return m;
}

// N_{xi,F}(lambda) = sum lambda^i beta_i.
inline LambdaPoly novikov_polynomial(const BettiVector& b) {
    std::vector<Scalar> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = Scalar(b[i]);
    return LambdaPoly(std::move(c));
}

inline LambdaPoly novikov_polynomial_rational(const std::vector<Rat>& b) {
    std::vector<Scalar> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = Scalar(b[i]);
    return LambdaPoly(std::move(c));
}

enum class CoefficientMode { Integer, Rational };

// Theorem-checker: M - N = (1 + lambda) Q with nonnegative (and, in integer
// mode, integral) coefficients. Failure is a verdict, never an exception.
inline InequalityCertificate verify_novikov_bott(const LambdaPoly& M, const LambdaPoly& N,
                                                 CoefficientMode mode = CoefficientMode::Integer) {
    InequalityCertificate cert;
    LambdaPoly one_plus_lambda({1, 1});
    auto q = UniPoly::exact_div(M - N, one_plus_lambda);
    if (!q) {
        cert.verdict = InequalityCertificate::Verdict::NotDivisible;
        return cert;
    }
    cert.Q = *q;
    for (long i = 0; i <= cert.Q.degree(); ++i) {
        Rat c = cert.Q.coeff(i).rational_value();
        if (c < 0) {
            cert.verdict = InequalityCertificate::Verdict::NegativeCoefficient;
            cert.offending_degree = i;
            return cert;
        }
        if (mode == CoefficientMode::Integer && c.get_den() != 1) {
            cert.verdict = InequalityCertificate::Verdict::NonIntegerCoefficient;
            cert.offending_degree = i;
            return cert;
        }
    }
    cert.verdict = InequalityCertificate::Verdict::Holds;
    return cert;
}

// The alternating-sum inequalities for isolated zeros:
//   sum_{i<=p} (-1)^i m_{p-i}  >=  (1/d) sum_{i<=p} (-1)^i beta_{p-i}.
inline std::vector<bool> strong_inequalities(const std::vector<long>& m, const BettiVector& beta,
                                             std::size_t d) {
    if (d == 0) throw std::invalid_argument("strong_inequalities: d must be positive");
    std::size_t n = std::max(m.size(), beta.size());
    std::vector<bool> out(n, false);
    for (std::size_t p = 0; p < n; ++p) {
        Rat lhs(0), rhs(0);
        for (std::size_t i = 0; i <= p; ++i) {
            int s = (i % 2 == 0) ? 1 : -1;
            std::size_t idx = p - i;
            if (idx < m.size()) lhs += s * m[idx];
            if (idx < beta.size()) rhs += s * beta[idx];
        }
        rhs /= static_cast<long>(d);
        out[p] = lhs >= rhs;
    }
    return out;
}

// Morse index counts from isolated components; rejects positive-dimensional
// data.
inline std::vector<long> index_counts(const std::vector<CriticalComponent>& components,
                                      std::size_t n) {
    std::vector<long> m(n + 1, 0);
    for (const auto& z : components) {
        LambdaPoly p = twisted_poincare(z);
        if (p.degree() > 0)
            throw ComplexError(ComplexErrorKind::NonIsolated, z.name,
                               "component has positive-dimensional Betti data");
        if (z.index >= m.size()) m.resize(z.index + 1, 0);
        m[z.index] += 1;
    }
    return m;
}

inline long euler_of_component(const CriticalComponent& z, std::size_t bundle_dim) {
    if (z.explicit_euler) return *z.explicit_euler;
    if (z.complex) {
        long chi = 0;
        for (std::size_t i = 0; i < z.complex->cells.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(z.complex->cells[i]);
        return chi;
    }
    if (z.explicit_betti) {
        long alt = 0;
        for (std::size_t i = 0; i < z.explicit_betti->size(); ++i)
            alt += (i % 2 == 0 ? 1 : -1) * (*z.explicit_betti)[i];
        // chi(Z, F tensor o) = d * chi(Z)
        if (bundle_dim == 0 || alt % static_cast<long>(bundle_dim) != 0)
            throw std::invalid_argument("euler_of_component: cannot recover chi(Z) for " + z.name);
        return alt / static_cast<long>(bundle_dim);
    }
    throw std::invalid_argument("euler_of_component: no chi data for " + z.name);
}

// Corollary check: chi(M) = sum_Z (-1)^{ind(Z)} chi(Z).
inline bool euler_corollary(const std::vector<CriticalComponent>& components, long chi_M,
                            std::size_t bundle_dim = 1) {
    long acc = 0;
    for (const auto& z : components)
        acc += (z.index % 2 == 0 ? 1 : -1) * euler_of_component(z, bundle_dim);
    return acc == chi_M;
}

}  // namespace novikov

#endif
