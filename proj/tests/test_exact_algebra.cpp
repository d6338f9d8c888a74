#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "novikov/algebraic.hpp"

using namespace novikov;

namespace {

LaurentPoly u() { return LaurentPoly::variable(0); }

// classical Gaussian elimination over the exact field, used as the rank
// oracle for Bareiss
std::size_t gauss_rank(Matrix<Scalar> m) {
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        Scalar inv = m(row, col).inverse();
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            Scalar f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("cyclotomic scalar arithmetic") {
    Scalar z = Scalar::zeta(6);
    CHECK((z * z - z + Scalar(1)).is_zero());  // Phi_6(zeta_6) = 0
    CHECK(z.pow(6) == Scalar(1));
    CHECK(z.pow(3) == Scalar(-1));

    Scalar a = Scalar(1) + z;
    CHECK(a * a.inverse() == Scalar(1));

    // constants collapse to conductor 1
    CHECK((z + z.conjugate(5)).conductor() == 1);  // zeta + conj(zeta) = 1 for n=6
    CHECK(z + z.pow(5) == Scalar(1));

    Scalar r(Rat(3, 4));
    CHECK(r.to_string() == "3/4");
    CHECK(Scalar::parse("3/4", 1) == r);
    CHECK(Scalar::parse(z.to_string(), 6) == z);
    CHECK(Scalar::parse((a * a).to_string(), 6) == a * a);

    // cross-conductor promotion: zeta_4 * zeta_6 lives in conductor 12
    Scalar w = Scalar::zeta(4) * Scalar::zeta(6);
    CHECK(w.pow(12) == Scalar(1));
    CHECK(w.pow(6) != Scalar(1));
}

TEST_CASE("rank_fraction_free examples") {
    Matrix<LaurentPoly> m1(1, 1);
    m1(0, 0) = u() - LaurentPoly(1);
    auto r1 = rank_fraction_free(m1);
    CHECK(r1.rank == 1);
    CHECK(r1.pivot_minor == u() - LaurentPoly(1));

    Matrix<LaurentPoly> m2(2, 2);
    m2(0, 0) = u();
    m2(0, 1) = LaurentPoly(1);
    m2(1, 0) = u() * u();
    m2(1, 1) = u();
    CHECK(rank_fraction_free(m2).rank == 1);

    Matrix<LaurentPoly> empty(0, 0);
    auto re = rank_fraction_free(empty);
    CHECK(re.rank == 0);
    CHECK(re.pivot_minor == LaurentPoly(1));
}

TEST_CASE("generic rank vs evaluation oracle on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> cd(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<LaurentPoly> m(5, 7);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                LaurentPoly p;
                for (long d = 0; d <= 2; ++d)
                    p += LaurentPoly::monomial(Scalar(cd(rng)), ExpVec{d});
                m(i, j) = p;
            }
        auto rr = rank_fraction_free(m);
        std::size_t best = 0;
        for (long pt : {2L, 3L, 5L}) {
            Matrix<Scalar> s(5, 7);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 7; ++j)
                    s(i, j) = m(i, j).eval({Scalar(pt)});
            std::size_t rk = gauss_rank(s);
            CHECK(rk <= rr.rank);  // specialization can only drop rank
            best = std::max(best, rk);
        }
        CHECK(best == rr.rank);
    }
}

TEST_CASE("rank equality off the pivot minor roots") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> cd(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<LaurentPoly> m(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) = LaurentPoly(cd(rng)) + LaurentPoly::monomial(Scalar(cd(rng)), ExpVec{1});
        auto rr = rank_fraction_free(m);
        for (long pt : {2L, 3L, 7L, 11L}) {
            Scalar at_pt = rr.pivot_minor.eval({Scalar(pt)});
            Matrix<Scalar> s(3, 4);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 4; ++j) s(i, j) = m(i, j).eval({Scalar(pt)});
            if (!at_pt.is_zero()) CHECK(gauss_rank(s) == rr.rank);
        }
    }
}

TEST_CASE("Bareiss agrees with Gaussian elimination over Q") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> cd(-4, 4);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        Matrix<Scalar> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(cd(rng));
        CHECK(rank_fraction_free(m).rank == gauss_rank(m));
    }
}

TEST_CASE("sturm_isolate_positive_roots examples") {
    auto roots1 = sturm_isolate_positive_roots(UniPoly{-1, 1});  // u - 1
    REQUIRE(roots1.size() == 1);
    CHECK(roots1[0].contains(Rat(1)));

    CHECK(sturm_isolate_positive_roots(UniPoly{1, 0, 1}).empty());  // u^2 + 1

    auto roots2 = sturm_isolate_positive_roots(UniPoly{1, -3, 2});  // (2u-1)(u-1)
    REQUIRE(roots2.size() == 2);
    CHECK(roots2[0].contains(Rat(1, 2)));
    CHECK(roots2[1].contains(Rat(1)));
    CHECK(roots2[0].hi <= roots2[1].lo);  // disjoint

    CHECK_THROWS_AS(sturm_isolate_positive_roots(UniPoly()), std::domain_error);
}

TEST_CASE("interval refinement preserves the one-root certificate") {
    auto roots = sturm_isolate_positive_roots(UniPoly{-1, -3, 0, 2});  // 2u^3 - 3u - 1
    for (auto& r : roots) {
        auto seq = sturm_sequence(r.poly);
        for (int i = 0; i < 12; ++i) {
            r.refine();
            CHECK(sturm_count(seq, r.lo, r.hi) == 1);
        }
        CHECK(r.hi - r.lo < Rat(1, 1000));
    }
}

TEST_CASE("poly division") {
    UniPoly lam = UniPoly::variable();
    auto q = UniPoly::exact_div(lam + lam * lam, UniPoly{1, 1});
    REQUIRE(q.has_value());
    CHECK(*q == lam);

    CHECK(!UniPoly::exact_div(UniPoly{1, 0, 1}, UniPoly{1, 1}).has_value());

    // round trip on random q, den
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> cd(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Scalar> qc(1 + rng() % 4), dc(1 + rng() % 4);
        for (auto& c : qc) c = Scalar(cd(rng));
        for (auto& c : dc) c = Scalar(cd(rng));
        UniPoly qq(qc), dd(dc);
        if (dd.is_zero()) continue;
        auto back = UniPoly::exact_div(dd * qq, dd);
        REQUIRE(back.has_value());
        CHECK(*back == qq);
    }
}

TEST_CASE("laurent polynomial ring") {
    LaurentPoly inv_u = LaurentPoly::monomial(Scalar(1), ExpVec{-1});
    CHECK(u() * inv_u == LaurentPoly(1));

    LaurentPoly p = u() * u() - LaurentPoly(1);
    auto q = LaurentPoly::exact_div(p, u() - LaurentPoly(1));
    REQUIRE(q.has_value());
    CHECK(*q == u() + LaurentPoly(1));
    CHECK(!LaurentPoly::exact_div(u() + LaurentPoly(1), u() - LaurentPoly(1)).has_value());

    // two variables
    LaurentPoly v = LaurentPoly::variable(1);
    LaurentPoly prod = (u() + v) * (u() - v);
    CHECK(prod == u() * u() - v * v);
    CHECK(prod.eval({Scalar(3), Scalar(2)}) == Scalar(5));

    // (u^n - 1)/(u - 1) stays exact for larger n
    LaurentPoly big = LaurentPoly::monomial(Scalar(1), ExpVec{40}) - LaurentPoly(1);
    auto qb = LaurentPoly::exact_div(big, u() - LaurentPoly(1));
    REQUIRE(qb.has_value());
    CHECK(*qb * (u() - LaurentPoly(1)) == big);
}

TEST_CASE("algebraic point zero tests and rank") {
    // alpha = sqrt(2), defined by u^2 - 2 on (1, 2)
    AlgebraicPoint alpha(IsolatedRoot{UniPoly{-2, 0, 1}, Rat(1), Rat(2), 1});
    UniPoly x = UniPoly::variable();
    CHECK(alpha.vanishes(x * x - UniPoly{2}));
    CHECK(!alpha.vanishes(x - UniPoly{1}));
    // (u^2-2)(u-1): vanishes, and the defining polynomial shrinks to a factor
    AlgebraicPoint beta(IsolatedRoot{UniPoly{-2, 0, 1}, Rat(1), Rat(2), 1});
    CHECK(beta.vanishes((x * x - UniPoly{2}) * (x - UniPoly{1})));

    // rank of [[u, 2], [1, u]] at u = sqrt(2): determinant vanishes, rank 1
    Matrix<LaurentPoly> m(2, 2);
    m(0, 0) = LaurentPoly::variable(0);
    m(0, 1) = LaurentPoly(2);
    m(1, 0) = LaurentPoly(1);
    m(1, 1) = LaurentPoly::variable(0);
    AlgebraicPoint g(IsolatedRoot{UniPoly{-2, 0, 1}, Rat(1), Rat(2), 1});
    CHECK(rank_at_algebraic(m, g) == 1);
    AlgebraicPoint h(IsolatedRoot{UniPoly{-3, 0, 1}, Rat(1), Rat(2), 1});  // sqrt(3)
    CHECK(rank_at_algebraic(m, h) == 2);
}
