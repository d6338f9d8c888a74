#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "novikov/corpus.hpp"

using namespace novikov;

namespace {

LaurentPoly u() { return LaurentPoly::variable(0); }

long alternating_sum(const BettiVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * b[i];
    return s;
}

}  // namespace

TEST_CASE("circle and torus differentials") {
    Instance c = make_circle(1);
    NovikovComplex nc = build_novikov_complex(c.cx, c.z, c.F);
    REQUIRE(nc.diff.size() == 1);
    CHECK(nc.diff[0](0, 0) == u() - LaurentPoly(1));

    Instance t = make_torus({1, 0});
    NovikovComplex tn = build_novikov_complex(t.cx, t.z, t.F);
    CHECK(tn.diff[0](0, 0) == u() - LaurentPoly(1));
    CHECK(tn.diff[0](1, 0) == LaurentPoly(0));
    CHECK(tn.diff[1](0, 0) == LaurentPoly(0));
    CHECK(tn.diff[1](0, 1) == u() - LaurentPoly(1));
}

TEST_CASE("cocycle violation is rejected and names the face") {
    Instance t = make_torus({1, 0});
    Cocycle bad = t.z;
    bad.weight[1] = {1};  // commutator weight still 0; instead break via attaching word removal
    // direct violation: nonzero weight sum on the face
    Instance p = presentation_complex(GroupPresentation{{"a"}, {Word{{0, 1}, {0, 1}}}},
                                      RepresentationSpec::trivial(1));
    Cocycle w{1, {{1}}};  // relator a.a has weight 2 != 0
    CHECK_THROWS_WITH_AS(build_novikov_complex(p.cx, w, p.F),
                         doctest::Contains("CocycleViolation"), ComplexError);
    try {
        build_novikov_complex(p.cx, w, p.F);
    } catch (const ComplexError& e) {
        CHECK(e.kind == ComplexErrorKind::CocycleViolation);
        CHECK(std::string(e.what()).find("cell[2][0]") != std::string::npos);
    }
}

TEST_CASE("flatness violation is rejected") {
    // torus with non-commuting monodromies
    Matrix<Scalar> a(2, 2), b(2, 2);
    a(0, 0) = Scalar(1); a(0, 1) = Scalar(1); a(1, 1) = Scalar(1);
    b(0, 0) = Scalar(1); b(1, 0) = Scalar(1); b(1, 1) = Scalar(1);
    CHECK_THROWS_AS((void)build_novikov_complex(make_torus({1, 0}, {a, b}).cx, Cocycle{1, {{1}, {0}}},
                                                FlatBundle{2, {a, b}}),
                    ComplexError);
    try {
        Instance t = make_torus({1, 0}, {a, b});
        build_novikov_complex(t.cx, t.z, t.F);
        FAIL("expected FlatnessViolation");
    } catch (const ComplexError& e) {
        CHECK(e.kind == ComplexErrorKind::FlatnessViolation);
    }
}

TEST_CASE("specialization examples") {
    Instance c = make_circle(1);
    NovikovComplex nc = build_novikov_complex(c.cx, c.z, c.F);
    CHECK(specialize(nc, Scalar(1)).diff[0](0, 0).is_zero());
    CHECK(specialize(nc, Scalar(2)).diff[0](0, 0) == Scalar(1));
    CHECK_THROWS_AS((void)specialize(nc, Scalar(0)), ComplexError);

    Instance t = make_torus({1, 0});
    NovikovComplex tn = build_novikov_complex(t.cx, t.z, t.F);
    TwistedComplex tc = specialize(tn, Scalar(3));
    CHECK(tc.diff[0](0, 0) == Scalar(2));
    CHECK(tc.diff[1](0, 1) == Scalar(2));
}

TEST_CASE("betti and generic betti examples") {
    Instance c = make_circle(1);
    NovikovComplex nc = build_novikov_complex(c.cx, c.z, c.F);
    CHECK(betti(specialize(nc, Scalar(1))) == BettiVector{1, 1});
    CHECK(betti(specialize(nc, Scalar(2))) == BettiVector{0, 0});
    CHECK(generic_betti(nc) == BettiVector{0, 0});

    Instance t = make_torus({1, 0});
    NovikovComplex tn = build_novikov_complex(t.cx, t.z, t.F);
    CHECK(betti(specialize(tn, Scalar(1))) == BettiVector{1, 2, 1});
    CHECK(generic_betti(tn) == BettiVector{0, 0, 0});

    // z == 0: generic equals betti at u = 1
    Instance t0 = make_torus({0, 0});
    NovikovComplex tn0 = build_novikov_complex(t0.cx, t0.z, t0.F);
    CHECK(generic_betti(tn0) == betti(specialize(tn0, Scalar(1))));
    CHECK(generic_betti(tn0) == BettiVector{1, 2, 1});
}

TEST_CASE("jump point examples") {
    Instance c = make_circle(1);
    NovikovComplex nc = build_novikov_complex(c.cx, c.z, c.F);
    JumpSet js = jump_points(nc);
    REQUIRE(js.points.size() == 1);
    CHECK(js.points[0].root.rational_value() == Rat(1));
    CHECK(*js.points[0].betti == BettiVector{1, 1});

    Instance c2 = make_circle(1, Scalar(2));
    JumpSet js2 = jump_points(build_novikov_complex(c2.cx, c2.z, c2.F));
    REQUIRE(js2.points.size() == 1);
    CHECK(js2.points[0].root.rational_value() == Rat(1, 2));

    Instance t = make_torus({1, 0});
    JumpSet jt = jump_points(build_novikov_complex(t.cx, t.z, t.F));
    REQUIRE(jt.points.size() == 1);
    CHECK(jt.points[0].root.rational_value() == Rat(1));
    CHECK(*jt.points[0].betti == BettiVector{1, 2, 1});
}

TEST_CASE("euler characteristic examples") {
    Instance c = make_circle(0);
    CHECK(euler_characteristic(build_novikov_complex(c.cx, c.z, c.F)) == 0);
    Instance t = make_torus({0, 0});
    CHECK(euler_characteristic(build_novikov_complex(t.cx, t.z, t.F)) == 0);
    // sphere: 1 vertex, 1 two-cell with trivially attached boundary
    CellComplex sphere;
    sphere.cells = {1, 0, 1};
    sphere.boundaries = {{}, {{}}};
    CHECK(euler_characteristic(build_novikov_complex(sphere, Cocycle::zero(0),
                                                     FlatBundle::trivial(0))) == 2);
}

TEST_CASE("multivariable jump points unsupported") {
    Instance t = make_torus({0, 0});
    Cocycle z2{2, {{1, 0}, {0, 1}}};
    NovikovComplex nc = build_novikov_complex(t.cx, z2, t.F);
    CHECK(generic_betti(nc) == BettiVector{0, 0, 0});
    CHECK_THROWS_AS((void)jump_points(nc), ComplexError);
}

TEST_CASE("semicontinuity and euler invariance on random instances") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> pts(1, 12);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Instance inst = random_instance(rng);
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        BettiVector g = generic_betti(nc);
        long chi = euler_characteristic(nc);
        CHECK(alternating_sum(g) == chi);
        for (int s = 0; s < 5; ++s) {
            std::vector<Scalar> at(nc.k, Scalar(Rat(pts(rng), pts(rng))));
            BettiVector b = betti(specialize(nc, at));
            REQUIRE(b.size() == g.size());
            for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] >= g[i]);
            CHECK(alternating_sum(b) == chi);
            ++checked;
        }
    }
    CHECK(checked == 500);
}

TEST_CASE("jump soundness and completeness by sampling") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Instance inst = random_instance(rng);
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        if (nc.k != 1) continue;
        BettiVector g = generic_betti(nc);
        JumpSet js = jump_points(nc);
        for (const auto& p : js.points) {
            REQUIRE(p.betti.has_value());
            bool strict = false;
            for (std::size_t i = 0; i < p.betti->size(); ++i)
                strict = strict || (*p.betti)[i] > g[i];
            CHECK(strict);
        }
        // off the defining polynomial's root set, Betti equals generic
        int sampled = 0;
        for (long num = 1; num <= 40 && sampled < 20; ++num) {
            Rat q(num, 7);
            q.canonicalize();
            if (js.defining.eval_rational(q) == 0) continue;
            CHECK(betti(specialize(nc, Scalar(q))) == g);
            ++sampled;
        }
        CHECK(sampled == 20);
    }
}

TEST_CASE("gauge invariance under a fiber basis change") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Instance inst = random_instance(rng);
        if (inst.F.dim < 2) continue;
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        // unipotent upper-triangular change of basis g, rho' = g^-1 rho g
        std::size_t d = inst.F.dim;
        Matrix<Scalar> g = FlatBundle::identity(d), ginv = FlatBundle::identity(d);
        g(0, d - 1) += Scalar(3);
        ginv(0, d - 1) -= Scalar(3);
        Instance conj = inst;
        for (auto& m : conj.F.rho) m = ginv * (m * g);
        NovikovComplex nc2 = build_novikov_complex(conj.cx, conj.z, conj.F);
        CHECK(generic_betti(nc) == generic_betti(nc2));
        if (nc.k == 1) {
            JumpSet a = jump_points(nc), b = jump_points(nc2);
            REQUIRE(a.points.size() == b.points.size());
            for (std::size_t i = 0; i < a.points.size(); ++i) {
                CHECK(a.points[i].betti == b.points[i].betti);
                CHECK(a.points[i].root.poly == b.points[i].root.poly);
            }
        }
        BettiVector s1 = betti(specialize(nc, std::vector<Scalar>(nc.k, Scalar(2))));
        BettiVector s2 = betti(specialize(nc2, std::vector<Scalar>(nc.k, Scalar(2))));
        CHECK(s1 == s2);
    }
}

TEST_CASE("degenerate inputs are accepted with forced answers") {
    CellComplex empty;
    NovikovComplex nc = build_novikov_complex(empty, Cocycle::zero(0), FlatBundle::trivial(0));
    CHECK(generic_betti(nc).size() == 1);
    CHECK(euler_characteristic(nc) == 0);

    // single vertex, no 1-cells
    CellComplex pt;
    pt.cells = {1};
    BettiVector b = generic_betti(build_novikov_complex(pt, Cocycle::zero(0), FlatBundle::trivial(0)));
    CHECK(b == BettiVector{1});
}
