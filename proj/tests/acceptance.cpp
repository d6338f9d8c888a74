// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] (optional): path to the CLI binary, used by the determinism check.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

#include "novikov/json_io.hpp"

using namespace novikov;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::size_t total_cells(const CellComplex& cx) {
    std::size_t n = 0;
    for (std::size_t c : cx.cells) n += c;
    return n;
}

// --- 1: randomized validation -------------------------------------------
void criterion_1() {
    std::mt19937 rng(101);
    int valid = 0, rejected = 0, wrong = 0;
    while (valid < 100) {
        Instance inst = random_instance(rng);
        if (total_cells(inst.cx) > 20 || inst.F.dim > 3) continue;
        try {
            build_novikov_complex(inst.cx, inst.z, inst.F);  // includes symbolic dd = 0
            ++valid;
        } catch (const ComplexError&) {
            ++wrong;
            continue;
        }
        for (Corruption kind :
             {Corruption::Cocycle, Corruption::Flatness, Corruption::IllFormed}) {
            auto bad = corrupt_instance(inst, kind, rng);
            if (!bad) continue;
            try {
                build_novikov_complex(bad->cx, bad->z, bad->F);
                ++wrong;
            } catch (const ComplexError& e) {
                bool match = (kind == Corruption::Cocycle &&
                              e.kind == ComplexErrorKind::CocycleViolation) ||
                             (kind == Corruption::Flatness &&
                              e.kind == ComplexErrorKind::FlatnessViolation) ||
                             (kind == Corruption::IllFormed &&
                              e.kind == ComplexErrorKind::IllFormed);
                if (match)
                    ++rejected;
                else
                    ++wrong;
            }
        }
    }
    report(1, "validation of 100 randomized instances and their corruptions",
           valid == 100 && rejected > 100 && wrong == 0,
           "valid=" + std::to_string(valid) + " rejected=" + std::to_string(rejected) +
               " wrong=" + std::to_string(wrong));
}

std::vector<Instance> k1_corpus() {
    std::vector<Instance> out;
    out.push_back(make_circle(1));
    out.push_back(make_circle(2));
    out.push_back(make_circle(1, Scalar(2)));
    out.push_back(make_torus({1, 0}));
    out.push_back(make_torus({0, 0}));
    out.push_back(make_surface(2, {1, 0, 0, 0}));
    out.push_back(make_mapping_torus({{1}}));
    out.push_back(make_mapping_torus({{2, 1}, {1, 1}}));
    out.push_back(make_mapping_torus_permutation({1, 0, 2}));
    return out;
}

// --- 2: semicontinuity and jump correctness -----------------------------
void criterion_2() {
    bool ok = true;
    std::string detail;
    for (const Instance& inst : k1_corpus()) {
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        if (nc.k != 1) continue;
        BettiVector g = generic_betti(nc);
        JumpSet js = jump_points(nc);
        for (const auto& p : js.points) {
            if (!p.betti || !betti_dominates_strictly(*p.betti, g)) {
                ok = false;
                detail = "jump root without strict excess";
            }
        }
        int sampled = 0;
        for (long num = 1; num <= 200 && sampled < 20; ++num) {
            Rat q(num, 9);
            q.canonicalize();
            if (js.defining.eval_rational(q) == 0) continue;
            if (betti(specialize(nc, Scalar(q))) != g) {
                ok = false;
                detail = "betti off the jump set differs from generic at " + q.get_str();
            }
            ++sampled;
        }
        if (sampled != 20) {
            ok = false;
            detail = "insufficient non-jump samples";
        }
    }
    report(2, "semicontinuity and jump correctness on the k=1 corpus", ok, detail);
}

std::vector<CriticalComponent> bott_sphere_components() {
    CriticalComponent eq, n, s;
    eq.name = "equator";
    eq.index = 0;
    eq.explicit_betti = BettiVector{1, 1};
    eq.explicit_euler = 0;
    n.name = "north";
    n.index = 2;
    n.explicit_betti = BettiVector{1};
    n.explicit_euler = 1;
    s.name = "south";
    s.index = 2;
    s.explicit_betti = BettiVector{1};
    s.explicit_euler = 1;
    return {eq, n, s};
}

// --- 3: the divisibility theorem checker --------------------------------
void criterion_3() {
    bool ok = true;
    std::string detail;

    LambdaPoly M_bott = morse_polynomial(bott_sphere_components());
    LambdaPoly N_sphere({1, 0, 1});
    auto cert = verify_novikov_bott(M_bott, N_sphere);
    if (!cert.holds() || !(cert.Q == UniPoly{0, 1})) {
        ok = false;
        detail = "Bott sphere: " + cert.verdict_string() + " Q=" + cert.Q.to_string();
    }

    for (Instance inst : {make_circle(1), make_torus({1, 0})}) {
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        auto c = verify_novikov_bott(LambdaPoly(), novikov_polynomial(generic_betti(nc)));
        if (!c.holds() || !c.Q.is_zero()) {
            ok = false;
            detail = "nonvanishing-form fixture: " + c.verdict_string();
        }
    }

    auto bad = verify_novikov_bott(UniPoly{1}, UniPoly{1, 1});
    if (bad.holds() || bad.verdict_string() != "Fails(NotDivisible)") {
        ok = false;
        detail = "non-geometric fixture verdict " + bad.verdict_string();
    }

    // M(-1) = N(-1) on every Holds verdict encountered above
    if (cert.holds() && !(M_bott.eval(Scalar(-1)) == N_sphere.eval(Scalar(-1)))) {
        ok = false;
        detail = "M(-1) != N(-1)";
    }
    report(3, "divisibility certificates on the fixed fixtures", ok, detail);
}

// --- 4: strong inequalities follow from the certificate -----------------
void criterion_4() {
    bool ok = true;
    std::string detail;
    struct Fix {
        std::vector<long> m;
        BettiVector beta;
    };
    std::vector<Fix> fixtures = {
        {{1, 2, 1}, {1, 2, 1}}, {{1, 0, 1}, {1, 0, 1}}, {{1, 2, 1}, {0, 0, 0}},
        {{2, 4, 2}, {1, 2, 1}}, {{1, 1}, {0, 0}},
    };
    for (std::size_t d : {1u, 2u}) {
        for (const auto& f : fixtures) {
            std::vector<Scalar> mc(f.m.size());
            for (std::size_t i = 0; i < f.m.size(); ++i)
                mc[i] = Scalar(static_cast<long>(d) * f.m[i]);
            LambdaPoly dM{mc};
            auto cert = verify_novikov_bott(dM, novikov_polynomial(f.beta));
            if (!cert.holds()) continue;
            for (bool b : strong_inequalities(f.m, f.beta, d))
                if (!b) {
                    ok = false;
                    detail = "certificate holds but a strong inequality fails";
                }
        }
    }
    report(4, "alternating-sum inequalities implied by Holds (d = 1, 2)", ok, detail);
}

// --- 5: Euler corollary -------------------------------------------------
void criterion_5() {
    bool ok = euler_corollary(bott_sphere_components(), 2) && euler_corollary({}, 0);
    CriticalComponent p;
    p.name = "p";
    p.index = 0;
    p.explicit_betti = BettiVector{1};
    p.explicit_euler = 1;
    ok = ok && !euler_corollary({p}, 2);
    report(5, "Euler characteristic corollary on the three fixtures", ok);
}

// --- 6: connected-sum reproduction --------------------------------------
void criterion_6() {
    bool ok = true;
    std::string detail;
    auto r1 = connected_sum_h1(trefoil_presentation(), scalar_rep(2, Scalar::zeta(6)));
    if (r1.beta1 != 1 || !r1.certificate_ok) {
        ok = false;
        detail = "trefoil zeta_6 gave " + std::to_string(r1.beta1);
    }
    auto r0 = connected_sum_h1(trefoil_presentation(), scalar_rep(2, Scalar(2)));
    if (r0.beta1 != 0 || !r0.certificate_ok) {
        ok = false;
        detail = "eta=2 gave " + std::to_string(r0.beta1);
    }
    for (long c = 1; c <= 3; ++c) {
        std::vector<std::pair<GroupPresentation, RepresentationSpec>> fs;
        for (long i = 0; i < c; ++i)
            fs.push_back({trefoil_presentation(), scalar_rep(2, Scalar::zeta(6))});
        auto [P, R] = free_product(fs);
        auto rc = connected_sum_h1(P, R);
        if (rc.beta1 != c || !rc.certificate_ok) {
            ok = false;
            detail = "c=" + std::to_string(c) + " gave " + std::to_string(rc.beta1);
        }
    }
    report(6, "first Novikov number of the knot connected sums (1, c, 0)", ok, detail);
}

// --- 7: finite-quotient approximation -----------------------------------
void criterion_7() {
    bool ok = true;
    std::string detail;
    struct Fix {
        Instance inst;
        std::vector<ExpVec> psi;
    };
    std::vector<Fix> fixtures;
    fixtures.push_back({make_circle(0), {{1}}});
    fixtures.push_back({make_torus({0, 0}), {{1}, {0}}});
    for (const auto& f : fixtures) {
        for (long m : {2L, 4L, 8L, 12L}) {
            QuotientTower tw = QuotientTower::cyclic(f.psi, {m});
            auto seq = normalized_betti_sequence(f.inst.cx, f.inst.z, f.inst.F, tw);
            BettiVector oracle =
                character_decomposition_oracle(f.inst.cx, f.inst.z, f.inst.F, f.psi, m);
            for (std::size_t i = 0; i < oracle.size(); ++i) {
                Rat lhs(oracle[i], m);
                lhs.canonicalize();
                if (lhs != seq.levels[0][i]) {
                    ok = false;
                    detail = "oracle mismatch at m=" + std::to_string(m);
                }
            }
            auto J = rate_bound_vector(f.inst.cx, f.psi, f.inst.F, m);
            for (std::size_t i = 0; i < J.size(); ++i) {
                Rat err = seq.levels[0][i] - Rat(seq.limit[i]);
                if (err < 0) err = -err;
                if (err > Rat(J[i], m)) {
                    ok = false;
                    detail = "rate bound violated at m=" + std::to_string(m);
                }
            }
        }
    }
    auto circ = verify_l2_novikov_bott(LambdaPoly(), LambdaPoly());
    if (!circ.holds() || !circ.Q.is_zero()) {
        ok = false;
        detail = "L2 circle certificate " + circ.verdict_string();
    }
    report(7, "finite-quotient towers: oracle equality, rate bound, L2 certificate", ok, detail);
}

// --- 8: Morse polynomial coefficients are shifted Betti sums ------------
void criterion_8() {
    bool ok = true;
    std::vector<std::vector<CriticalComponent>> fixtures;
    fixtures.push_back(bott_sphere_components());
    {
        CriticalComponent a, b;
        a.name = "min";
        a.index = 0;
        a.explicit_betti = BettiVector{1};
        b.name = "saddle-circle";
        b.index = 1;
        Instance c = make_circle(0);
        b.complex = c.cx;
        b.bundle = c.F;
        fixtures.push_back({a, b});
    }
    for (const auto& comps : fixtures) {
        LambdaPoly M = morse_polynomial(comps);
        for (long p = 0; p <= M.degree() + 1; ++p) {
            Rat expect(0);
            for (const auto& z : comps) {
                if (z.index > static_cast<std::size_t>(p)) continue;
                expect += twisted_poincare(z).coeff(p - z.index).rational_value();
            }
            if (M.coeff(p).rational_value() != expect) ok = false;
        }
    }
    report(8, "Morse polynomial coefficients equal shifted component Betti sums", ok);
}

// --- 9: determinism ------------------------------------------------------
std::string one_full_run() {
    std::ostringstream out;
    for (const Instance& inst : k1_corpus()) {
        RunReport rep("jumps");
        rep.add_input("instance.json", complex_to_json(inst).dump(2));
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        BettiVector g = generic_betti(nc);
        rep.j["results"]["generic_betti"] = g;
        rep.j["results"]["jumps"] = jump_set_to_json(jump_points(nc), g, false);
        out << rep.dump();
    }
    return out.str();
}

void criterion_9(const char* cli) {
    bool ok = one_full_run() == one_full_run();
    std::string detail = ok ? "" : "in-process reports differ";
    if (ok && cli) {
        std::string dir = "acceptance_tmp";
        std::filesystem::create_directories(dir);
        {
            std::ofstream f(dir + "/torus.json");
            f << complex_to_json(make_torus({1, 0})).dump(2) << "\n";
        }
        std::string base = std::string(cli) + " jumps --input " + dir + "/torus.json";
        int rc1 = std::system((base + " > " + dir + "/run1.json").c_str());
        int rc2 = std::system((base + " > " + dir + "/run2.json").c_str());
        ok = rc1 == 0 && rc2 == 0 && slurp(dir + "/run1.json") == slurp(dir + "/run2.json") &&
             !slurp(dir + "/run1.json").empty();
        if (!ok) detail = "CLI double-run mismatch";
    }
    report(9, "byte-identical reports across two runs", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(argc > 1 ? argv[1] : nullptr);
    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
