#ifndef NOVIKOV_CORPUS_HPP
#define NOVIKOV_CORPUS_HPP

#include <numeric>
#include <random>
#include <set>

#include "novikov/novikov_complex.hpp"

namespace novikov {

struct Instance {
    CellComplex cx;
    Cocycle z;
    FlatBundle F;
};

// ---------------------------------------------------------------------------
// Group presentations and Fox calculus. Relator words are over generator
// indices; the presentation 2-complex has one vertex, one edge per generator
// and one face per relator, with the twisted degree-1 differential given by
// the Fox derivative terms of the relators.
// ---------------------------------------------------------------------------
struct GroupPresentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;

    void validate() const {
        for (const auto& r : relators)
            for (auto [g, s] : r)
                if (g >= gens.size() || (s != 1 && s != -1))
                    throw ComplexError(ComplexErrorKind::IllFormed, "relator",
                                       "word references missing generator");
    }
};

struct RepresentationSpec {
    std::size_t dim = 1;
    std::size_t k = 1;                     // deformation rank
    std::vector<Matrix<Scalar>> mats;      // per generator
    std::vector<ExpVec> weights;           // per generator, size k

    static RepresentationSpec trivial(std::size_t gens, std::size_t d = 1) {
        RepresentationSpec r;
        r.dim = d;
        r.mats.assign(gens, FlatBundle::identity(d));
        r.weights.assign(gens, ExpVec(1, 0));
        return r;
    }
};

// Fox derivative terms of a relator word: one path-labelled term per letter
// occurrence.
inline std::vector<BoundaryTerm> fox_terms(const Word& r) {
    std::vector<BoundaryTerm> out;
    Word prefix;
    for (auto [g, s] : r) {
        if (s == 1) {
            out.push_back({g, 1, prefix});
            prefix.push_back({g, 1});
        } else {
            prefix.push_back({g, -1});
            out.push_back({g, -1, prefix});
        }
    }
    return out;
}

// Boundary terms of a 1-cell in a one-vertex complex.
inline std::vector<BoundaryTerm> loop_edge_terms(std::size_t e) {
    return {{0, 1, Word{{e, 1}}}, {0, -1, Word{}}};
}

inline Instance presentation_complex(const GroupPresentation& P, const RepresentationSpec& R) {
    P.validate();
    if (R.mats.size() != P.gens.size() || R.weights.size() != P.gens.size())
        throw ComplexError(ComplexErrorKind::IllFormed, "representation",
                           "one matrix and one weight per generator required");
    Instance inst;
    inst.cx.cells = {1, P.gens.size()};
    if (!P.relators.empty()) inst.cx.cells.push_back(P.relators.size());
    inst.cx.edge_names = P.gens;
    inst.cx.boundaries.resize(inst.cx.cells.size() - 1);
    for (std::size_t e = 0; e < P.gens.size(); ++e)
        inst.cx.boundaries[0].push_back(loop_edge_terms(e));
    for (const auto& r : P.relators) {
        inst.cx.boundaries[1].push_back(fox_terms(r));
        inst.cx.attaching_words.push_back(r);
    }
    inst.z = Cocycle{R.k, R.weights};
    inst.F = FlatBundle{R.dim, R.mats};
    return inst;
}

// ---------------------------------------------------------------------------
// Elementary generators.
// ---------------------------------------------------------------------------
inline Instance make_circle(long weight, Matrix<Scalar> monodromy) {
    GroupPresentation P{{"e"}, {}};
    RepresentationSpec R;
    R.dim = monodromy.rows();
    R.mats = {std::move(monodromy)};
    R.weights = {{weight}};
    return presentation_complex(P, R);
}

inline Instance make_circle(long weight, Scalar monodromy = Scalar(1)) {
    Matrix<Scalar> m(1, 1);
    m(0, 0) = std::move(monodromy);
    return make_circle(weight, std::move(m));
}

inline Instance make_torus(std::array<long, 2> weights,
                           std::vector<Matrix<Scalar>> monodromies = {}) {
    GroupPresentation P{{"a", "b"},
                        {Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}}}};
    RepresentationSpec R;
    if (monodromies.empty()) monodromies = {FlatBundle::identity(1), FlatBundle::identity(1)};
    R.dim = monodromies[0].rows();
    R.mats = std::move(monodromies);
    R.weights = {{weights[0]}, {weights[1]}};
    return presentation_complex(P, R);
}

inline Instance make_surface(std::size_t genus, std::vector<long> weights = {},
                             std::vector<Matrix<Scalar>> monodromies = {}) {
    GroupPresentation P;
    Word relator;
    for (std::size_t i = 0; i < genus; ++i) {
        P.gens.push_back("a" + std::to_string(i + 1));
        P.gens.push_back("b" + std::to_string(i + 1));
        std::size_t a = 2 * i, b = 2 * i + 1;
        relator.insert(relator.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    }
    if (genus > 0) P.relators.push_back(relator);
    RepresentationSpec R = RepresentationSpec::trivial(P.gens.size());
    if (!weights.empty())
        for (std::size_t i = 0; i < P.gens.size(); ++i) R.weights[i] = {weights.at(i)};
    if (!monodromies.empty()) {
        R.dim = monodromies[0].rows();
        R.mats = std::move(monodromies);
    }
    return presentation_complex(P, R);
}

// Free product of presentations (disjoint generators, concatenated relators).
inline std::pair<GroupPresentation, RepresentationSpec> free_product(
    const std::vector<std::pair<GroupPresentation, RepresentationSpec>>& factors) {
    GroupPresentation P;
    RepresentationSpec R;
    R.dim = factors.empty() ? 1 : factors[0].second.dim;
    R.k = factors.empty() ? 1 : factors[0].second.k;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& [Pf, Rf] = factors[f];
        if (Rf.dim != R.dim || Rf.k != R.k)
            throw std::invalid_argument("free_product: mismatched fiber dimension or rank");
        std::size_t offset = P.gens.size();
        for (const auto& g : Pf.gens) P.gens.push_back(g + "_" + std::to_string(f + 1));
        for (const auto& r : Pf.relators) {
            Word w = r;
            for (auto& [g, s] : w) g += offset;
            P.relators.push_back(std::move(w));
        }
        for (const auto& m : Rf.mats) R.mats.push_back(m);
        for (const auto& wv : Rf.weights) R.weights.push_back(wv);
    }
    return {P, R};
}

// ---------------------------------------------------------------------------
// The connected-sum model: the free product P * <s|> with deformation weight
// 1 on s and the supplied representation on P. The first Novikov-Betti number
// of the X-side is recovered from the assembled complex by removing the
// Mayer-Vietoris terms contributed by the wedge junctions; the certificate
// recomputes it independently as the twisted H^1 of P at u = 1.
// ---------------------------------------------------------------------------
struct ConnectedSumResult {
    long beta1 = 0;               // X-side first Novikov-Betti number
    BettiVector assembled;        // generic Betti vector of the assembled complex
    long oracle_h1 = 0;           // sum over free factors of dim H^1 at u = 1
    bool certificate_ok = false;  // beta1 == oracle_h1
    Instance instance;
};

namespace detail {

// Free factors of a presentation: connected components of the graph whose
// vertices are generators, joined when they share a relator.
inline std::vector<std::pair<GroupPresentation, RepresentationSpec>> free_factors(
    const GroupPresentation& P, const RepresentationSpec& R) {
    std::size_t n = P.gens.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& r : P.relators)
        for (std::size_t i = 1; i < r.size(); ++i) parent[find(r[i].first)] = find(r[0].first);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t g = 0; g < n; ++g) groups[find(g)].push_back(g);
    std::vector<std::pair<GroupPresentation, RepresentationSpec>> out;
    for (auto& [root, gens] : groups) {
        GroupPresentation Pf;
        RepresentationSpec Rf;
        Rf.dim = R.dim;
        Rf.k = R.k;
        std::map<std::size_t, std::size_t> remap;
        for (std::size_t g : gens) {
            remap[g] = Pf.gens.size();
            Pf.gens.push_back(P.gens[g]);
            Rf.mats.push_back(R.mats[g]);
            Rf.weights.push_back(R.weights[g]);
        }
        for (const auto& r : P.relators) {
            if (r.empty() || find(r[0].first) != root) continue;
            Word w = r;
            for (auto& [g, s] : w) g = remap[g];
            Pf.relators.push_back(std::move(w));
        }
        out.push_back({std::move(Pf), std::move(Rf)});
    }
    return out;
}

}  // namespace detail

inline ConnectedSumResult connected_sum_h1(const GroupPresentation& P,
                                           const RepresentationSpec& eta_rep) {
    if (eta_rep.k != 1)
        throw std::invalid_argument("connected_sum_h1: single deformation variable required");
    const std::size_t d = eta_rep.dim;

    // assemble P * <s|> with weight 1 on s, identity monodromy on s
    GroupPresentation Pw = P;
    RepresentationSpec Rw = eta_rep;
    for (auto& w : Rw.weights)
        for (auto& v : w) v = 0;  // the class restricts trivially to the X side
    Pw.gens.push_back("s");
    Rw.mats.push_back(FlatBundle::identity(d));
    Rw.weights.push_back({1});

    ConnectedSumResult res;
    res.instance = presentation_complex(Pw, Rw);
    NovikovComplex nc = build_novikov_complex(res.instance.cx, res.instance.z, res.instance.F);
    res.assembled = generic_betti(nc);

    // wedge bookkeeping: b1_W = sum_f h1_f + (m-1) d - sum_f h0_f + b0_W,
    // so the X-side sum of h1's is recovered exactly.
    auto factors = detail::free_factors(Pw, Rw);
    const std::size_t m = factors.size();
    long sum_h0 = 0, h1_circle = 0;
    for (const auto& [Pf, Rf] : factors) {
        Instance fi = presentation_complex(Pf, Rf);
        NovikovComplex fnc = build_novikov_complex(fi.cx, fi.z, fi.F);
        BettiVector fb = generic_betti(fnc);
        sum_h0 += fb[0];
        bool is_circle = Pf.gens.size() == 1 && Pf.gens[0] == "s";
        if (is_circle && fb.size() > 1) h1_circle = fb[1];
    }
    long b1_W = res.assembled.size() > 1 ? res.assembled[1] : 0;
    long b0_W = res.assembled[0];
    res.beta1 = b1_W - static_cast<long>((m - 1) * d) + sum_h0 - b0_W - h1_circle;

    // independent oracle: twisted H^1 of P at u = 1, factor by factor
    for (const auto& [Pf, Rf] : factors) {
        if (Pf.gens.size() == 1 && Pf.gens[0] == "s") continue;
        Instance fi = presentation_complex(Pf, Rf);
        Cocycle zero = Cocycle::zero(fi.cx.count(1));
        NovikovComplex fnc = build_novikov_complex(fi.cx, zero, fi.F);
        BettiVector fb = betti(specialize(fnc, Scalar(1)));
        if (fb.size() > 1) res.oracle_h1 += fb[1];
    }
    res.certificate_ok = res.beta1 == res.oracle_h1;
    return res;
}

// The trefoil knot group <a, b | a b a b^-1 a^-1 b^-1>; its Alexander
// polynomial is t^2 - t + 1 (Rolfsen, Knots and Links, table of knot
// invariants).
inline GroupPresentation trefoil_presentation() {
    return {{"a", "b"}, {Word{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}}};
}

// Torus knot (p, q) via <a, b | a^p b^-q>.
inline GroupPresentation torus_knot_presentation(long p, long q) {
    Word r;
    for (long i = 0; i < p; ++i) r.push_back({0, 1});
    for (long i = 0; i < q; ++i) r.push_back({1, -1});
    return {{"a", "b"}, {r}};
}

// Meridian representation of the (p, q) torus knot group: the abelianization
// sends a to the q-th and b to the p-th power of the meridian class, so
// a |-> eta^q, b |-> eta^p kills the relator a^p b^-q.
inline RepresentationSpec torus_knot_rep(long p, long q, const Scalar& eta) {
    RepresentationSpec R;
    R.dim = 1;
    Matrix<Scalar> a(1, 1), b(1, 1);
    a(0, 0) = eta.pow(q);
    b(0, 0) = eta.pow(p);
    R.mats = {a, b};
    R.weights = {{0}, {0}};
    return R;
}

// Rank-1 representation sending every generator to the same scalar.
inline RepresentationSpec scalar_rep(std::size_t gens, const Scalar& eta) {
    RepresentationSpec R;
    R.dim = 1;
    Matrix<Scalar> m(1, 1);
    m(0, 0) = eta;
    R.mats.assign(gens, m);
    R.weights.assign(gens, ExpVec{0});
    return R;
}

// ---------------------------------------------------------------------------
// Mapping tori. For a permutation: the disjoint circles complex. For an
// invertible integer matrix A acting on the n-torus: the algebraic mapping
// cone of u * (induced cochain map) - 1, with the class dual to the base
// circle. Cells in degree p are the size-p coordinate subsets (torus part)
// followed by the size-(p-1) subsets (cone part); the cone blocks are the
// compound matrices of A^T.
// ---------------------------------------------------------------------------
inline Instance make_mapping_torus_permutation(const std::vector<std::size_t>& sigma) {
    std::size_t n = sigma.size();
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v >= n || seen[v])
            throw ComplexError(ComplexErrorKind::IllFormed, "permutation", "not a bijection");
        seen[v] = true;
    }
    Instance inst;
    inst.cx.cells = {n, n};
    inst.cx.boundaries.resize(1);
    for (std::size_t i = 0; i < n; ++i) {
        inst.cx.edge_names.push_back("e" + std::to_string(i));
        inst.cx.boundaries[0].push_back(
            {{sigma[i], 1, Word{{i, 1}}}, {i, -1, Word{}}});
    }
    inst.z = Cocycle{1, std::vector<ExpVec>(n, ExpVec{1})};
    inst.F = FlatBundle::trivial(n);
    return inst;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == p) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline long int_det(std::vector<std::vector<long>> a) {
    std::size_t n = a.size();
    // fraction-free elimination over Z
    long prev = 1;
    long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

inline long minor_of(const std::vector<std::vector<long>>& m,
                     const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    std::vector<std::vector<long>> sub(rows.size(), std::vector<long>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[rows[i]][cols[j]];
    return int_det(sub);
}

}  // namespace detail

inline Instance make_mapping_torus(const std::vector<std::vector<long>>& A) {
    const std::size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n)
            throw ComplexError(ComplexErrorKind::IllFormed, "matrix", "square matrix required");
    long det = detail::int_det(A);
    if (det != 1 && det != -1)
        throw ComplexError(ComplexErrorKind::IllFormed, "matrix",
                           "not invertible over Z (det = " + std::to_string(det) + ")");
    std::vector<std::vector<long>> At(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) At[i][j] = A[j][i];

    Instance inst;
    inst.cx.cells.resize(n + 2);
    auto choose = [&](std::size_t p) { return detail::subsets_of_size(n, p).size(); };
    for (std::size_t p = 0; p <= n + 1; ++p)
        inst.cx.cells[p] = (p <= n ? choose(p) : 0) + (p >= 1 && p - 1 <= n ? choose(p - 1) : 0);
    inst.cx.boundaries.resize(n + 1);
    // edges: torus edges a_1..a_n (weight 0), cone edge s (weight 1)
    for (std::size_t i = 0; i < n; ++i) inst.cx.edge_names.push_back("a" + std::to_string(i + 1));
    inst.cx.edge_names.push_back("s");
    const std::size_t s_edge = n;
    inst.z = Cocycle{1, {}};
    inst.z.weight.assign(n + 1, ExpVec{0});
    inst.z.weight[s_edge] = {1};
    inst.F = FlatBundle::trivial(n + 1);

    // degree-1 boundaries: honest vertex terms
    for (std::size_t i = 0; i <= n; ++i)
        inst.cx.boundaries[0].push_back(loop_edge_terms(i));

    // higher degrees: torus cells have zero boundary; the cone cell of a
    // size-p subset S has terms  sum_T minor(A^T; S, T) u * x_T  -  x_S
    for (std::size_t deg = 2; deg <= n + 1; ++deg) {
        auto torus_cells = detail::subsets_of_size(n, deg);           // x-part of this degree
        auto cone_sets = detail::subsets_of_size(n, deg - 1);         // cone part of this degree
        auto target_sets = detail::subsets_of_size(n, deg - 1);       // x-part one degree down
        auto& layer = inst.cx.boundaries[deg - 1];
        for (std::size_t c = 0; c < torus_cells.size(); ++c) layer.push_back({});
        for (const auto& S : cone_sets) {
            std::vector<BoundaryTerm> terms;
            for (std::size_t t = 0; t < target_sets.size(); ++t) {
                long mv = detail::minor_of(At, S, target_sets[t]);
                if (mv != 0) terms.push_back({t, mv, Word{{s_edge, 1}}});
                if (target_sets[t] == S) terms.push_back({t, -1, Word{}});
            }
            layer.push_back(std::move(terms));
        }
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Randomized valid instances (for property and validation tests) and their
// deliberate corruptions.
// ---------------------------------------------------------------------------
enum class Corruption { Cocycle, Flatness, IllFormed };

inline Instance random_instance(std::mt19937& rng, std::size_t max_gens = 4,
                                std::size_t max_dim = 3) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<long> wdist(-2, 2);
    std::uniform_int_distribution<long> sdist(1, 3);
    switch (kind(rng)) {
        case 0: {  // free group with diagonal monodromies
            std::size_t g = 1 + rng() % max_gens;
            std::size_t d = 1 + rng() % max_dim;
            GroupPresentation P;
            RepresentationSpec R;
            R.dim = d;
            for (std::size_t i = 0; i < g; ++i) {
                P.gens.push_back("g" + std::to_string(i));
                Matrix<Scalar> m(d, d);
                for (std::size_t a = 0; a < d; ++a) m(a, a) = Scalar(sdist(rng));
                R.mats.push_back(std::move(m));
                R.weights.push_back({wdist(rng)});
            }
            return presentation_complex(P, R);
        }
        case 1: {  // commutator relators with diagonal monodromies
            std::size_t g = 2 + rng() % std::max<std::size_t>(1, max_gens - 1);
            std::size_t d = 1 + rng() % max_dim;
            GroupPresentation P;
            RepresentationSpec R;
            R.dim = d;
            for (std::size_t i = 0; i < g; ++i) {
                P.gens.push_back("g" + std::to_string(i));
                Matrix<Scalar> m(d, d);
                for (std::size_t a = 0; a < d; ++a) m(a, a) = Scalar(sdist(rng));
                R.mats.push_back(std::move(m));
                R.weights.push_back({wdist(rng)});
            }
            std::size_t nrel = 1 + rng() % 2;
            for (std::size_t r = 0; r < nrel; ++r) {
                std::size_t a = rng() % g, b = rng() % g;
                if (a == b) b = (b + 1) % g;
                P.relators.push_back(Word{{a, 1}, {b, 1}, {a, -1}, {b, -1}});
            }
            return presentation_complex(P, R);
        }
        case 2: {  // permutation mapping torus
            std::size_t N = 1 + rng() % 4;
            std::vector<std::size_t> sigma(N);
            std::iota(sigma.begin(), sigma.end(), 0);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            return make_mapping_torus_permutation(sigma);
        }
        default: {  // surface with random weights
            std::size_t genus = 1 + rng() % 2;
            std::vector<long> w(2 * genus);
            for (auto& v : w) v = wdist(rng);
            return make_surface(genus, w);
        }
    }
}

// Corrupt an instance so that validation must reject it with the given error
// class; returns nullopt if this instance has no room for that corruption.
inline std::optional<Instance> corrupt_instance(Instance inst, Corruption kind,
                                                std::mt19937& rng) {
    switch (kind) {
        case Corruption::Cocycle: {
            // make some 2-cell's term weight-sum nonzero
            if (inst.cx.cells.size() < 3 || inst.cx.boundaries[1].empty()) return std::nullopt;
            for (auto& terms : inst.cx.boundaries[1])
                for (auto& t : terms)
                    if (inst.z.weight[t.cell][0] != 0) {
                        t.coeff += 1;
                        inst.cx.attaching_words.clear();
                        return inst;
                    }
            return std::nullopt;
        }
        case Corruption::Flatness: {
            // make one relator's monodromy product nontrivial: pick two
            // distinct edges of a 2-cell, force distinct diagonal entries on
            // one and add an off-diagonal entry to the other
            if (inst.cx.cells.size() < 3 || inst.cx.boundaries[1].empty()) return std::nullopt;
            if (inst.F.dim < 2) return std::nullopt;
            for (const auto& terms : inst.cx.boundaries[1]) {
                std::set<std::size_t> edges;
                for (const auto& t : terms) edges.insert(t.cell);
                if (edges.size() < 2) continue;
                auto it = edges.begin();
                std::size_t e = *it++;
                std::size_t f = *it;
                std::size_t d = inst.F.dim;
                inst.F.rho[f](d - 1, d - 1) = inst.F.rho[f](0, 0) + Scalar(1);
                inst.F.rho[e](0, d - 1) += Scalar(1);
                return inst;
            }
            return std::nullopt;
        }
        case Corruption::IllFormed: {
            // dangling path reference
            if (inst.cx.boundaries.empty() || inst.cx.boundaries[0].empty()) return std::nullopt;
            inst.cx.boundaries[0][0].push_back({0, 1, Word{{inst.cx.count(1) + 7, 1}}});
            return inst;
        }
    }
    return std::nullopt;
}

}  // namespace novikov

#endif
