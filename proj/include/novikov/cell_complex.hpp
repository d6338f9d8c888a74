#ifndef NOVIKOV_CELL_COMPLEX_HPP
#define NOVIKOV_CELL_COMPLEX_HPP

#include "novikov/bareiss.hpp"

namespace novikov {

// A word in the 1-cells: pairs (edge index, +-1), composed left to right.
using Word = std::vector<std::pair<std::size_t, int>>;

struct BoundaryTerm {
    std::size_t cell = 0;  // index of the target cell, one dimension down
    long coeff = 0;        // integer incidence number
    Word path;             // attaching path from the basepoint tree
};

enum class ComplexErrorKind {
    IllFormed,
    CocycleViolation,
    FlatnessViolation,
    ZeroSpecialization,
    MultivariableUnsupported,
    NonIsolated,
};

inline const char* to_string(ComplexErrorKind k) {
    switch (k) {
        case ComplexErrorKind::IllFormed: return "IllFormedComplex";
        case ComplexErrorKind::CocycleViolation: return "CocycleViolation";
        case ComplexErrorKind::FlatnessViolation: return "FlatnessViolation";
        case ComplexErrorKind::ZeroSpecialization: return "ZeroSpecialization";
        case ComplexErrorKind::MultivariableUnsupported: return "MultivariableUnsupported";
        case ComplexErrorKind::NonIsolated: return "NonIsolated";
    }
    return "?";
}

class ComplexError : public std::runtime_error {
public:
    ComplexError(ComplexErrorKind kind, std::string where, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + " at " + where + ": " + detail),
          kind(kind),
          where(std::move(where)) {}
    ComplexErrorKind kind;
    std::string where;  // the offending artifact (cell, edge, file)
};

// ---------------------------------------------------------------------------
// CellComplex: cell counts per degree plus, for every cell of positive
// dimension, its boundary as a formal sum of path-labelled incidence terms.
// ---------------------------------------------------------------------------
struct CellComplex {
    std::vector<std::size_t> cells;  // c_0 .. c_n
    std::vector<std::string> edge_names;
    // boundaries[i][c] = terms of the c-th (i+1)-cell, targeting i-cells
    std::vector<std::vector<std::vector<BoundaryTerm>>> boundaries;
    // optional attaching words of 2-cells (empty when not supplied)
    std::vector<Word> attaching_words;

    std::size_t dim() const { return cells.empty() ? 0 : cells.size() - 1; }
    std::size_t count(std::size_t i) const { return i < cells.size() ? cells[i] : 0; }

    std::string cell_name(std::size_t degree, std::size_t idx) const {
        if (degree == 1 && idx < edge_names.size()) return edge_names[idx];
        return "cell[" + std::to_string(degree) + "][" + std::to_string(idx) + "]";
    }

    std::size_t edge_index(const std::string& name) const {
        for (std::size_t i = 0; i < edge_names.size(); ++i)
            if (edge_names[i] == name) return i;
        throw ComplexError(ComplexErrorKind::IllFormed, name, "unknown 1-cell");
    }

    // Structural validation: sizes, indices, path references.
    void validate_shape() const {
        if (cells.empty())
            return;  // the empty complex is accepted and forces trivial answers
        if (!edge_names.empty() && edge_names.size() != count(1))
            throw ComplexError(ComplexErrorKind::IllFormed, "edges", "edge name count mismatch");
        if (boundaries.size() + 1 < cells.size())
            throw ComplexError(ComplexErrorKind::IllFormed, "boundaries",
                               "missing boundary data for some degree");
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            if (boundaries[i].size() != count(i + 1))
                throw ComplexError(ComplexErrorKind::IllFormed, "degree " + std::to_string(i + 1),
                                   "boundary list size does not match cell count");
            for (std::size_t c = 0; c < boundaries[i].size(); ++c)
                for (const auto& t : boundaries[i][c]) {
                    if (t.cell >= count(i))
                        throw ComplexError(ComplexErrorKind::IllFormed, cell_name(i + 1, c),
                                           "boundary term references missing cell");
                    for (auto [e, s] : t.path)
                        if (e >= count(1) || (s != 1 && s != -1))
                            throw ComplexError(ComplexErrorKind::IllFormed, cell_name(i + 1, c),
                                               "ill-formed path word");
                }
        }
        if (!attaching_words.empty() && cells.size() > 2 && attaching_words.size() != count(2))
            throw ComplexError(ComplexErrorKind::IllFormed, "attaching words",
                               "attaching word count does not match 2-cell count");
        for (const auto& w : attaching_words)
            for (auto [e, s] : w)
                if (e >= count(1) || (s != 1 && s != -1))
                    throw ComplexError(ComplexErrorKind::IllFormed, "attaching words",
                                       "word references missing 1-cell");
    }

    // Integer boundary matrix of degree i+1 -> i (untwisted incidence).
    Matrix<long> integer_boundary(std::size_t i) const {
        Matrix<long> b(count(i), count(i + 1), 0);
        if (i + 1 >= cells.size()) return b;
        for (std::size_t c = 0; c < boundaries[i].size(); ++c)
            for (const auto& t : boundaries[i][c]) b(t.cell, c) += t.coeff;
        return b;
    }

    // dd = 0 for the untwisted integer boundaries; names the first bad cell.
    void validate_boundary_squares_to_zero() const {
        for (std::size_t i = 0; i + 2 < cells.size(); ++i) {
            Matrix<long> a = integer_boundary(i);
            Matrix<long> b = integer_boundary(i + 1);
            Matrix<long> p = a * b;
            for (std::size_t r = 0; r < p.rows(); ++r)
                for (std::size_t c = 0; c < p.cols(); ++c)
                    if (p(r, c) != 0)
                        throw ComplexError(ComplexErrorKind::IllFormed, cell_name(i + 2, c),
                                           "untwisted boundary does not square to zero");
        }
    }
};

// ---------------------------------------------------------------------------
// Cocycle: an integer weight vector in Z^k per 1-cell.
// ---------------------------------------------------------------------------
struct Cocycle {
    std::size_t k = 1;
    std::vector<ExpVec> weight;  // per edge, each of size k

    static Cocycle zero(std::size_t edges, std::size_t k = 1) {
        return Cocycle{k, std::vector<ExpVec>(edges, ExpVec(k, 0))};
    }

    ExpVec weight_of(const Word& w) const {
        ExpVec acc(k, 0);
        for (auto [e, s] : w)
            for (std::size_t i = 0; i < k; ++i) acc[i] += s * weight[e][i];
        return acc;
    }
};

// ---------------------------------------------------------------------------
// FlatBundle: fiber dimension d and one invertible d x d monodromy matrix per
// 1-cell (spanning-tree edges carry the identity).
// ---------------------------------------------------------------------------
struct FlatBundle {
    std::size_t dim = 1;
    std::vector<Matrix<Scalar>> rho;  // per edge

    static FlatBundle trivial(std::size_t edges, std::size_t d = 1) {
        FlatBundle f;
        f.dim = d;
        f.rho.assign(edges, identity(d));
        return f;
    }

    static Matrix<Scalar> identity(std::size_t d) {
        Matrix<Scalar> m(d, d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = Scalar(1);
        return m;
    }

    unsigned long conductor() const {
        unsigned long n = 1;
        for (const auto& m : rho)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) n = std::lcm(n, m(i, j).conductor());
        return n;
    }

    Matrix<Scalar> inverse_of(std::size_t edge) const {
        // Gauss-Jordan over the exact field
        const Matrix<Scalar>& a = rho[edge];
        std::size_t d = a.rows();
        Matrix<Scalar> w = a, inv = identity(d);
        for (std::size_t col = 0; col < d; ++col) {
            std::size_t p = col;
            while (p < d && w(p, col).is_zero()) ++p;
            if (p == d)
                throw ComplexError(ComplexErrorKind::IllFormed, "edge " + std::to_string(edge),
                                   "singular monodromy matrix");
            w.swap_rows(col, p);
            inv.swap_rows(col, p);
            Scalar s = w(col, col).inverse();
            for (std::size_t j = 0; j < d; ++j) {
                w(col, j) *= s;
                inv(col, j) *= s;
            }
            for (std::size_t i = 0; i < d; ++i) {
                if (i == col || w(i, col).is_zero()) continue;
                Scalar f = w(i, col);
                for (std::size_t j = 0; j < d; ++j) {
                    w(i, j) -= f * w(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    Matrix<Scalar> of_word(const Word& w) const {
        Matrix<Scalar> acc = identity(dim);
        for (auto [e, s] : w) acc = acc * (s == 1 ? rho[e] : inverse_of(e));
        return acc;
    }
};

inline std::string word_to_string(const Word& w, const CellComplex& cx) {
    if (w.empty()) return "";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += cx.edge_names.empty() ? "e" + std::to_string(w[i].first)
                                   : cx.edge_names[w[i].first];
        if (w[i].second == -1) s += "^-1";
    }
    return s;
}

}  // namespace novikov

#endif
