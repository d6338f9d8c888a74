#ifndef NOVIKOV_JSON_IO_HPP
#define NOVIKOV_JSON_IO_HPP

#include <fstream>

#include "json.hpp"
#include "novikov/corpus.hpp"
#include "novikov/luck.hpp"

namespace novikov {

// ordered_json keeps insertion order; combined with canonical scalar strings
// this makes serialized reports byte-stable.
using Json = nlohmann::ordered_json;

inline Word parse_word(const std::string& s, const CellComplex& cx) {
    Word w;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('.', i);
        std::string tok = s.substr(i, j == std::string::npos ? std::string::npos : j - i);
        i = j == std::string::npos ? s.size() : j + 1;
        if (tok.empty()) continue;
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        w.push_back({cx.edge_index(tok), sign});
    }
    return w;
}

// ---------------------------------------------------------------------------
// complex/v1
// ---------------------------------------------------------------------------
inline Json complex_to_json(const Instance& inst) {
    Json j;
    j["schema"] = "complex/v1";
    j["cells"] = inst.cx.cells;
    j["edges"] = inst.cx.edge_names;
    Json degs = Json::array();
    for (std::size_t i = 0; i < inst.cx.boundaries.size(); ++i) {
        Json cells_arr = Json::array();
        for (const auto& terms : inst.cx.boundaries[i]) {
            Json ts = Json::array();
            for (const auto& t : terms)
                ts.push_back({{"cell", t.cell},
                              {"coeff", t.coeff},
                              {"path", word_to_string(t.path, inst.cx)}});
            cells_arr.push_back(std::move(ts));
        }
        degs.push_back(std::move(cells_arr));
    }
    j["boundaries"] = std::move(degs);
    if (!inst.cx.attaching_words.empty()) {
        Json aw = Json::array();
        for (const auto& w : inst.cx.attaching_words) aw.push_back(word_to_string(w, inst.cx));
        j["attaching"] = std::move(aw);
    }
    Json coc = Json::object();
    for (std::size_t e = 0; e < inst.cx.count(1); ++e)
        coc[inst.cx.edge_names[e]] = inst.z.weight[e];
    j["cocycle"] = std::move(coc);
    Json bundle;
    bundle["dim"] = inst.F.dim;
    bundle["field"] = field_name(inst.F.conductor());
    Json mono = Json::object();
    for (std::size_t e = 0; e < inst.F.rho.size(); ++e) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < inst.F.rho[e].rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < inst.F.rho[e].cols(); ++c)
                row.push_back(inst.F.rho[e](r, c).to_string());
            rows.push_back(std::move(row));
        }
        mono[inst.cx.edge_names[e]] = std::move(rows);
    }
    bundle["monodromy"] = std::move(mono);
    j["bundle"] = std::move(bundle);
    return j;
}

inline Instance complex_from_json(const Json& j) {
    if (!j.is_object() || j.value("schema", "") != "complex/v1")
        throw ComplexError(ComplexErrorKind::IllFormed, "schema", "expected complex/v1");
    Instance inst;
    try {
        inst.cx.cells = j.at("cells").get<std::vector<std::size_t>>();
        inst.cx.edge_names = j.value("edges", std::vector<std::string>{});
        if (inst.cx.edge_names.empty() && inst.cx.count(1) > 0)
            for (std::size_t e = 0; e < inst.cx.count(1); ++e)
                inst.cx.edge_names.push_back("e" + std::to_string(e));
        for (const auto& deg : j.at("boundaries")) {
            std::vector<std::vector<BoundaryTerm>> layer;
            for (const auto& cell : deg) {
                std::vector<BoundaryTerm> terms;
                for (const auto& t : cell) {
                    BoundaryTerm bt;
                    bt.cell = t.at("cell").get<std::size_t>();
                    bt.coeff = t.at("coeff").get<long>();
                    bt.path = parse_word(t.value("path", ""), inst.cx);
                    terms.push_back(std::move(bt));
                }
                layer.push_back(std::move(terms));
            }
            inst.cx.boundaries.push_back(std::move(layer));
        }
        if (j.contains("attaching"))
            for (const auto& w : j.at("attaching"))
                inst.cx.attaching_words.push_back(parse_word(w.get<std::string>(), inst.cx));
        const Json& coc = j.at("cocycle");
        inst.z.k = 1;
        for (const auto& name : inst.cx.edge_names) {
            ExpVec w = coc.contains(name) ? coc.at(name).get<ExpVec>() : ExpVec{0};
            inst.z.k = std::max(inst.z.k, w.size());
            inst.z.weight.push_back(std::move(w));
        }
        for (auto& w : inst.z.weight) w.resize(inst.z.k, 0);
        const Json& bundle = j.at("bundle");
        inst.F.dim = bundle.at("dim").get<std::size_t>();
        unsigned long conductor = parse_field_name(bundle.value("field", "Q"));
        const Json& mono = bundle.at("monodromy");
        for (const auto& name : inst.cx.edge_names) {
            Matrix<Scalar> m(inst.F.dim, inst.F.dim);
            if (mono.contains(name)) {
                const Json& rows = mono.at(name);
                if (rows.size() != inst.F.dim)
                    throw ComplexError(ComplexErrorKind::IllFormed, name, "monodromy row count");
                for (std::size_t r = 0; r < inst.F.dim; ++r) {
                    if (rows[r].size() != inst.F.dim)
                        throw ComplexError(ComplexErrorKind::IllFormed, name, "monodromy column count");
                    for (std::size_t c = 0; c < inst.F.dim; ++c)
                        m(r, c) = Scalar::parse(rows[r][c].get<std::string>(), conductor);
                }
            } else {
                m = FlatBundle::identity(inst.F.dim);
            }
            inst.F.rho.push_back(std::move(m));
        }
    } catch (const Json::exception& e) {
        throw ComplexError(ComplexErrorKind::IllFormed, "complex/v1", e.what());
    }
    return inst;
}

// ---------------------------------------------------------------------------
// critical/v1
// ---------------------------------------------------------------------------
inline std::vector<CriticalComponent> critical_from_json(const Json& j) {
    if (!j.is_object() || j.value("schema", "") != "critical/v1")
        throw ComplexError(ComplexErrorKind::IllFormed, "schema", "expected critical/v1");
    std::vector<CriticalComponent> out;
    try {
        for (const auto& cj : j.at("components")) {
            CriticalComponent z;
            z.name = cj.at("name").get<std::string>();
            z.index = cj.at("index").get<std::size_t>();
            std::string ori = cj.value("orientation", "trivial");
            if (ori != "trivial" && ori != "twist")
                throw ComplexError(ComplexErrorKind::IllFormed, z.name,
                                   "orientation must be trivial or twist");
            z.orientation_twist = ori == "twist";
            if (cj.contains("betti")) {
                z.explicit_betti = cj.at("betti").get<BettiVector>();
            } else if (cj.contains("complex")) {
                Instance inst = complex_from_json(cj.at("complex"));
                z.complex = inst.cx;
                z.bundle = inst.F;
            }
            if (cj.contains("euler")) z.explicit_euler = cj.at("euler").get<long>();
            out.push_back(std::move(z));
        }
    } catch (const Json::exception& e) {
        throw ComplexError(ComplexErrorKind::IllFormed, "critical/v1", e.what());
    }
    return out;
}

// ---------------------------------------------------------------------------
// tower/v1
// ---------------------------------------------------------------------------
inline QuotientTower tower_from_json(const Json& j, const CellComplex& cx) {
    if (!j.is_object() || j.value("schema", "") != "tower/v1")
        throw ComplexError(ComplexErrorKind::IllFormed, "schema", "expected tower/v1");
    QuotientTower t;
    try {
        std::string group = j.value("group", "Z");
        if (group == "Z")
            t.r = 1;
        else if (group == "Z^r")
            t.r = j.at("r").get<std::size_t>();
        else
            throw ComplexError(ComplexErrorKind::IllFormed, "tower", "unsupported group " + group);
        const Json& psi = j.at("psi");
        for (const auto& name : cx.edge_names) {
            ExpVec w = psi.contains(name) ? psi.at(name).get<ExpVec>() : ExpVec(t.r, 0);
            w.resize(t.r, 0);
            t.psi.push_back(std::move(w));
        }
        t.moduli = j.at("moduli").get<std::vector<std::vector<long>>>();
    } catch (const Json::exception& e) {
        throw ComplexError(ComplexErrorKind::IllFormed, "tower/v1", e.what());
    }
    t.validate(cx.count(1));
    return t;
}

// ---------------------------------------------------------------------------
// Result serialization.
// ---------------------------------------------------------------------------
inline Json poly_to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (long i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).to_string());
    if (p.is_zero()) coeffs.push_back("0");
    return coeffs;
}

inline Json rational_vector_to_json(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.get_str());
    return out;
}

inline Json jump_point_to_json(const JumpPoint& p, const BettiVector& generic, bool with_float) {
    Json j;
    j["poly"] = poly_to_json(p.root.poly);
    j["interval"] = {p.root.lo.get_str(), p.root.hi.get_str()};
    if (p.betti) {
        j["betti"] = *p.betti;
        Json excess = Json::array();
        for (std::size_t i = 0; i < p.betti->size(); ++i)
            excess.push_back((*p.betti)[i] - (i < generic.size() ? generic[i] : 0));
        j["excess"] = std::move(excess);
    }
    j["confirmed"] = p.confirmed;
    if (with_float) j["approx_nonauthoritative"] = p.root.approx();
    return j;
}

inline Json jump_set_to_json(const JumpSet& js, const BettiVector& generic, bool with_float) {
    Json j;
    j["defining"] = poly_to_json(js.defining);
    Json pts = Json::array();
    for (const auto& p : js.points) pts.push_back(jump_point_to_json(p, generic, with_float));
    j["points"] = std::move(pts);
    if (!js.unconfirmed.empty()) {
        Json un = Json::array();
        for (const auto& p : js.unconfirmed) un.push_back(jump_point_to_json(p, generic, with_float));
        j["unconfirmed"] = std::move(un);
    }
    return j;
}

inline Json certificate_to_json(const InequalityCertificate& cert) {
    Json j;
    j["Q"] = poly_to_json(cert.Q);
    j["verdict"] = cert.verdict_string();
    return j;
}

// FNV-1a digest of the raw input bytes; enough to pin report provenance.
inline std::string digest(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

struct RunReport {
    Json j;

    explicit RunReport(const std::string& command) {
        j["schema"] = "report/v1";
        j["command"] = command;
        j["inputs"] = Json::object();
        j["exact_arithmetic"] = true;
        j["results"] = Json::object();
    }

    void add_input(const std::string& name, const std::string& bytes) {
        j["inputs"][name] = digest(bytes);
    }

    std::string dump() const { return j.dump(2) + "\n"; }
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace novikov

#endif
