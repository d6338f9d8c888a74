// novikov: exact computation of twisted and deformed cohomology ranks,
// inequality certificates, and finite-quotient approximations.
//
// Exit codes: 0 success / verdict holds, 1 I/O error, 2 invalid input,
// 3 verdict fails. All printed numbers are exact strings unless --float
// adds clearly marked decimal approximations.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "novikov/json_io.hpp"

using namespace novikov;

namespace {

unsigned long env_conductor() {
    const char* f = std::getenv("NOVIKOV_FIELD");
    if (!f || !*f) return 1;
    return parse_field_name(f);
}

std::string betti_table(const BettiVector& b) {
    std::string s = "degree:";
    for (std::size_t i = 0; i < b.size(); ++i) s += " " + std::to_string(i);
    s += "\nbetti: ";
    for (long v : b) s += " " + std::to_string(v);
    return s;
}

int emit(const RunReport& rep, int code = 0) {
    std::cout << rep.dump();
    return code;
}

int fail_invalid(RunReport& rep, const ComplexError& e) {
    rep.j["error"] = {{"kind", to_string(e.kind)}, {"where", e.where}, {"detail", e.what()}};
    std::cerr << e.what() << "\n";
    return emit(rep, 2);
}

Instance load_instance(const std::string& path, RunReport& rep) {
    std::string bytes = slurp(path);
    rep.add_input(path, bytes);
    return complex_from_json(Json::parse(bytes));
}

int cmd_betti(const std::string& input, const std::string& at, bool generic_only,
              bool with_float) {
    RunReport rep(generic_only ? "generic" : "betti");
    try {
        Instance inst = load_instance(input, rep);
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        BettiVector b;
        if (!generic_only && !at.empty()) {
            std::string v = at;
            if (auto eq = v.find('='); eq != std::string::npos) v = v.substr(eq + 1);
            unsigned long cond = std::max(env_conductor(), inst.F.conductor());
            std::vector<Scalar> point;
            std::size_t start = 0;
            for (;;) {
                std::size_t comma = v.find(',', start);
                point.push_back(Scalar::parse(
                    v.substr(start, comma == std::string::npos ? std::string::npos : comma - start),
                    cond));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            b = betti(specialize(nc, point));
            rep.j["results"]["at"] = v;
        } else {
            b = generic_betti(nc);
            rep.j["results"]["generic"] = true;
        }
        rep.j["results"]["betti"] = b;
        rep.j["results"]["euler"] = euler_characteristic(nc);
        rep.j["results"]["table"] = betti_table(b);
    } catch (const ComplexError& e) {
        return fail_invalid(rep, e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return emit(rep);
}

int cmd_jumps(const std::string& input, bool with_float) {
    RunReport rep("jumps");
    try {
        Instance inst = load_instance(input, rep);
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        BettiVector g = generic_betti(nc);
        JumpSet js = jump_points(nc);
        rep.j["results"]["generic_betti"] = g;
        rep.j["results"]["jumps"] = jump_set_to_json(js, g, with_float);
    } catch (const ComplexError& e) {
        return fail_invalid(rep, e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return emit(rep);
}

int cmd_verify(const std::string& complex_path, const std::string& critical_path,
               const std::string& mode) {
    RunReport rep("verify");
    try {
        Instance inst = load_instance(complex_path, rep);
        std::string kbytes = slurp(critical_path);
        rep.add_input(critical_path, kbytes);
        auto components = critical_from_json(Json::parse(kbytes));
        NovikovComplex nc = build_novikov_complex(inst.cx, inst.z, inst.F);
        BettiVector beta = generic_betti(nc);
        LambdaPoly M = morse_polynomial(components);
        LambdaPoly N = novikov_polynomial(beta);
        InequalityCertificate cert = verify_novikov_bott(
            M, N, mode == "l2" ? CoefficientMode::Rational : CoefficientMode::Integer);
        rep.j["results"]["M"] = poly_to_json(M);
        rep.j["results"]["N"] = poly_to_json(N);
        rep.j["results"]["certificate"] = certificate_to_json(cert);
        return emit(rep, cert.holds() ? 0 : 3);
    } catch (const ComplexError& e) {
        return fail_invalid(rep, e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int cmd_luck(const std::string& input, const std::string& tower_path) {
    RunReport rep("luck");
    try {
        Instance inst = load_instance(input, rep);
        std::string tbytes = slurp(tower_path);
        rep.add_input(tower_path, tbytes);
        QuotientTower tower = tower_from_json(Json::parse(tbytes), inst.cx);
        NormalizedBettiSequence seq = normalized_betti_sequence(inst.cx, inst.z, inst.F, tower);
        Json levels = Json::array();
        for (std::size_t l = 0; l < seq.levels.size(); ++l)
            levels.push_back({{"index", seq.indices[l]},
                              {"normalized_betti", rational_vector_to_json(seq.levels[l])}});
        rep.j["results"]["levels"] = std::move(levels);
        rep.j["results"]["limit"] = seq.limit;
    } catch (const ComplexError& e) {
        return fail_invalid(rep, e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return emit(rep);
}

int cmd_validate(const std::string& input) {
    RunReport rep("validate");
    try {
        Instance inst = load_instance(input, rep);
        build_novikov_complex(inst.cx, inst.z, inst.F);
        rep.j["results"]["valid"] = true;
    } catch (const ComplexError& e) {
        return fail_invalid(rep, e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return emit(rep);
}

Matrix<Scalar> parse_monodromy_arg(const std::string& s, unsigned long cond) {
    // "a,b;c,d" row-major
    std::vector<std::vector<Scalar>> rows;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t semi = s.find(';', start);
        std::string row = s.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        std::vector<Scalar> r;
        std::size_t rs = 0;
        while (rs <= row.size()) {
            std::size_t comma = row.find(',', rs);
            r.push_back(Scalar::parse(
                row.substr(rs, comma == std::string::npos ? std::string::npos : comma - rs), cond));
            if (comma == std::string::npos) break;
            rs = comma + 1;
        }
        rows.push_back(std::move(r));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    Matrix<Scalar> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("ragged monodromy matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<long>> parse_int_matrix(const std::string& s) {
    std::vector<std::vector<long>> rows;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t semi = s.find(';', start);
        std::string row = s.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        std::vector<long> r;
        std::size_t rs = 0;
        while (rs <= row.size()) {
            std::size_t comma = row.find(',', rs);
            r.push_back(std::stol(
                row.substr(rs, comma == std::string::npos ? std::string::npos : comma - rs)));
            if (comma == std::string::npos) break;
            rs = comma + 1;
        }
        rows.push_back(std::move(r));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return rows;
}

int cmd_corpus(const std::string& name, long weight, long w2, long genus, long copies,
               const std::string& eta, const std::string& monodromy, const std::string& matrix) {
    unsigned long cond = env_conductor();
    if (name == "list") {
        Json j;
        j["instances"] = {
            {{"name", "circle"}, {"params", {"--weight", "--monodromy"}}},
            {{"name", "torus"}, {"params", {"--weight", "--w2"}}},
            {{"name", "surface"}, {"params", {"--genus"}}},
            {{"name", "trefoil"}, {"params", {"--eta"}}},
            {{"name", "connected-sum"}, {"params", {"--copies", "--eta"}}},
            {{"name", "mapping-torus"}, {"params", {"--matrix"}}},
        };
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    try {
        Instance inst;
        if (name == "circle") {
            Matrix<Scalar> m = monodromy.empty() ? FlatBundle::identity(1)
                                                 : parse_monodromy_arg(monodromy, cond);
            inst = make_circle(weight, std::move(m));
        } else if (name == "torus") {
            inst = make_torus({weight, w2});
        } else if (name == "surface") {
            inst = make_surface(static_cast<std::size_t>(genus));
        } else if (name == "trefoil" || name == "connected-sum") {
            std::vector<std::pair<GroupPresentation, RepresentationSpec>> fs;
            long c = name == "trefoil" ? 1 : copies;
            unsigned long ec = std::max<unsigned long>(cond, 6);
            Scalar e = eta.empty() ? Scalar::zeta(6) : Scalar::parse(eta, ec);
            for (long i = 0; i < c; ++i)
                fs.push_back({trefoil_presentation(), scalar_rep(2, e)});
            auto [P, R] = free_product(fs);
            P.gens.push_back("s");
            R.mats.push_back(FlatBundle::identity(R.dim));
            R.weights.push_back({1});
            for (std::size_t g = 0; g + 1 < R.weights.size(); ++g) R.weights[g] = {0};
            inst = presentation_complex(P, R);
        } else if (name == "mapping-torus") {
            inst = make_mapping_torus(parse_int_matrix(matrix));
        } else {
            std::cerr << "unknown corpus instance '" << name << "'\n";
            return 2;
        }
        std::cout << complex_to_json(inst).dump(2) << "\n";
        return 0;
    } catch (const ComplexError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted cohomology, jump loci, and inequality certificates"};
    app.require_subcommand(1);

    std::string input, at, complex_path, critical_path, tower_path, mode = "integer";
    bool with_float = false;

    auto* betti_cmd = app.add_subcommand("betti", "Betti vector at a point of the torus");
    betti_cmd->add_option("--input", input)->required();
    betti_cmd->add_option("--at", at, "specialization, e.g. u=1 or u=1/2 (comma-separated for k>1)");
    betti_cmd->add_flag("--float", with_float);

    auto* generic_cmd = app.add_subcommand("generic", "generic Betti vector over the function field");
    generic_cmd->add_option("--input", input)->required();

    auto* jumps_cmd = app.add_subcommand("jumps", "positive-real jump locus");
    jumps_cmd->add_option("--input", input)->required();
    jumps_cmd->add_flag("--float", with_float, "append decimal approximations (non-authoritative)");

    auto* verify_cmd = app.add_subcommand("verify", "inequality certificate M - N = (1+lambda) Q");
    verify_cmd->add_option("--complex", complex_path)->required();
    verify_cmd->add_option("--critical", critical_path)->required();
    verify_cmd->add_option("--mode", mode, "integer (default) or l2");

    auto* luck_cmd = app.add_subcommand("luck", "normalized Betti numbers along a quotient tower");
    luck_cmd->add_option("--input", input)->required();
    luck_cmd->add_option("--tower", tower_path)->required();

    auto* validate_cmd = app.add_subcommand("validate", "structural and flatness validation");
    validate_cmd->add_option("--input", input)->required();

    std::string corpus_name, eta, monodromy, matrix;
    long weight = 0, w2 = 0, genus = 1, copies = 1;
    auto* corpus_cmd = app.add_subcommand("corpus", "emit a built-in instance as complex/v1 JSON");
    corpus_cmd->add_option("name", corpus_name)->required();
    corpus_cmd->add_option("--weight", weight);
    corpus_cmd->add_option("--w2", w2);
    corpus_cmd->add_option("--genus", genus);
    corpus_cmd->add_option("--copies", copies);
    corpus_cmd->add_option("--eta", eta);
    corpus_cmd->add_option("--monodromy", monodromy);
    corpus_cmd->add_option("--matrix", matrix);

    CLI11_PARSE(app, argc, argv);

    if (betti_cmd->parsed()) return cmd_betti(input, at, false, with_float);
    if (generic_cmd->parsed()) return cmd_betti(input, "", true, false);
    if (jumps_cmd->parsed()) return cmd_jumps(input, with_float);
    if (verify_cmd->parsed()) return cmd_verify(complex_path, critical_path, mode);
    if (luck_cmd->parsed()) return cmd_luck(input, tower_path);
    if (validate_cmd->parsed()) return cmd_validate(input);
    if (corpus_cmd->parsed())
        return cmd_corpus(corpus_name, weight, w2, genus, copies, eta, monodromy, matrix);
    return 1;
}
