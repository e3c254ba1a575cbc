#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <scpoly/diagonalization.hpp>
#include <scpoly/eigenstructure.hpp>
#include <scpoly/io.hpp>
#include <scpoly/scp.hpp>

namespace {

using nlohmann::json;
using namespace scpoly;

struct Options {
    bool json_output = false;
    std::string form_file;
    std::uint64_t seed = 0;
    int max_ratfun_dim = default_ratfun_dim_limit;
};

SymplecticForm resolve_form(const MatrixFile& mf, const Options& opt) {
    if (!opt.form_file.empty()) {
        Matrix<Rat> gram = load_form_file(opt.form_file);
        if (gram.rows() != mf.dim)
            throw ParseError("--form dimension differs from the matrix dimension");
        return SymplecticForm(mf.dim, std::move(gram));
    }
    if (mf.form)
        return SymplecticForm(mf.dim, *mf.form);
    return standard_form(mf.dim / 2);
}

json matrix_json(const Matrix<Rat>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Var V>
json upoly_json(const UPoly<V>& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k)
        coeffs.push_back(p.coeff(k).str());
    return json{{"variable", std::string(1, var_symbol(V))}, {"coefficients", coeffs}};
}

json bipoly_json(const BiPoly& p) {
    json tc = json::array();
    for (int k = 0; k <= p.deg_t(); ++k) {
        json sc = json::array();
        for (int j = 0; j <= p.tcoeff(k).degree(); ++j)
            sc.push_back(p.tcoeff(k).coeff(j).str());
        tc.push_back(std::move(sc));
    }
    return json{{"t_coefficients", tc}};
}

std::string render_pair_product(const PairFactorization& f) {
    std::string out;
    for (const auto& p : f.factors) {
        std::string piece =
            "((" + p.lambda.str() + "-s)*(" + p.mu.str() + "-s)-t)";
        if (p.multiplicity > 1)
            piece += "^" + std::to_string(p.multiplicity);
        out += out.empty() ? piece : " * " + piece;
    }
    return out;
}

void emit(const Options& opt, const json& structured, const std::string& text) {
    if (opt.json_output)
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << text;
}

void run_check(const Options& opt, const MatrixFile& mf) {
    const SymplecticForm form = resolve_form(mf, opt);
    const bool normal = is_symplectically_normal(mf.matrix, form);
    std::string diag;
    try {
        diag = is_diagonalizable(mf.matrix) ? "yes" : "no";
    } catch (const IrrationalSpectrum&) {
        diag = "irrational-spectrum";
    }
    const bool symplectic = is_symplectic_map(mf.matrix, form);

    json j{{"symplectically_normal", normal},
           {"diagonalizable", diag},
           {"symplectic_map", symplectic}};
    std::string text;
    text += std::string("symplectically-normal: ") + (normal ? "yes" : "no") + "\n";
    text += "diagonalizable: " + diag + "\n";
    text += std::string("symplectic-map: ") + (symplectic ? "yes" : "no") + "\n";
    emit(opt, j, text);
}

void run_adjoint(const Options& opt, const MatrixFile& mf) {
    const SymplecticForm form = resolve_form(mf, opt);
    const Matrix<Rat> adj = adjoint(mf.matrix, form);
    emit(opt, json{{"dim", mf.dim}, {"matrix", matrix_json(adj)}}, render_matrix(adj));
}

void run_charpoly(const Options& opt, const MatrixFile& mf) {
    const TPoly phi = charpoly(mf.matrix);
    emit(opt, upoly_json(phi), render_upoly(phi) + "\n");
}

void run_pfaffian(const Options& opt, const MatrixFile& mf) {
    const Rat pf = pfaffian_field(mf.matrix);
    emit(opt, json{{"pfaffian", pf.str()}}, pf.str() + "\n");
}

void run_psi(const Options& opt, const MatrixFile& mf) {
    const SymplecticForm form = resolve_form(mf, opt);
    const TPoly psi = pfaffian_charpoly(mf.matrix, form);
    emit(opt, upoly_json(psi), render_upoly(psi) + "\n");
}

void run_scp(const Options& opt, const MatrixFile& mf) {
    const SymplecticForm form = resolve_form(mf, opt);
    const SymplecticCharPoly chi = symplectic_charpoly(mf.matrix, form);
    json j = bipoly_json(chi.value);
    j["n"] = chi.n;
    emit(opt, j, render_bipoly(chi.value) + "\n");
}

void run_factor(const Options& opt, const MatrixFile& mf) {
    const SymplecticForm form = resolve_form(mf, opt);
    const PairFactorization factors = factor_pairs(symplectic_charpoly(mf.matrix, form));
    json pairs = json::array();
    for (const auto& f : factors.factors)
        pairs.push_back(json{{"lambda", f.lambda.str()},
                             {"mu", f.mu.str()},
                             {"multiplicity", f.multiplicity}});
    emit(opt, json{{"pairs", pairs}}, render_pair_product(factors) + "\n");
}

void run_decompose(const Options& opt, const MatrixFile& mf) {
    const SymplecticForm form = resolve_form(mf, opt);
    const PairDecomposition dec = sympl_pair_decomposition(mf.matrix, form);

    json pairs = json::array();
    std::string text;
    for (std::size_t i = 0; i < dec.pairs.size(); ++i) {
        const auto& p = dec.pairs[i];
        const auto& space = dec.spaces[i];
        json basis = json::array();
        for (const auto& v : space.basis()) {
            json vec = json::array();
            for (const Rat& x : v)
                vec.push_back(x.str());
            basis.push_back(std::move(vec));
        }
        pairs.push_back(json{{"lambda", p.lambda.str()},
                             {"mu", p.mu.str()},
                             {"multiplicity", p.multiplicity},
                             {"dim", space.dim()},
                             {"basis", basis},
                             {"projection", matrix_json(dec.projections[i])}});
        text += "pair (" + p.lambda.str() + ", " + p.mu.str() + ") multiplicity " +
                std::to_string(p.multiplicity) + " dim " + std::to_string(space.dim()) + "\n";
        for (const auto& v : space.basis()) {
            text += "  basis";
            for (const Rat& x : v)
                text += " " + x.str();
            text += "\n";
        }
    }
    emit(opt, json{{"pairs", pairs}}, text);
}

void run_diagonalize(const Options& opt, const MatrixFile& mf) {
    const SymplecticForm form = resolve_form(mf, opt);
    const SymplecticDiagonalization d = symplectic_diagonalize(mf.matrix, form);

    json pairs = json::array();
    std::string text = "pairs:";
    for (const auto& [lambda, mu] : d.pairs) {
        pairs.push_back(json::array({lambda.str(), mu.str()}));
        text += " (" + lambda.str() + ", " + mu.str() + ")";
    }
    text += "\nbasis:\n" + render_matrix(d.basis.vectors());
    emit(opt, json{{"pairs", pairs}, {"basis", matrix_json(d.basis.vectors())}}, text);
}

void run_similar(const Options& opt, const MatrixFile& a, const MatrixFile& b) {
    if (a.dim != b.dim)
        throw SizeMismatch("the two endomorphisms act on different dimensions");
    const SymplecticForm form = resolve_form(a, opt);
    const auto [verdict, witness] = symplectically_similar(a.matrix, b.matrix, form);

    json j{{"similar", verdict}};
    std::string text;
    if (verdict) {
        j["witness"] = matrix_json(*witness);
        text = "symplectically-similar\nwitness:\n" + render_matrix(*witness);
    } else {
        text = "not-symplectically-similar\n";
    }
    emit(opt, j, text);
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    std::string file_a, file_b;
    std::function<void()> action;

    CLI::App app{"Exact symplectic characteristic polynomial toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json_output, "structured JSON output");
    app.add_option("--form", opt.form_file, "Gram matrix file overriding the input form");
    app.add_option("--seed", opt.seed, "seed for randomized test-data helpers");
    app.add_option("--max-ratfun-dim", opt.max_ratfun_dim,
                   "guardrail override for elimination over Q(s)");

    auto one_file = [&](const char* name, const char* desc, auto handler) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough(); // global flags may follow the subcommand
        sub->add_option("file", file_a, "matrix file (JSON)")->required();
        sub->callback([&, handler]() {
            action = [&, handler]() { handler(opt, load_matrix_file(file_a)); };
        });
        return sub;
    };

    one_file("check", "report normality, diagonalizability and form preservation", run_check);
    one_file("adjoint", "symplectic adjoint of the endomorphism", run_adjoint);
    one_file("charpoly", "characteristic polynomial det(M - tE)", run_charpoly);
    one_file("pfaffian", "Pfaffian of an alternating matrix", run_pfaffian);
    one_file("psi", "Pfaffian characteristic polynomial of a self-adjoint endomorphism",
             run_psi);
    one_file("scp", "symplectic characteristic polynomial chi(s,t)", run_scp);
    one_file("factor", "factor chi into eigenvalue pair factors", run_factor);
    one_file("decompose", "symplectically orthogonal pair-space decomposition", run_decompose);
    one_file("diagonalize", "constructive symplectic diagonalization", run_diagonalize);

    CLI::App* sim = app.add_subcommand("similar", "decide symplectic similarity with witness");
    sim->fallthrough();
    sim->add_option("file_a", file_a, "first matrix file")->required();
    sim->add_option("file_b", file_b, "second matrix file")->required();
    sim->callback([&]() {
        action = [&]() { run_similar(opt, load_matrix_file(file_a), load_matrix_file(file_b)); };
    });

    try {
        app.parse(argc, argv);
        action();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: PARSE_ERROR " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.token() << " " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.token() << " " << e.what() << "\n";
        return 1;
    }
    return 0;
}
