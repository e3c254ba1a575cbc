#include <scpoly/io.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <scpoly/symplectic.hpp>

namespace scpoly {

namespace {

using nlohmann::json;

Matrix<Rat> matrix_from_json(const json& j, int dim, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError(std::string(what) + " must be a " + std::to_string(dim) + "-row array");
    Matrix<Rat> m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError(std::string(what) + " row " + std::to_string(i) + " must have " +
                             std::to_string(dim) + " entries");
        for (int k = 0; k < dim; ++k) {
            const json& cell = row[static_cast<std::size_t>(k)];
            if (!cell.is_string())
                throw ParseError(std::string(what) + " entries must be fraction strings");
            m.at(i, k) = Rat::parse(cell.get<std::string>());
        }
    }
    return m;
}

json matrix_to_json(const Matrix<Rat>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("input is not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

MatrixFile parse_matrix_file(const std::string& json_text) {
    const json j = parse_json_text(json_text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("matrix"))
        throw ParseError("matrix file needs keys \"dim\" and \"matrix\"");
    if (!j["dim"].is_number_integer())
        throw ParseError("\"dim\" must be an integer");
    const int dim = j["dim"].get<int>();
    if (dim <= 0 || dim % 2 != 0)
        throw ParseError("\"dim\" must be a positive even integer");

    MatrixFile mf;
    mf.dim = dim;
    mf.matrix = matrix_from_json(j["matrix"], dim, "\"matrix\"");
    if (j.contains("form")) {
        Matrix<Rat> gram = matrix_from_json(j["form"], dim, "\"form\"");
        try {
            SymplecticForm check(dim, gram);
        } catch (const Error& e) {
            throw ParseError("\"form\" is not a valid symplectic Gram matrix: " +
                             std::string(e.what()));
        }
        mf.form = std::move(gram);
    }
    return mf;
}

MatrixFile load_matrix_file(const std::string& path) {
    return parse_matrix_file(read_file(path));
}

std::string render_matrix_file(const MatrixFile& mf) {
    json j;
    j["dim"] = mf.dim;
    j["matrix"] = matrix_to_json(mf.matrix);
    if (mf.form)
        j["form"] = matrix_to_json(*mf.form);
    return j.dump(2) + "\n";
}

Matrix<Rat> load_form_file(const std::string& path) {
    const json j = parse_json_text(read_file(path));
    if (!j.is_object() || !j.contains("dim"))
        throw ParseError("form file needs keys \"dim\" and \"form\"");
    const int dim = j["dim"].get<int>();
    if (dim <= 0 || dim % 2 != 0)
        throw ParseError("\"dim\" must be a positive even integer");
    const char* key = j.contains("form") ? "form" : "matrix";
    if (!j.contains(key))
        throw ParseError("form file needs keys \"dim\" and \"form\"");
    Matrix<Rat> gram = matrix_from_json(j[key], dim, "\"form\"");
    try {
        SymplecticForm check(dim, gram);
    } catch (const Error& e) {
        throw ParseError("form file is not a valid symplectic Gram matrix: " +
                         std::string(e.what()));
    }
    return gram;
}

namespace {

// |c| * var^k with the 1-coefficient and power-1 special cases
std::string term_body(const Rat& abs_coeff, char var, int k) {
    std::string body;
    if (k == 0)
        return abs_coeff.str();
    if (!abs_coeff.is_one())
        body = abs_coeff.str() + "*";
    body += var;
    if (k > 1)
        body += "^" + std::to_string(k);
    return body;
}

} // namespace

template <Var V>
std::string render_upoly(const UPoly<V>& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeff(k);
        if (c.is_zero())
            continue;
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term_body(c.abs(), var_symbol(V), k);
        else
            out += (c.sign() < 0 ? " - " : " + ") + term_body(c.abs(), var_symbol(V), k);
    }
    return out;
}

template std::string render_upoly<Var::s>(const UPoly<Var::s>&);
template std::string render_upoly<Var::t>(const UPoly<Var::t>&);

namespace {

bool is_plain_monomial(const SPoly& c) {
    if (c.is_zero())
        return false;
    int nonzero = 0;
    for (const Rat& x : c.coeffs())
        if (!x.is_zero())
            ++nonzero;
    return nonzero == 1 && c.lc().sign() > 0;
}

} // namespace

std::string render_bipoly(const BiPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.deg_t(); k >= 0; --k) {
        const SPoly& c = p.tcoeff(k);
        if (c.is_zero())
            continue;
        std::string base;
        if (k == 1)
            base = "t";
        else if (k > 1)
            base = "t^" + std::to_string(k);

        std::string piece;
        if (k > 0 && c.is_one())
            piece = base;
        else if (k > 0 && c == SPoly(Rat(-1)))
            piece = "-" + base;
        else if (is_plain_monomial(c))
            piece = render_upoly(c) + (k > 0 ? "*" + base : "");
        else
            piece = "(" + render_upoly(c) + ")" + (k > 0 ? "*" + base : "");

        out += out.empty() ? piece : " + " + piece;
    }
    return out;
}

std::string render_matrix(const Matrix<Rat>& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0)
                out += " ";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

} // namespace scpoly
