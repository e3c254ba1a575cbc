#ifndef SCPOLY_IO_HPP
#define SCPOLY_IO_HPP

#include <optional>
#include <string>

#include <scpoly/matrix.hpp>

namespace scpoly {

// JSON interchange value: {"dim": 2n, "matrix": [["p", "p/q", ...], ...],
// "form": [[...]] (optional)}. Entries are exact-fraction strings, never
// floating numbers. A present form must be alternating and nondegenerate.
struct MatrixFile {
    int dim = 0;
    Matrix<Rat> matrix;
    std::optional<Matrix<Rat>> form;

    friend bool operator==(const MatrixFile& a, const MatrixFile& b) {
        return a.dim == b.dim && a.matrix == b.matrix && a.form == b.form;
    }
};

MatrixFile parse_matrix_file(const std::string& json_text);
MatrixFile load_matrix_file(const std::string& path);
std::string render_matrix_file(const MatrixFile& mf);

// Gram matrix from a form file: {"dim": 2n, "form": [[...]]} ("matrix" is
// accepted as the key as well).
Matrix<Rat> load_form_file(const std::string& path);

// Canonical renderings: terms in descending power, reduced fractions,
// injective on values.
template <Var V>
std::string render_upoly(const UPoly<V>& p);

std::string render_bipoly(const BiPoly& p);

std::string render_matrix(const Matrix<Rat>& m);

} // namespace scpoly

#endif // SCPOLY_IO_HPP
