#include <scpoly/matrix.hpp>

namespace scpoly {

bool is_diagonalizable(const Matrix<Rat>& m) {
    require_square(m);
    const TPoly phi = charpoly(m);
    auto [roots, splits] = upoly_rational_roots(phi);
    if (!splits)
        throw IrrationalSpectrum("characteristic polynomial does not split over Q");
    int total = 0;
    for (const auto& [lambda, mult] : roots) {
        (void)mult;
        total += eigenspace(m, lambda).dim();
    }
    return total == m.rows();
}

BiPoly two_endo_charpoly(const Matrix<Rat>& m, const Matrix<Rat>& n) {
    require_square(m);
    require_square(n);
    if (m.rows() != n.rows())
        throw SizeMismatch("two-endomorphism charpoly needs equal sizes");
    const int d = m.rows();
    const std::vector<Rat> s_nodes = integer_nodes(2 * d + 1);
    const std::vector<Rat> t_nodes = integer_nodes(d + 1);

    std::vector<std::vector<Rat>> values(s_nodes.size());
    const Matrix<Rat> id = Matrix<Rat>::identity(d);
    for (std::size_t i = 0; i < s_nodes.size(); ++i) {
        const Rat& sigma = s_nodes[i];
        const Matrix<Rat> prod = (m - id * sigma) * (n - id * sigma);
        values[i].reserve(t_nodes.size());
        for (const Rat& tau : t_nodes) {
            Matrix<Rat> shifted = prod;
            for (int k = 0; k < d; ++k)
                shifted.at(k, k) = shifted.at(k, k) - tau;
            values[i].push_back(det(shifted));
        }
    }
    return bipoly_interpolate2d(s_nodes, t_nodes, values, 2 * d, d);
}

} // namespace scpoly
