#include <scpoly/pfaffian.hpp>

namespace scpoly {

TPoly pfaffian_tpoly(const Matrix<TPoly>& a, int entry_deg_t) {
    require_alternating_even(a);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j).degree() > entry_deg_t)
                throw DegreeBoundExceeded("entry t-degree exceeds declared bound");

    const int n = a.rows() / 2;
    const std::vector<Rat> nodes = integer_nodes(entry_deg_t * n + 1);
    std::vector<Rat> values;
    values.reserve(nodes.size());
    for (const Rat& tau : nodes) {
        Matrix<Rat> num = a.map([&](const TPoly& p) { return p(tau); });
        values.push_back(pfaffian_field(std::move(num)));
    }
    return upoly_interpolate<Var::t>(nodes, values);
}

BiPoly pfaffian_bipoly(const Matrix<BiPoly>& a, int entry_deg_s, int entry_deg_t) {
    require_alternating_even(a);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const BiPoly& p = a.at(i, j);
            if (p.deg_s() > entry_deg_s || p.deg_t() > entry_deg_t)
                throw DegreeBoundExceeded("entry degree exceeds declared bounds");
        }

    const int n = a.rows() / 2;
    const int ds = entry_deg_s * n, dt = entry_deg_t * n;
    const std::vector<Rat> s_nodes = integer_nodes(ds + 1);
    const std::vector<Rat> t_nodes = integer_nodes(dt + 1);
    std::vector<std::vector<Rat>> values(s_nodes.size());
    for (std::size_t i = 0; i < s_nodes.size(); ++i) {
        values[i].reserve(t_nodes.size());
        for (const Rat& tau : t_nodes) {
            Matrix<Rat> num =
                a.map([&](const BiPoly& p) { return p.eval(s_nodes[i], tau); });
            values[i].push_back(pfaffian_field(std::move(num)));
        }
    }
    return bipoly_interpolate2d(s_nodes, t_nodes, values, ds, dt);
}

} // namespace scpoly
