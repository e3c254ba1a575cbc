#include <scpoly/bipoly.hpp>

namespace scpoly {

std::optional<BiPoly> bipoly_try_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero())
        throw DivisionByZeroPoly("bivariate division by zero");
    if (a.is_zero())
        return BiPoly();

    // lift to polynomials in t with coefficients in Q(s)
    std::vector<RatFun> rem;
    rem.reserve(static_cast<std::size_t>(a.deg_t()) + 1);
    for (int k = 0; k <= a.deg_t(); ++k)
        rem.emplace_back(a.tcoeff(k));

    const int db = b.deg_t();
    const RatFun lead_inv = RatFun(b.tcoeff(db)).inverse();

    auto degree_of = [](const std::vector<RatFun>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<std::size_t>(d)].is_zero())
            --d;
        return d;
    };

    int dr = degree_of(rem);
    if (dr < db)
        return std::nullopt;
    std::vector<RatFun> quot(static_cast<std::size_t>(dr - db) + 1);
    while (dr >= db) {
        const RatFun c = rem[static_cast<std::size_t>(dr)] * lead_inv;
        const int shift = dr - db;
        quot[static_cast<std::size_t>(shift)] = c;
        for (int k = 0; k <= db; ++k)
            rem[static_cast<std::size_t>(k + shift)] -= c * RatFun(b.tcoeff(k));
        dr = degree_of(rem);
    }
    if (dr >= 0)
        return std::nullopt; // nonzero remainder

    std::vector<SPoly> qcoeffs;
    qcoeffs.reserve(quot.size());
    for (const RatFun& c : quot) {
        if (!c.den().is_one())
            return std::nullopt; // quotient not polynomial
        qcoeffs.push_back(c.num());
    }
    return BiPoly(std::move(qcoeffs));
}

BiPoly bipoly_div_exact(const BiPoly& a, const BiPoly& b) {
    auto q = bipoly_try_div(a, b);
    if (!q)
        throw NotAFactor("divisor is not an exact factor");
    return *q;
}

BiPoly bipoly_interpolate2d(const std::vector<Rat>& s_nodes,
                            const std::vector<Rat>& t_nodes,
                            const std::vector<std::vector<Rat>>& values,
                            int deg_s, int deg_t) {
    const std::size_t ns = static_cast<std::size_t>(deg_s) + 1;
    const std::size_t nt = static_cast<std::size_t>(deg_t) + 1;
    if (s_nodes.size() != ns || t_nodes.size() != nt || values.size() != ns)
        throw InsufficientNodes("grid must have (deg_s+1) x (deg_t+1) samples");
    for (const auto& row : values)
        if (row.size() != nt)
            throw InsufficientNodes("grid must have (deg_s+1) x (deg_t+1) samples");

    // interpolate along t for each fixed s-node, then each t-coefficient
    // along s
    std::vector<TPoly> per_s;
    per_s.reserve(ns);
    for (std::size_t i = 0; i < ns; ++i)
        per_s.push_back(upoly_interpolate<Var::t>(t_nodes, values[i]));

    std::vector<SPoly> tcoeffs;
    tcoeffs.reserve(nt);
    for (int k = 0; k < static_cast<int>(nt); ++k) {
        std::vector<Rat> col;
        col.reserve(ns);
        for (std::size_t i = 0; i < ns; ++i)
            col.push_back(per_s[i].coeff(k));
        tcoeffs.push_back(upoly_interpolate<Var::s>(s_nodes, col));
    }
    return BiPoly(std::move(tcoeffs));
}

std::vector<Rat> integer_nodes(int count) {
    std::vector<Rat> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        nodes.emplace_back(i);
    return nodes;
}

} // namespace scpoly
