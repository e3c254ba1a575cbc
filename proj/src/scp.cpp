#include <scpoly/scp.hpp>

#include <algorithm>

namespace scpoly {

BiPoly pair_factor_poly(const Rat& lambda, const Rat& mu) {
    const SPoly ls({lambda, Rat(-1)}); // lambda - s
    const SPoly ms({mu, Rat(-1)});     // mu - s
    return BiPoly(ls * ms) - BiPoly::t();
}

BiPoly PairFactorization::product() const {
    BiPoly p(Rat(1));
    for (const auto& f : factors)
        p *= pair_factor_poly(f.lambda, f.mu).pow(f.multiplicity);
    return p;
}

TPoly pfaffian_charpoly(const Matrix<Rat>& a, const SymplecticForm& form) {
    if (!a.is_square() || a.rows() != form.dim())
        throw SizeMismatch("pfaffian charpoly needs the form dimension");
    if (adjoint(a, form) != a)
        throw NotSelfAdjoint("endomorphism is not self-adjoint");
    const SymplecticBasis basis = symplectic_basis(form);
    // Gram of omega_{A - tE} over Q[t]: entry degrees are at most 1
    auto lift = [](const Matrix<Rat>& m) {
        return m.map([](const Rat& x) { return TPoly(x); });
    };
    Matrix<TPoly> shifted = lift(a);
    for (int i = 0; i < a.rows(); ++i)
        shifted.at(i, i) -= TPoly::var();
    return pf_omega(shifted, basis, form, 1);
}

SymplecticCharPoly symplectic_charpoly(const Matrix<Rat>& m, const SymplecticForm& form) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("symplectic charpoly needs the form dimension");
    const int n = form.n();
    const SymplecticBasis basis = symplectic_basis(form);
    const Matrix<Rat> p = basis.interleaved();

    // columns (M - sE) v_i over Q[s]
    Matrix<SPoly> shifted = to_spoly(m);
    for (int i = 0; i < m.rows(); ++i)
        shifted.at(i, i) -= SPoly::var();
    const Matrix<SPoly> moved = shifted * to_spoly(p);

    // Gram of the pullback of omega by (M - sE), minus t * Gram of omega,
    // in the interleaved ordering; entry degrees are at most (2, 1)
    const Matrix<SPoly> pullback = moved.transpose() * to_spoly(form.gram()) * moved;
    const Matrix<Rat> base = p.transpose() * form.gram() * p;
    Matrix<BiPoly> gram(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            gram.at(i, j) = BiPoly(pullback.at(i, j)) - BiPoly::t(1, base.at(i, j));

    BiPoly chi = pfaffian_bipoly(gram, 2, 1);
    if (chi.deg_t() != n || chi.tcoeff(n) != SPoly(Rat(n % 2 == 0 ? 1 : -1)))
        throw Error("INTERNAL", "symplectic charpoly lost its t^n anchor");
    return SymplecticCharPoly{std::move(chi), n};
}

PairFactorization peel_pair_factors(const BiPoly& f) {
    const int count = f.deg_t();
    const SPoly at_zero = f.eval_t(Rat(0));
    if (at_zero.is_zero())
        throw FactorizationFailed("t divides the polynomial; no pair factor matches");
    auto [roots, splits] = upoly_rational_roots(at_zero);
    if (!splits)
        throw NonSplitSpectrum("spectrum does not split over Q");

    std::vector<Rat> values;
    values.reserve(roots.size());
    for (const auto& [r, mult] : roots) {
        (void)mult;
        values.push_back(r);
    }

    // candidate unordered pairs in canonical (ascending lexicographic) order
    std::vector<std::pair<Rat, Rat>> candidates;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i; j < values.size(); ++j) {
            if (i == j && roots.at(values[i]) < 2)
                continue;
            candidates.emplace_back(values[i], values[j]);
        }

    PairFactorization result;
    BiPoly remaining = f;
    for (int peeled = 0; peeled < count;) {
        bool advanced = false;
        for (const auto& [lambda, mu] : candidates) {
            const BiPoly factor = pair_factor_poly(lambda, mu);
            auto q = bipoly_try_div(remaining, factor);
            if (!q)
                continue;
            remaining = std::move(*q);
            if (!result.factors.empty() && result.factors.back().lambda == lambda &&
                result.factors.back().mu == mu)
                ++result.factors.back().multiplicity;
            else
                result.factors.push_back({lambda, mu, 1});
            ++peeled;
            advanced = true;
            break;
        }
        if (!advanced)
            throw FactorizationFailed("no eigenvalue pair divides the polynomial");
    }
    if (!remaining.is_one())
        throw FactorizationFailed("pair factors do not exhaust the polynomial");
    return result;
}

PairFactorization factor_pairs(const SymplecticCharPoly& chi) {
    return peel_pair_factors(chi.value);
}

namespace {

// expand in (s, u) with u in the t slot, then map u^{2k} -> t^k
BiPoly fold_even_square(const Matrix<Rat>& m) {
    const TPoly phi = charpoly(m);
    const BiPoly s_minus_u(std::vector<SPoly>{SPoly::var(), SPoly(Rat(-1))});
    const BiPoly s_plus_u(std::vector<SPoly>{SPoly::var(), SPoly(Rat(1))});
    const BiPoly prod = substitute(phi, s_minus_u) * substitute(phi, s_plus_u);
    std::vector<SPoly> even;
    for (int k = 0; k <= prod.deg_t(); ++k) {
        if (k % 2 == 1) {
            if (!prod.tcoeff(k).is_zero())
                throw Error("INTERNAL", "odd power survived the even-fold");
            continue;
        }
        even.push_back(prod.tcoeff(k));
    }
    return BiPoly(std::move(even));
}

} // namespace

BiPoly special_square(const Matrix<Rat>& m, const SymplecticForm& form, AdjointRelation kind) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("special square needs the form dimension");
    const Matrix<Rat> adj = adjoint(m, form);
    const int n = form.n();

    switch (kind) {
    case AdjointRelation::self_adjoint: {
        if (adj != m)
            throw RelationNotSatisfied("endomorphism is not self-adjoint");
        return fold_even_square(m);
    }
    case AdjointRelation::anti_self_adjoint: {
        if (adj != -m)
            throw RelationNotSatisfied("endomorphism is not anti-self-adjoint");
        const TPoly phi_sq = charpoly(m * m);
        const BiPoly arg = BiPoly(SPoly::monomial(2)) - BiPoly::t(); // s^2 - t
        return substitute(phi_sq, arg);
    }
    case AdjointRelation::symplectic: {
        if (!is_symplectic_map(m, form))
            throw RelationNotSatisfied("endomorphism does not preserve the form");
        const TPoly phi = charpoly(m + inverse(m));
        // sum_k c_k (s^2 - t + 1)^k s^{2n-k}
        const BiPoly arg =
            BiPoly(SPoly::monomial(2)) - BiPoly::t() + BiPoly(Rat(1));
        BiPoly acc;
        for (int k = 0; k <= phi.degree(); ++k) {
            if (phi.coeff(k).is_zero())
                continue;
            acc += arg.pow(k) * BiPoly(SPoly::monomial(2 * n - k, phi.coeff(k)));
        }
        return acc;
    }
    }
    throw Error("INTERNAL", "unknown adjoint relation");
}

} // namespace scpoly
