#include <scpoly/eigenstructure.hpp>

namespace scpoly {

namespace {

void require_same_square(const Matrix<Rat>& m, const Matrix<Rat>& n) {
    require_square(m);
    require_square(n);
    if (m.rows() != n.rows())
        throw SizeMismatch("endomorphisms act on different spaces");
}

void require_commuting(const Matrix<Rat>& m, const Matrix<Rat>& n) {
    if (m * n != n * m)
        throw NotCommuting("endomorphisms do not commute");
}

// X = (M - sE)(N - sE) over Q(s)
Matrix<RatFun> shifted_product(const Matrix<Rat>& m, const Matrix<Rat>& n) {
    Matrix<SPoly> ms = to_spoly(m), ns = to_spoly(n);
    for (int i = 0; i < m.rows(); ++i) {
        ms.at(i, i) -= SPoly::var();
        ns.at(i, i) -= SPoly::var();
    }
    return to_ratfun(ms * ns);
}

// stacked bases -> projections of the direct-sum splitting
template <typename T>
std::vector<Matrix<T>> splitting_projections(const std::vector<Subspace<T>>& spaces, int dim) {
    int total = 0;
    for (const auto& s : spaces)
        total += s.dim();
    if (total != dim)
        throw FactorizationFailed("pair spaces do not fill the whole space");

    std::vector<Vec<T>> cols;
    cols.reserve(static_cast<std::size_t>(dim));
    for (const auto& s : spaces)
        for (const auto& v : s.basis())
            cols.push_back(v);
    const Matrix<T> b = Matrix<T>::from_columns(cols);
    auto binv = try_inverse(b);
    if (!binv)
        throw FactorizationFailed("pair spaces are not a direct sum");

    std::vector<Matrix<T>> projections;
    int offset = 0;
    for (const auto& s : spaces) {
        Matrix<T> selector(dim, dim);
        for (int k = 0; k < s.dim(); ++k)
            selector.at(offset + k, offset + k) = T(Rat(1));
        projections.push_back(b * selector * *binv);
        offset += s.dim();
    }
    return projections;
}

} // namespace

Subspace<Rat> pair_space(const Matrix<Rat>& m, const Matrix<Rat>& n, const Rat& lambda,
                         const Rat& mu) {
    require_same_square(m, n);
    const auto a = subspace_intersect(generalized_eigenspace<Rat>(m, lambda),
                                      generalized_eigenspace<Rat>(n, mu));
    const auto b = subspace_intersect(generalized_eigenspace<Rat>(m, mu),
                                      generalized_eigenspace<Rat>(n, lambda));
    return subspace_sum(a, b);
}

Subspace<Rat> product_sum_pair_space(const Matrix<Rat>& m, const Matrix<Rat>& n,
                                     const Rat& lambda, const Rat& mu) {
    require_same_square(m, n);
    require_commuting(m, n);
    return subspace_intersect(generalized_eigenspace<Rat>(m * n, lambda * mu),
                              generalized_eigenspace<Rat>(m + n, lambda + mu));
}

Subspace<RatFun> ratfun_pair_space(const Matrix<Rat>& m, const Matrix<Rat>& n,
                                   const Rat& lambda, const Rat& mu, int max_dim) {
    require_same_square(m, n);
    require_commuting(m, n);
    if (m.rows() > max_dim)
        throw RatFunDimLimit("dimension exceeds the Q(s) elimination guardrail");
    const SPoly q = SPoly({lambda, Rat(-1)}) * SPoly({mu, Rat(-1)});
    return generalized_eigenspace<RatFun>(shifted_product(m, n), RatFun(q));
}

PairDecomposition pair_decomposition(const Matrix<Rat>& m, const Matrix<Rat>& n) {
    require_same_square(m, n);
    require_commuting(m, n);
    const PairFactorization factors = peel_pair_factors(two_endo_charpoly(m, n));

    PairDecomposition dec;
    dec.pairs = factors.factors;
    for (const auto& f : factors.factors) {
        Subspace<Rat> space = pair_space(m, n, f.lambda, f.mu);
        if (space.dim() != f.multiplicity)
            throw FactorizationFailed("pair space dimension differs from factor multiplicity");
        dec.spaces.push_back(std::move(space));
    }
    dec.projections = splitting_projections(dec.spaces, m.rows());
    return dec;
}

std::vector<Matrix<RatFun>> ratfun_projections(const Matrix<Rat>& m, const Matrix<Rat>& n,
                                               int max_dim) {
    require_same_square(m, n);
    require_commuting(m, n);
    if (m.rows() > max_dim)
        throw RatFunDimLimit("dimension exceeds the Q(s) elimination guardrail");
    const PairFactorization factors = peel_pair_factors(two_endo_charpoly(m, n));

    const Matrix<RatFun> x = shifted_product(m, n);
    std::vector<Subspace<RatFun>> spaces;
    for (const auto& f : factors.factors) {
        const SPoly q = SPoly({f.lambda, Rat(-1)}) * SPoly({f.mu, Rat(-1)});
        spaces.push_back(generalized_eigenspace<RatFun>(x, RatFun(q)));
    }
    auto projections = splitting_projections(spaces, m.rows());
    for (const auto& p : projections)
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j)
                if (!p.at(i, j).is_constant())
                    throw Error("INTERNAL", "projection over Q(s) is not constant");
    return projections;
}

PairDecomposition sympl_pair_decomposition(const Matrix<Rat>& m, const SymplecticForm& form) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("decomposition needs the form dimension");
    if (!is_symplectically_normal(m, form))
        throw NotSymplecticallyNormal("endomorphism does not commute with its adjoint");
    const PairFactorization factors = factor_pairs(symplectic_charpoly(m, form));
    const Matrix<Rat> adj = adjoint(m, form);

    PairDecomposition dec;
    dec.pairs = factors.factors;
    for (const auto& f : factors.factors) {
        Subspace<Rat> space = pair_space(m, adj, f.lambda, f.mu);
        if (space.dim() != 2 * f.multiplicity)
            throw FactorizationFailed("pair space dimension differs from factor multiplicity");
        dec.spaces.push_back(std::move(space));
    }
    dec.projections = splitting_projections(dec.spaces, m.rows());
    return dec;
}

std::optional<Vec<Rat>> eigen_pair_witness(const Matrix<Rat>& m, const SymplecticForm& form,
                                           const Rat& lambda, const Rat& mu) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("witness search needs the form dimension");
    if (!is_symplectically_normal(m, form))
        throw NotSymplecticallyNormal("endomorphism does not commute with its adjoint");
    const auto common =
        subspace_intersect(eigenspace(m, lambda), eigenspace(adjoint(m, form), mu));
    if (common.is_zero())
        return std::nullopt;
    return common.basis_vector(0);
}

} // namespace scpoly
