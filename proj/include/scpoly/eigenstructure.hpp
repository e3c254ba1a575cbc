#ifndef SCPOLY_EIGENSTRUCTURE_HPP
#define SCPOLY_EIGENSTRUCTURE_HPP

#include <optional>

#include <scpoly/scp.hpp>

namespace scpoly {

// Elimination over Q(s) is the expensive path; operations on it refuse
// dimensions above this bound unless the caller raises it explicitly.
inline constexpr int default_ratfun_dim_limit = 6;

// (gen(M,lambda) meet gen(N,mu)) + (gen(M,mu) meet gen(N,lambda))
Subspace<Rat> pair_space(const Matrix<Rat>& m, const Matrix<Rat>& n, const Rat& lambda,
                         const Rat& mu);

// gen(MN, lambda*mu) meet gen(M+N, lambda+mu); requires MN = NM. For
// commuting pairs this equals pair_space, which tests assert rather than
// assume.
Subspace<Rat> product_sum_pair_space(const Matrix<Rat>& m, const Matrix<Rat>& n,
                                     const Rat& lambda, const Rat& mu);

// Generalized eigenspace of (M - sE)(N - sE) over Q(s) at (lambda-s)(mu-s).
Subspace<RatFun> ratfun_pair_space(const Matrix<Rat>& m, const Matrix<Rat>& n,
                                   const Rat& lambda, const Rat& mu,
                                   int max_dim = default_ratfun_dim_limit);

// Direct-sum decomposition into pair eigenspaces together with the
// projections of the splitting.
struct PairDecomposition {
    std::vector<PairFactor> pairs;
    std::vector<Subspace<Rat>> spaces;
    std::vector<Matrix<Rat>> projections;
};

// Decomposition of the whole space into the pair spaces of a commuting pair
// whose two-endomorphism charpoly splits into rational pair factors.
PairDecomposition pair_decomposition(const Matrix<Rat>& m, const Matrix<Rat>& n);

// The projections of the corresponding splitting over Q(s); entrywise they
// are constant and agree with the rational projections, which is checked
// when the constants are extracted.
std::vector<Matrix<RatFun>> ratfun_projections(const Matrix<Rat>& m, const Matrix<Rat>& n,
                                               int max_dim = default_ratfun_dim_limit);

// Symplectically orthogonal decomposition of a symplectically normal
// endomorphism into the pair spaces of (M, M^adj), one per factor of chi.
PairDecomposition sympl_pair_decomposition(const Matrix<Rat>& m, const SymplecticForm& form);

// A nonzero vector of E_M(lambda) meet E_{M^adj}(mu) when it exists.
std::optional<Vec<Rat>> eigen_pair_witness(const Matrix<Rat>& m, const SymplecticForm& form,
                                           const Rat& lambda, const Rat& mu);

// Coordinates of the columns of M restricted to an invariant subspace, or
// nothing when the subspace is not invariant.
template <typename T>
std::optional<Matrix<T>> try_restrict(const Matrix<T>& m, const Subspace<T>& w) {
    if (w.ambient() != m.rows() || !m.is_square())
        throw SizeMismatch("restriction needs a square matrix of the ambient dimension");
    if (w.is_zero())
        return Matrix<T>(0, 0);
    const Matrix<T> b = w.basis_matrix();
    Matrix<T> r(w.dim(), w.dim());
    for (int j = 0; j < w.dim(); ++j) {
        auto x = solve(b, m * w.basis_vector(j));
        if (!x)
            return std::nullopt;
        for (int i = 0; i < w.dim(); ++i)
            r.at(i, j) = (*x)[static_cast<std::size_t>(i)];
    }
    return r;
}

} // namespace scpoly

#endif // SCPOLY_EIGENSTRUCTURE_HPP
