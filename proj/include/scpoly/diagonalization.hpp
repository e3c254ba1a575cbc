#ifndef SCPOLY_DIAGONALIZATION_HPP
#define SCPOLY_DIAGONALIZATION_HPP

#include <optional>
#include <utility>

#include <scpoly/eigenstructure.hpp>

namespace scpoly {

// Change of basis P (columns e_1..e_n, f_1..f_n) that is a symplectic map
// for the working form, together with the eigenvalue pairs: P^{-1} M P =
// diag(lambda_1..lambda_n, mu_1..mu_n).
struct SymplecticDiagonalization {
    SymplecticBasis basis;
    std::vector<std::pair<Rat, Rat>> pairs;
};

// Pair basis for a symplectically normal endomorphism with n distinct pair
// factors; M itself need not be diagonalizable. M M^adj and M + M^adj act as
// the scalars lambda_i mu_i and lambda_i + mu_i on e_i and f_i.
struct NormalPairBasis {
    SymplecticBasis basis;
    std::vector<std::pair<Rat, Rat>> pairs;
};

// Constructive symplectic diagonalization of a symplectically normal,
// diagonalizable endomorphism. Within each pair space the two eigenvector
// intersections are transverse Lagrangians completed to a symplectic basis;
// equal pairs reduce to a scalar block that any symplectic basis of the
// restricted form diagonalizes.
SymplecticDiagonalization symplectic_diagonalize(const Matrix<Rat>& m,
                                                 const SymplecticForm& form);

// Decides symplectic similarity of symplectically diagonalizable
// endomorphisms: the verdict is equality of the two symplectic
// characteristic polynomials, and a positive verdict comes with a verified
// witness P (symplectic, P^{-1} M P = N) composed from the two
// diagonalizing bases.
std::pair<bool, std::optional<Matrix<Rat>>> symplectically_similar(const Matrix<Rat>& m,
                                                                   const Matrix<Rat>& n,
                                                                   const SymplecticForm& form);

NormalPairBasis normal_pair_basis(const Matrix<Rat>& m, const SymplecticForm& form);

// Under the extra hypothesis lambda_i != mu_i for all i, the pair basis can
// be taken from the one-dimensional eigenvector intersections, giving
// M e_i = lambda_i e_i, M^adj e_i = mu_i e_i and the mirrored relations
// on f_i.
SymplecticDiagonalization distinct_pair_eigenbasis(const Matrix<Rat>& m,
                                                   const SymplecticForm& form);

} // namespace scpoly

#endif // SCPOLY_DIAGONALIZATION_HPP
