#ifndef SCPOLY_SCP_HPP
#define SCPOLY_SCP_HPP

#include <vector>

#include <scpoly/symplectic.hpp>

namespace scpoly {

// The symplectic characteristic polynomial chi(s,t) of an endomorphism of a
// 2n-dimensional symplectic space: deg_t = n and the t^n coefficient is the
// constant (-1)^n.
struct SymplecticCharPoly {
    BiPoly value;
    int n = 0;

    friend bool operator==(const SymplecticCharPoly& a, const SymplecticCharPoly& b) {
        return a.n == b.n && a.value == b.value;
    }
    friend bool operator!=(const SymplecticCharPoly& a, const SymplecticCharPoly& b) {
        return !(a == b);
    }
};

// (lambda - s)(mu - s) - t
BiPoly pair_factor_poly(const Rat& lambda, const Rat& mu);

// Multiset of unordered eigenvalue pairs, each stored with lambda <= mu and
// listed in ascending lexicographic order; the product of the pair factors
// reconstructs the source polynomial exactly.
struct PairFactor {
    Rat lambda;
    Rat mu;
    int multiplicity = 0;
};

struct PairFactorization {
    std::vector<PairFactor> factors;

    int total_multiplicity() const {
        int m = 0;
        for (const auto& f : factors)
            m += f.multiplicity;
        return m;
    }
    BiPoly product() const;
};

// Pfaffian characteristic polynomial of a self-adjoint endomorphism:
// Pf of the Gram of (v,w) -> omega(v, (A - tE)w), with psi^2 = phi_A and
// psi(0) = pf_omega(A).
TPoly pfaffian_charpoly(const Matrix<Rat>& a, const SymplecticForm& form);

// chi(s,t): Pf of the interleaved Gram of the pullback of omega by (M - sE)
// minus t omega, via evaluation-interpolation with entry bounds (2, 1).
// chi(s,0) is the characteristic polynomial of M and chi(0,t) is the
// Pfaffian charpoly of M M^adj.
SymplecticCharPoly symplectic_charpoly(const Matrix<Rat>& m, const SymplecticForm& form);

// Shared factor peeling: candidates come from the rational roots of F(s,0),
// and each candidate pair factor is certified by exact division. Greedy
// peeling in canonical pair order is safe because Q[s,t] is a UFD and the
// pair factors are irreducible.
PairFactorization peel_pair_factors(const BiPoly& f);

PairFactorization factor_pairs(const SymplecticCharPoly& chi);

// Relations M^adj = M, M^adj = -M and M^adj = M^{-1}.
enum class AdjointRelation { self_adjoint, anti_self_adjoint, symplectic };

// Closed form for chi^2 when M satisfies the declared relation:
//   self-adjoint:      phi_M(s-u) phi_M(s+u) with u^2 -> t,
//   anti-self-adjoint: phi_{M^2}(s^2 - t),
//   symplectic:        sum_k c_k (s^2 - t + 1)^k s^{2n-k}
//                      where phi_{M + M^{-1}}(x) = sum_k c_k x^k.
BiPoly special_square(const Matrix<Rat>& m, const SymplecticForm& form, AdjointRelation kind);

} // namespace scpoly

#endif // SCPOLY_SCP_HPP
