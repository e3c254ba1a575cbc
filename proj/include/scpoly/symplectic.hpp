#ifndef SCPOLY_SYMPLECTIC_HPP
#define SCPOLY_SYMPLECTIC_HPP

#include <cstdint>

#include <scpoly/matrix.hpp>
#include <scpoly/pfaffian.hpp>

namespace scpoly {

// Nondegenerate alternating form on a 2n-dimensional rational space, given by
// its Gram matrix in the working coordinates. The default everywhere is the
// standard block form [[0, E], [-E, 0]].
class SymplecticForm {
public:
    SymplecticForm(int dim, Matrix<Rat> gram);

    int dim() const { return dim_; }
    int n() const { return dim_ / 2; }
    const Matrix<Rat>& gram() const { return gram_; }
    const Matrix<Rat>& gram_inverse() const { return gram_inv_; }

    Rat omega(const Vec<Rat>& v, const Vec<Rat>& w) const;

private:
    int dim_;
    Matrix<Rat> gram_;
    Matrix<Rat> gram_inv_;
};

SymplecticForm standard_form(int n);

// Columns (e_1..e_n, f_1..f_n) with omega(e_i, f_j) = delta_ij and all other
// pairings zero, for the form the basis was built against.
class SymplecticBasis {
public:
    explicit SymplecticBasis(Matrix<Rat> vectors) : v_(std::move(vectors)) {}

    int dim() const { return v_.rows(); }
    int n() const { return dim() / 2; }
    const Matrix<Rat>& vectors() const { return v_; }
    Vec<Rat> e(int i) const { return v_.column(i); }
    Vec<Rat> f(int i) const { return v_.column(n() + i); }

    // column order (e_1, f_1, e_2, f_2, ...)
    Matrix<Rat> interleaved() const;

private:
    Matrix<Rat> v_;
};

// gram^{-1} M^T gram; the unique map with omega(Mv, w) = omega(v, M^adj w).
Matrix<Rat> adjoint(const Matrix<Rat>& m, const SymplecticForm& form);

bool is_symplectic_map(const Matrix<Rat>& p, const SymplecticForm& form);
bool is_symplectically_normal(const Matrix<Rat>& m, const SymplecticForm& form);

// Constructive symplectic basis: pick v, pick w with omega(v, w) = 1 after
// rescaling w, then recurse on the omega-complement of span{v, w}.
SymplecticBasis symplectic_basis(const SymplecticForm& form);

Subspace<Rat> perp(const Subspace<Rat>& w, const SymplecticForm& form);

enum class SubspaceKind { symplectic, isotropic, coisotropic, lagrangian, generic };

const char* to_string(SubspaceKind k);

// Lagrangian wins over isotropic/coisotropic; symplectic is decided by
// W meet W-perp = 0 (so the zero and full subspaces report symplectic).
SubspaceKind classify_subspace(const Subspace<Rat>& w, const SymplecticForm& form);

// Given transverse Lagrangians and the stored basis (e_1..e_n) of l1, find
// f_1..f_n in l2 completing it to a symplectic basis.
SymplecticBasis lagrangian_complete(const Subspace<Rat>& l1, const Subspace<Rat>& l2,
                                    const SymplecticForm& form);

// Pf of the Gram of (v, w) -> omega(v, Aw) in the interleaved ordering
// (e_1, f_1, ..., e_n, f_n). The interleaving is applied internally so that
// pf_omega of the form itself is 1; this is the single sign convention of
// the library. Requires A self-adjoint.
Rat pf_omega(const Matrix<Rat>& a, const SymplecticBasis& basis, const SymplecticForm& form);
TPoly pf_omega(const Matrix<TPoly>& a, const SymplecticBasis& basis, const SymplecticForm& form,
               int entry_deg_t);
BiPoly pf_omega(const Matrix<BiPoly>& a, const SymplecticBasis& basis, const SymplecticForm& form,
                int entry_deg_s, int entry_deg_t);

// Deterministic product of the standard generators [[E,S],[0,E]],
// [[E,0],[S,E]] (S symmetric, entries in [-3,3]) and [[A,0],[0,(A^T)^{-1}]]
// (A unimodular); always passes is_symplectic_map for the standard form.
Matrix<Rat> random_symplectic(int n, std::uint64_t seed);

} // namespace scpoly

#endif // SCPOLY_SYMPLECTIC_HPP
