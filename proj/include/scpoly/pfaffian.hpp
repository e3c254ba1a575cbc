#ifndef SCPOLY_PFAFFIAN_HPP
#define SCPOLY_PFAFFIAN_HPP

#include <scpoly/matrix.hpp>

namespace scpoly {

// Alternating means skew-symmetric with zero diagonal; over Q the diagonal
// condition is implied, but it is checked so corrupted inputs fail loudly.
template <typename T>
bool is_alternating(const Matrix<T>& a) {
    if (!a.is_square())
        return false;
    for (int i = 0; i < a.rows(); ++i) {
        if (!a.at(i, i).is_zero())
            return false;
        for (int j = i + 1; j < a.cols(); ++j)
            if (a.at(i, j) != -a.at(j, i))
                return false;
    }
    return true;
}

template <typename T>
void require_alternating_even(const Matrix<T>& a) {
    require_square(a);
    if (a.rows() % 2 != 0)
        throw OddSize("alternating matrix of odd size has no Pfaffian");
    if (!is_alternating(a))
        throw NotAlternating("matrix is not alternating");
}

// Pfaffian by skew-symmetric elimination: simultaneous row/column updates
// keep the matrix alternating, each swap flips the tracked sign, and the
// Pfaffian is the signed product of the 2x2 block pivots. Pf(A)^2 = det(A).
template <typename T>
T pfaffian_field(Matrix<T> a) {
    require_alternating_even(a);
    const int m = a.rows();
    T result{T(Rat(1))};
    bool negate = false;
    for (int k = 0; k < m; k += 2) {
        int jp = -1;
        for (int j = k + 1; j < m; ++j)
            if (!a.at(k, j).is_zero()) {
                jp = j;
                break;
            }
        if (jp < 0)
            return T{}; // degenerate: zero Pfaffian
        if (jp != k + 1) {
            negate = !negate;
            for (int j = 0; j < m; ++j)
                std::swap(a.at(jp, j), a.at(k + 1, j));
            for (int i = 0; i < m; ++i)
                std::swap(a.at(i, jp), a.at(i, k + 1));
        }
        const T piv = a.at(k, k + 1);
        result = result * piv;
        const T inv = piv.inverse();
        for (int i = k + 2; i < m; ++i) {
            const T c1 = a.at(k, i) * inv;     // clears column i against row k+1
            const T c2 = a.at(k + 1, i) * inv; // clears column i against row k
            if (!c1.is_zero())
                for (int j = 0; j < m; ++j)
                    a.at(i, j) = a.at(i, j) - c1 * a.at(k + 1, j);
            if (!c2.is_zero())
                for (int j = 0; j < m; ++j)
                    a.at(i, j) = a.at(i, j) + c2 * a.at(k, j);
            if (!c1.is_zero())
                for (int j = 0; j < m; ++j)
                    a.at(j, i) = a.at(j, i) - c1 * a.at(j, k + 1);
            if (!c2.is_zero())
                for (int j = 0; j < m; ++j)
                    a.at(j, i) = a.at(j, i) + c2 * a.at(j, k);
        }
    }
    return negate ? -result : result;
}

// Pfaffian of a matrix over Q[t] with per-entry t-degree at most entry_deg_t,
// by evaluation at integer nodes and interpolation. The Pfaffian of a 2n x 2n
// matrix is a sum of n-fold entry products, so its degree is at most
// n * entry_deg_t.
TPoly pfaffian_tpoly(const Matrix<TPoly>& a, int entry_deg_t);

// Same over Q[s,t] with per-entry degree bounds (entry_deg_s, entry_deg_t).
BiPoly pfaffian_bipoly(const Matrix<BiPoly>& a, int entry_deg_s, int entry_deg_t);

} // namespace scpoly

#endif // SCPOLY_PFAFFIAN_HPP
