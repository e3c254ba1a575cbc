#ifndef SCPOLY_MATRIX_HPP
#define SCPOLY_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include <scpoly/bipoly.hpp>
#include <scpoly/errors.hpp>
#include <scpoly/ratfun.hpp>
#include <scpoly/rational.hpp>
#include <scpoly/upoly.hpp>

namespace scpoly {

template <typename T>
using Vec = std::vector<T>;

// Dense row-major matrix over one scalar kind of the tower
// (Rat, SPoly, BiPoly or RatFun). The scalar kind is the template argument,
// so mixed-kind arithmetic is rejected at compile time.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = T(Rat(1));
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<T>>& rows) {
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols())
                throw SizeMismatch("rows of unequal length");
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec<T>>& cols) {
        Matrix m(static_cast<int>(cols.at(0).size()), static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols(); ++j) {
            if (static_cast<int>(cols[static_cast<std::size_t>(j)].size()) != m.rows())
                throw SizeMismatch("columns of unequal length");
            for (int i = 0; i < m.rows(); ++i)
                m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec<T> row(int i) const {
        Vec<T> r(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j)
            r[static_cast<std::size_t>(j)] = at(i, j);
        return r;
    }
    Vec<T> column(int j) const {
        Vec<T> c(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i)
            c[static_cast<std::size_t>(i)] = at(i, j);
        return c;
    }
    std::vector<Vec<T>> columns() const {
        std::vector<Vec<T>> cs;
        cs.reserve(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j)
            cs.push_back(column(j));
        return cs;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m.at(j, i) = at(i, j);
        return m;
    }

    T trace() const {
        T acc{};
        for (int i = 0; i < rows_; ++i)
            acc = acc + at(i, i);
        return acc;
    }

    bool is_zero() const {
        for (const T& x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Matrix operator-() const {
        Matrix m(*this);
        for (T& x : m.e_)
            x = -x;
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m(a);
        for (std::size_t i = 0; i < m.e_.size(); ++i)
            m.e_[i] = m.e_[i] + b.e_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m(a);
        for (std::size_t i = 0; i < m.e_.size(); ++i)
            m.e_[i] = m.e_[i] - b.e_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw SizeMismatch("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + aik * b.at(k, j);
            }
        return m;
    }
    friend Matrix operator*(const Matrix& a, const T& k) {
        Matrix m(a);
        for (T& x : m.e_)
            x = x * k;
        return m;
    }
    friend Matrix operator*(const T& k, const Matrix& a) { return a * k; }

    friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
        if (a.cols_ != static_cast<int>(v.size()))
            throw SizeMismatch("matrix-vector shape mismatch");
        Vec<T> r(static_cast<std::size_t>(a.rows_));
        for (int i = 0; i < a.rows_; ++i) {
            T acc{};
            for (int j = 0; j < a.cols_; ++j)
                acc = acc + a.at(i, j) * v[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)] = acc;
        }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(int k) const {
        require_square(*this);
        Matrix r = identity(rows_);
        for (int i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }

    template <typename F>
    auto map(F f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m.at(i, j) = f(at(i, j));
        return m;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw SizeMismatch("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> e_;
};

template <typename T>
void require_square(const Matrix<T>& m) {
    if (!m.is_square())
        throw NotSquare("matrix is not square");
}

inline Matrix<SPoly> to_spoly(const Matrix<Rat>& m) {
    return m.map([](const Rat& x) { return SPoly(x); });
}
inline Matrix<RatFun> to_ratfun(const Matrix<Rat>& m) {
    return m.map([](const Rat& x) { return RatFun(x); });
}
inline Matrix<RatFun> to_ratfun(const Matrix<SPoly>& m) {
    return m.map([](const SPoly& x) { return RatFun(x); });
}
inline Matrix<BiPoly> to_bipoly(const Matrix<Rat>& m) {
    return m.map([](const Rat& x) { return BiPoly(x); });
}
inline Matrix<BiPoly> to_bipoly(const Matrix<SPoly>& m) {
    return m.map([](const SPoly& x) { return BiPoly(x); });
}

// --- elimination over a field scalar (Rat or RatFun) ---------------------

// Reduced row echelon form with deterministic pivoting: columns are scanned
// in order and the first nonzero entry at or below the working row pivots.
template <typename T>
struct Echelon {
    Matrix<T> mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

template <typename T>
Echelon<T> rref(Matrix<T> m) {
    Echelon<T> e;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        const T inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            const T f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    e.mat = std::move(m);
    return e;
}

template <typename T>
int rank(const Matrix<T>& m) {
    return rref(m).rank;
}

// Exact determinant by pivoted elimination with sign tracking.
template <typename T>
T det(Matrix<T> m) {
    require_square(m);
    const int n = m.rows();
    T result{T(Rat(1))};
    bool negate = false;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            return T{};
        if (piv != c) {
            negate = !negate;
            for (int j = 0; j < n; ++j)
                std::swap(m.at(piv, j), m.at(c, j));
        }
        const T& p = m.at(c, c);
        result = result * p;
        const T inv = p.inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero())
                continue;
            const T f = m.at(i, c) * inv;
            for (int j = c; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
    }
    return negate ? -result : result;
}

template <typename T>
std::optional<Matrix<T>> try_inverse(const Matrix<T>& m) {
    require_square(m);
    const int n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = T(Rat(1));
    }
    auto e = rref(std::move(aug));
    // invertible iff every pivot lands in the left block
    if (static_cast<int>(e.pivot_cols.size()) < n || e.pivot_cols[static_cast<std::size_t>(n) - 1] != n - 1)
        return std::nullopt;
    Matrix<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = e.mat.at(i, n + j);
    return inv;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    auto inv = try_inverse(m);
    if (!inv)
        throw Error("SINGULAR_MATRIX", "matrix is not invertible");
    return *inv;
}

// One solution of A x = b, if the system is consistent.
template <typename T>
std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw SizeMismatch("solve: right-hand side size mismatch");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    auto e = rref(std::move(aug));
    for (int p : e.pivot_cols)
        if (p == a.cols())
            return std::nullopt; // inconsistent
    Vec<T> x(static_cast<std::size_t>(a.cols()));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[static_cast<std::size_t>(e.pivot_cols[r])] = e.mat.at(static_cast<int>(r), a.cols());
    return x;
}

// --- subspaces ------------------------------------------------------------

// Subspace of a coordinate space, stored with its unique reduced-echelon
// basis so equal subspaces compare equal and outputs are reproducible.
template <typename T>
class Subspace {
public:
    Subspace() = default;
    Subspace(int ambient, const std::vector<Vec<T>>& spanning)
        : ambient_(ambient) {
        if (spanning.empty())
            return;
        Matrix<T> rows = Matrix<T>::from_rows(spanning);
        if (rows.cols() != ambient)
            throw SizeMismatch("subspace vector length differs from ambient dimension");
        auto e = rref(std::move(rows));
        for (int i = 0; i < e.rank; ++i)
            basis_.push_back(e.mat.row(i));
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }

    const std::vector<Vec<T>>& basis() const { return basis_; }
    const Vec<T>& basis_vector(int i) const { return basis_[static_cast<std::size_t>(i)]; }

    // ambient x dim matrix of basis columns; requires dim >= 1
    Matrix<T> basis_matrix() const { return Matrix<T>::from_columns(basis_); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int ambient_ = 0;
    std::vector<Vec<T>> basis_;
};

template <typename T>
Subspace<T> kernel_basis(const Matrix<T>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : e.pivot_cols)
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec<T>> vectors;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)])
            continue;
        Vec<T> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(c)] = T(Rat(1));
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[static_cast<std::size_t>(e.pivot_cols[r])] = -e.mat.at(static_cast<int>(r), c);
        vectors.push_back(std::move(v));
    }
    return Subspace<T>(m.cols(), vectors);
}

template <typename T>
Subspace<T> column_space(const Matrix<T>& m) {
    return Subspace<T>(m.rows(), m.columns());
}

template <typename T>
Subspace<T> zero_subspace(int ambient) {
    return Subspace<T>(ambient, {});
}

template <typename T>
Subspace<T> full_space(int ambient) {
    return column_space(Matrix<T>::identity(ambient));
}

template <typename T>
Subspace<T> subspace_sum(const Subspace<T>& a, const Subspace<T>& b) {
    if (a.ambient() != b.ambient())
        throw SizeMismatch("subspace sum in different ambient spaces");
    std::vector<Vec<T>> all = a.basis();
    for (const auto& v : b.basis())
        all.push_back(v);
    return Subspace<T>(a.ambient(), all);
}

// span(A) meet span(B) via the kernel of [A | -B].
template <typename T>
Subspace<T> subspace_intersect(const Subspace<T>& a, const Subspace<T>& b) {
    if (a.ambient() != b.ambient())
        throw SizeMismatch("subspace intersection in different ambient spaces");
    if (a.is_zero() || b.is_zero())
        return zero_subspace<T>(a.ambient());
    Matrix<T> stacked(a.ambient(), a.dim() + b.dim());
    for (int j = 0; j < a.dim(); ++j)
        for (int i = 0; i < a.ambient(); ++i)
            stacked.at(i, j) = a.basis_vector(j)[static_cast<std::size_t>(i)];
    for (int j = 0; j < b.dim(); ++j)
        for (int i = 0; i < a.ambient(); ++i)
            stacked.at(i, a.dim() + j) = -b.basis_vector(j)[static_cast<std::size_t>(i)];
    auto ker = kernel_basis(stacked);
    std::vector<Vec<T>> vectors;
    for (const auto& k : ker.basis()) {
        Vec<T> v(static_cast<std::size_t>(a.ambient()));
        for (int j = 0; j < a.dim(); ++j)
            for (int i = 0; i < a.ambient(); ++i)
                v[static_cast<std::size_t>(i)] =
                    v[static_cast<std::size_t>(i)] +
                    k[static_cast<std::size_t>(j)] * a.basis_vector(j)[static_cast<std::size_t>(i)];
        vectors.push_back(std::move(v));
    }
    return Subspace<T>(a.ambient(), vectors);
}

template <typename T>
bool subspace_contains(const Subspace<T>& s, const Vec<T>& v) {
    std::vector<Vec<T>> all = s.basis();
    all.push_back(v);
    return Subspace<T>(s.ambient(), all).dim() == s.dim();
}

template <typename T>
bool subspace_contains(const Subspace<T>& outer, const Subspace<T>& inner) {
    return subspace_sum(outer, inner).dim() == outer.dim();
}

// --- matrix_core operations ------------------------------------------------

// phi_M(t) = det(M - tE); phi(0) = det M and the leading coefficient is
// (-1)^dim. Computed by evaluation at dim+1 integer points and interpolation,
// which keeps everything in plain rational determinants.
inline TPoly charpoly(const Matrix<Rat>& m) {
    require_square(m);
    const int n = m.rows();
    std::vector<Rat> nodes = integer_nodes(n + 1);
    std::vector<Rat> values;
    values.reserve(nodes.size());
    for (const Rat& c : nodes) {
        Matrix<Rat> shifted = m;
        for (int i = 0; i < n; ++i)
            shifted.at(i, i) = shifted.at(i, i) - c;
        values.push_back(det(shifted));
    }
    return upoly_interpolate<Var::t>(nodes, values);
}

template <typename T>
Subspace<T> eigenspace(const Matrix<T>& m, const T& lambda) {
    require_square(m);
    Matrix<T> shifted = m;
    for (int i = 0; i < m.rows(); ++i)
        shifted.at(i, i) = shifted.at(i, i) - lambda;
    return kernel_basis(shifted);
}

// kernel of (M - qE)^dim; the exponent is fixed at the ambient dimension
template <typename T>
Subspace<T> generalized_eigenspace(const Matrix<T>& m, const T& q) {
    require_square(m);
    Matrix<T> shifted = m;
    for (int i = 0; i < m.rows(); ++i)
        shifted.at(i, i) = shifted.at(i, i) - q;
    return kernel_basis(shifted.pow(m.rows()));
}

// Horner evaluation of p at a square matrix (t -> M).
template <Var V, typename T>
Matrix<T> apply_poly(const UPoly<V>& p, const Matrix<T>& m) {
    require_square(m);
    Matrix<T> acc(m.rows(), m.rows());
    const Matrix<T> id = Matrix<T>::identity(m.rows());
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * m + id * T(p.coeff(k));
    return acc;
}

// Substitution t -> M for a bivariate polynomial whose s-variable lives in
// the entries of M.
inline Matrix<SPoly> apply_poly(const BiPoly& p, const Matrix<SPoly>& m) {
    require_square(m);
    Matrix<SPoly> acc(m.rows(), m.rows());
    const Matrix<SPoly> id = Matrix<SPoly>::identity(m.rows());
    for (int k = p.deg_t(); k >= 0; --k)
        acc = acc * m + id * p.tcoeff(k);
    return acc;
}

// True iff the characteristic polynomial splits over Q and the eigenspace
// dimensions fill the whole space. A non-split spectrum is not decided.
bool is_diagonalizable(const Matrix<Rat>& m);

// phi_{(M-sE)(N-sE)}(t) as a bivariate polynomial, by determinant evaluation
// on an integer grid and 2d interpolation with bounds (2n, n).
BiPoly two_endo_charpoly(const Matrix<Rat>& m, const Matrix<Rat>& n);

} // namespace scpoly

#endif // SCPOLY_MATRIX_HPP
