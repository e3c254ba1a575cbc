#ifndef SCPOLY_TESTS_SUPPORT_HPP
#define SCPOLY_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <scpoly/matrix.hpp>

namespace scpoly::testing {

// Deterministic generator; every suite fixes its seeds so failures replay.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}

    int i(int lo, int hi) { return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Rat rat(int bound = 9) { return Rat(i(-bound, bound)); }

    Rat rat_frac(int bound = 9, int den_bound = 3) {
        return Rat(i(-bound, bound), i(1, den_bound));
    }
};

inline Rat q(long num, long den = 1) { return Rat(num, den); }

inline Matrix<Rat> mrat(const std::vector<std::vector<long>>& rows) {
    Matrix<Rat> m(static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = Rat(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

inline Matrix<Rat> diag(const std::vector<Rat>& d) {
    Matrix<Rat> m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

inline Subspace<Rat> span(int ambient, const std::vector<std::vector<long>>& vectors) {
    std::vector<Vec<Rat>> vs;
    for (const auto& v : vectors) {
        Vec<Rat> w;
        for (long x : v)
            w.emplace_back(x);
        vs.push_back(std::move(w));
    }
    return Subspace<Rat>(ambient, vs);
}

inline Matrix<Rat> random_matrix(Rng& rng, int n, int bound = 9, bool fractions = false) {
    Matrix<Rat> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = fractions ? rng.rat_frac(bound) : rng.rat(bound);
    return m;
}

inline Matrix<Rat> random_alternating(Rng& rng, int size, int bound = 9) {
    Matrix<Rat> a(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            a.at(i, j) = rng.rat(bound);
            a.at(j, i) = -a.at(i, j);
        }
    return a;
}

inline Matrix<Rat> random_unimodular(Rng& rng, int n) {
    Matrix<Rat> a = Matrix<Rat>::identity(n);
    if (n == 1)
        return a;
    for (int step = 0; step < 2 * n; ++step) {
        const int i = rng.i(0, n - 1);
        int j = rng.i(0, n - 2);
        if (j >= i)
            ++j;
        int c = rng.i(-2, 2);
        if (c == 0)
            c = 1;
        for (int k = 0; k < n; ++k)
            a.at(i, k) += Rat(c) * a.at(j, k);
    }
    return a;
}

// Recursive cofactor expansion along the first row: the independent Pfaffian
// oracle for small sizes.
inline Rat pfaffian_oracle(const Matrix<Rat>& a) {
    const int m = a.rows();
    if (m == 0)
        return Rat(1);
    Rat acc;
    for (int j = 1; j < m; ++j) {
        if (a.at(0, j).is_zero())
            continue;
        Matrix<Rat> sub(m - 2, m - 2);
        int ri = 0;
        for (int r = 1; r < m; ++r) {
            if (r == j)
                continue;
            int ci = 0;
            for (int c = 1; c < m; ++c) {
                if (c == j)
                    continue;
                sub.at(ri, ci) = a.at(r, c);
                ++ci;
            }
            ++ri;
        }
        const Rat term = a.at(0, j) * pfaffian_oracle(sub);
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

// Laplace expansion determinant oracle.
inline Rat det_oracle(const Matrix<Rat>& a) {
    const int n = a.rows();
    if (n == 1)
        return a.at(0, 0);
    Rat acc;
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j).is_zero())
            continue;
        Matrix<Rat> sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int ci = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                sub.at(r - 1, ci) = a.at(r, c);
                ++ci;
            }
        }
        const Rat term = a.at(0, j) * det_oracle(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace scpoly::testing

#endif // SCPOLY_TESTS_SUPPORT_HPP
