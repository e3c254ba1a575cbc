#include <scpoly/symplectic.hpp>

#include <random>

namespace scpoly {

SymplecticForm::SymplecticForm(int dim, Matrix<Rat> gram) : dim_(dim), gram_(std::move(gram)) {
    if (dim_ <= 0 || dim_ % 2 != 0)
        throw DegenerateForm("symplectic form needs positive even dimension");
    if (gram_.rows() != dim_ || gram_.cols() != dim_)
        throw SizeMismatch("Gram matrix size differs from declared dimension");
    if (!is_alternating(gram_))
        throw DegenerateForm("Gram matrix is not alternating");
    auto inv = try_inverse(gram_);
    if (!inv)
        throw DegenerateForm("Gram matrix is singular");
    gram_inv_ = std::move(*inv);
}

Rat SymplecticForm::omega(const Vec<Rat>& v, const Vec<Rat>& w) const {
    if (static_cast<int>(v.size()) != dim_ || static_cast<int>(w.size()) != dim_)
        throw SizeMismatch("vector size differs from form dimension");
    const Vec<Rat> gw = gram_ * w;
    Rat acc;
    for (int i = 0; i < dim_; ++i)
        acc += v[static_cast<std::size_t>(i)] * gw[static_cast<std::size_t>(i)];
    return acc;
}

SymplecticForm standard_form(int n) {
    if (n < 1)
        throw DegenerateForm("standard form needs n >= 1");
    Matrix<Rat> gram(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        gram.at(i, n + i) = Rat(1);
        gram.at(n + i, i) = Rat(-1);
    }
    return SymplecticForm(2 * n, std::move(gram));
}

Matrix<Rat> SymplecticBasis::interleaved() const {
    const int half = n();
    Matrix<Rat> p(dim(), dim());
    for (int i = 0; i < half; ++i)
        for (int r = 0; r < dim(); ++r) {
            p.at(r, 2 * i) = v_.at(r, i);
            p.at(r, 2 * i + 1) = v_.at(r, half + i);
        }
    return p;
}

Matrix<Rat> adjoint(const Matrix<Rat>& m, const SymplecticForm& form) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("adjoint needs a square matrix of the form dimension");
    return form.gram_inverse() * m.transpose() * form.gram();
}

bool is_symplectic_map(const Matrix<Rat>& p, const SymplecticForm& form) {
    if (!p.is_square() || p.rows() != form.dim())
        throw SizeMismatch("symplectic-map test needs the form dimension");
    return p.transpose() * form.gram() * p == form.gram();
}

bool is_symplectically_normal(const Matrix<Rat>& m, const SymplecticForm& form) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("normality test needs the form dimension");
    const Matrix<Rat> adj = adjoint(m, form);
    return m * adj == adj * m;
}

SymplecticBasis symplectic_basis(const SymplecticForm& form) {
    const int dim = form.dim();
    std::vector<Vec<Rat>> comp = Matrix<Rat>::identity(dim).columns();
    std::vector<Vec<Rat>> es, fs;

    while (!comp.empty()) {
        const Vec<Rat> v = comp[0];
        int wi = -1;
        for (std::size_t j = 1; j < comp.size(); ++j)
            if (!form.omega(v, comp[j]).is_zero()) {
                wi = static_cast<int>(j);
                break;
            }
        if (wi < 0)
            throw DegenerateForm("restricted form is degenerate");
        // scale goes on the f-vector; e stays primitive
        const Rat scale = form.omega(v, comp[static_cast<std::size_t>(wi)]).inverse();
        Vec<Rat> w = comp[static_cast<std::size_t>(wi)];
        for (Rat& x : w)
            x *= scale;
        es.push_back(v);
        fs.push_back(w);

        // omega-complement of span{v, w} inside the current complement
        Matrix<Rat> constraints(2, static_cast<int>(comp.size()));
        for (std::size_t j = 0; j < comp.size(); ++j) {
            constraints.at(0, static_cast<int>(j)) = form.omega(v, comp[j]);
            constraints.at(1, static_cast<int>(j)) = form.omega(w, comp[j]);
        }
        std::vector<Vec<Rat>> next;
        const Subspace<Rat> ker = kernel_basis(constraints);
        for (const auto& coeffs : ker.basis()) {
            Vec<Rat> u(static_cast<std::size_t>(dim));
            for (std::size_t j = 0; j < comp.size(); ++j)
                for (int r = 0; r < dim; ++r)
                    u[static_cast<std::size_t>(r)] +=
                        coeffs[j] * comp[j][static_cast<std::size_t>(r)];
            next.push_back(std::move(u));
        }
        comp = std::move(next);
    }

    std::vector<Vec<Rat>> cols = std::move(es);
    for (auto& f : fs)
        cols.push_back(std::move(f));
    SymplecticBasis basis(Matrix<Rat>::from_columns(cols));
    const Matrix<Rat>& b = basis.vectors();
    if (b.transpose() * form.gram() * b != standard_form(form.n()).gram())
        throw DegenerateForm("constructed basis fails the symplectic pairing");
    return basis;
}

Subspace<Rat> perp(const Subspace<Rat>& w, const SymplecticForm& form) {
    if (w.ambient() != form.dim())
        throw SizeMismatch("subspace lives in a different dimension");
    if (w.is_zero())
        return full_space<Rat>(form.dim());
    Matrix<Rat> constraints(w.dim(), form.dim());
    for (int j = 0; j < w.dim(); ++j) {
        const Vec<Rat> gw = form.gram() * w.basis_vector(j);
        for (int i = 0; i < form.dim(); ++i)
            constraints.at(j, i) = gw[static_cast<std::size_t>(i)];
    }
    return kernel_basis(constraints);
}

const char* to_string(SubspaceKind k) {
    switch (k) {
    case SubspaceKind::symplectic: return "symplectic";
    case SubspaceKind::isotropic: return "isotropic";
    case SubspaceKind::coisotropic: return "coisotropic";
    case SubspaceKind::lagrangian: return "lagrangian";
    case SubspaceKind::generic: return "generic";
    }
    return "generic";
}

SubspaceKind classify_subspace(const Subspace<Rat>& w, const SymplecticForm& form) {
    const Subspace<Rat> p = perp(w, form);
    const bool isotropic = subspace_contains(p, w);
    const bool coisotropic = subspace_contains(w, p);
    if (isotropic && coisotropic)
        return SubspaceKind::lagrangian;
    if (subspace_intersect(w, p).dim() == 0)
        return SubspaceKind::symplectic;
    if (isotropic)
        return SubspaceKind::isotropic;
    if (coisotropic)
        return SubspaceKind::coisotropic;
    return SubspaceKind::generic;
}

SymplecticBasis lagrangian_complete(const Subspace<Rat>& l1, const Subspace<Rat>& l2,
                                    const SymplecticForm& form) {
    if (l1.ambient() != form.dim() || l2.ambient() != form.dim())
        throw SizeMismatch("subspaces live in a different dimension");
    if (classify_subspace(l1, form) != SubspaceKind::lagrangian ||
        classify_subspace(l2, form) != SubspaceKind::lagrangian)
        throw NotLagrangian("both subspaces must be Lagrangian");
    if (subspace_intersect(l1, l2).dim() != 0)
        throw NotTransverse("Lagrangian subspaces must intersect trivially");

    const int half = form.n();
    // pairing(i, j) = omega(e_i, b_j) over the basis of l2; the dual basis
    // realizes omega(e_i, f_j) = delta_ij
    Matrix<Rat> pairing(half, half);
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j)
            pairing.at(i, j) = form.omega(l1.basis_vector(i), l2.basis_vector(j));
    auto inv = try_inverse(pairing);
    if (!inv)
        throw NotTransverse("pairing between the Lagrangians is singular");
    const Matrix<Rat> f = l2.basis_matrix() * *inv;

    Matrix<Rat> cols(form.dim(), form.dim());
    for (int i = 0; i < form.dim(); ++i)
        for (int j = 0; j < half; ++j) {
            cols.at(i, j) = l1.basis_vector(j)[static_cast<std::size_t>(i)];
            cols.at(i, half + j) = f.at(i, j);
        }
    return SymplecticBasis(std::move(cols));
}

namespace {

template <typename T>
Matrix<T> omega_gram(const Matrix<T>& a, const Matrix<T>& interleaved, const Matrix<T>& gram) {
    return interleaved.transpose() * gram * a * interleaved;
}

} // namespace

Rat pf_omega(const Matrix<Rat>& a, const SymplecticBasis& basis, const SymplecticForm& form) {
    if (!a.is_square() || a.rows() != form.dim())
        throw SizeMismatch("pf_omega needs the form dimension");
    const Matrix<Rat> om = omega_gram(a, basis.interleaved(), form.gram());
    if (!is_alternating(om))
        throw NotSelfAdjoint("induced bilinear form is not alternating");
    return pfaffian_field(om);
}

TPoly pf_omega(const Matrix<TPoly>& a, const SymplecticBasis& basis, const SymplecticForm& form,
               int entry_deg_t) {
    if (!a.is_square() || a.rows() != form.dim())
        throw SizeMismatch("pf_omega needs the form dimension");
    auto lift = [](const Matrix<Rat>& m) {
        return m.map([](const Rat& x) { return TPoly(x); });
    };
    const Matrix<TPoly> om = omega_gram(a, lift(basis.interleaved()), lift(form.gram()));
    if (!is_alternating(om))
        throw NotSelfAdjoint("induced bilinear form is not alternating");
    return pfaffian_tpoly(om, entry_deg_t);
}

BiPoly pf_omega(const Matrix<BiPoly>& a, const SymplecticBasis& basis, const SymplecticForm& form,
                int entry_deg_s, int entry_deg_t) {
    if (!a.is_square() || a.rows() != form.dim())
        throw SizeMismatch("pf_omega needs the form dimension");
    auto lift = [](const Matrix<Rat>& m) {
        return m.map([](const Rat& x) { return BiPoly(x); });
    };
    const Matrix<BiPoly> om = omega_gram(a, lift(basis.interleaved()), lift(form.gram()));
    if (!is_alternating(om))
        throw NotSelfAdjoint("induced bilinear form is not alternating");
    return pfaffian_bipoly(om, entry_deg_s, entry_deg_t);
}

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Matrix<Rat> symmetric_small(std::mt19937_64& rng, int n) {
    Matrix<Rat> s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const Rat v(draw(rng, -3, 3));
            s.at(i, j) = v;
            s.at(j, i) = v;
        }
    return s;
}

Matrix<Rat> unimodular_small(std::mt19937_64& rng, int n) {
    Matrix<Rat> a = Matrix<Rat>::identity(n);
    if (n == 1)
        return a;
    for (int step = 0; step < n + 2; ++step) {
        const int i = draw(rng, 0, n - 1);
        int j = draw(rng, 0, n - 2);
        if (j >= i)
            ++j;
        int c = draw(rng, -3, 3);
        if (c == 0)
            c = 1;
        for (int k = 0; k < n; ++k)
            a.at(i, k) += Rat(c) * a.at(j, k);
    }
    return a;
}

} // namespace

Matrix<Rat> random_symplectic(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n) + 1);
    const int dim = 2 * n;
    Matrix<Rat> p = Matrix<Rat>::identity(dim);
    const int factors = 5;
    for (int f = 0; f < factors; ++f) {
        Matrix<Rat> g(dim, dim);
        switch (draw(rng, 0, 2)) {
        case 0: {
            const Matrix<Rat> s = symmetric_small(rng, n);
            g = Matrix<Rat>::identity(dim);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g.at(i, n + j) = s.at(i, j);
            break;
        }
        case 1: {
            const Matrix<Rat> s = symmetric_small(rng, n);
            g = Matrix<Rat>::identity(dim);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g.at(n + i, j) = s.at(i, j);
            break;
        }
        default: {
            const Matrix<Rat> a = unimodular_small(rng, n);
            const Matrix<Rat> ainv_t = inverse(a.transpose());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    g.at(i, j) = a.at(i, j);
                    g.at(n + i, n + j) = ainv_t.at(i, j);
                }
            break;
        }
        }
        p = p * g;
    }
    if (!is_symplectic_map(p, standard_form(n)))
        throw Error("INTERNAL", "generated matrix is not symplectic");
    return p;
}

} // namespace scpoly
