#include <scpoly/diagonalization.hpp>

namespace scpoly {

namespace {

// coordinates of a subspace of span(columns of b) in the column basis of b
Subspace<Rat> in_coordinates(const Subspace<Rat>& s, const Matrix<Rat>& b) {
    std::vector<Vec<Rat>> coords;
    for (const auto& v : s.basis()) {
        auto x = solve(b, v);
        if (!x)
            throw Error("INTERNAL", "subspace does not lie in the expected pair space");
        coords.push_back(std::move(*x));
    }
    return Subspace<Rat>(b.cols(), coords);
}

Matrix<Rat> expected_diagonal(const std::vector<std::pair<Rat, Rat>>& pairs) {
    const int n = static_cast<int>(pairs.size());
    Matrix<Rat> d(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        d.at(i, i) = pairs[static_cast<std::size_t>(i)].first;
        d.at(n + i, n + i) = pairs[static_cast<std::size_t>(i)].second;
    }
    return d;
}

SymplecticBasis assemble(const std::vector<Vec<Rat>>& es, const std::vector<Vec<Rat>>& fs) {
    std::vector<Vec<Rat>> cols = es;
    cols.insert(cols.end(), fs.begin(), fs.end());
    return SymplecticBasis(Matrix<Rat>::from_columns(cols));
}

void verify_diagonalization(const Matrix<Rat>& m, const SymplecticForm& form,
                            const SymplecticDiagonalization& d) {
    const Matrix<Rat>& p = d.basis.vectors();
    if (!is_symplectic_map(p, form) || inverse(p) * m * p != expected_diagonal(d.pairs))
        throw Error("INTERNAL", "diagonalization postcondition failed");
}

} // namespace

SymplecticDiagonalization symplectic_diagonalize(const Matrix<Rat>& m,
                                                 const SymplecticForm& form) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("diagonalization needs the form dimension");
    if (!is_symplectically_normal(m, form))
        throw NotSymplecticallyNormal("endomorphism does not commute with its adjoint");
    if (!is_diagonalizable(m))
        throw NotDiagonalizable("endomorphism is not diagonalizable");

    const PairDecomposition dec = sympl_pair_decomposition(m, form);
    const Matrix<Rat> adj = adjoint(m, form);

    std::vector<Vec<Rat>> es, fs;
    std::vector<std::pair<Rat, Rat>> pairs;
    for (std::size_t i = 0; i < dec.pairs.size(); ++i) {
        const Rat& lambda = dec.pairs[i].lambda;
        const Rat& mu = dec.pairs[i].mu;
        const int mult = dec.pairs[i].multiplicity;
        const Matrix<Rat> bw = dec.spaces[i].basis_matrix();
        const SymplecticForm restricted(2 * mult,
                                        bw.transpose() * form.gram() * bw);

        Matrix<Rat> local(2 * mult, 2 * mult);
        if (lambda == mu) {
            // the restricted endomorphism is the scalar lambda
            local = symplectic_basis(restricted).vectors();
        } else {
            const auto l1 = in_coordinates(
                subspace_intersect(eigenspace(m, lambda), eigenspace(adj, mu)), bw);
            const auto l2 = in_coordinates(
                subspace_intersect(eigenspace(m, mu), eigenspace(adj, lambda)), bw);
            local = lagrangian_complete(l1, l2, restricted).vectors();
        }

        const Matrix<Rat> global = bw * local;
        for (int k = 0; k < mult; ++k) {
            es.push_back(global.column(k));
            fs.push_back(global.column(mult + k));
            pairs.emplace_back(lambda, mu);
        }
    }

    SymplecticDiagonalization result{assemble(es, fs), std::move(pairs)};
    verify_diagonalization(m, form, result);
    return result;
}

std::pair<bool, std::optional<Matrix<Rat>>> symplectically_similar(const Matrix<Rat>& m,
                                                                   const Matrix<Rat>& n,
                                                                   const SymplecticForm& form) {
    for (const Matrix<Rat>* x : {&m, &n}) {
        if (!x->is_square() || x->rows() != form.dim())
            throw SizeMismatch("similarity test needs the form dimension");
        if (!is_symplectically_normal(*x, form) || !is_diagonalizable(*x))
            throw NotSymplecticallyDiagonalizable(
                "input is not symplectically diagonalizable");
    }
    if (symplectic_charpoly(m, form) != symplectic_charpoly(n, form))
        return {false, std::nullopt};

    const SymplecticDiagonalization dm = symplectic_diagonalize(m, form);
    const SymplecticDiagonalization dn = symplectic_diagonalize(n, form);
    const Matrix<Rat> witness = dm.basis.vectors() * inverse(dn.basis.vectors());
    if (!is_symplectic_map(witness, form) || inverse(witness) * m * witness != n)
        throw Error("INTERNAL", "similarity witness failed verification");
    return {true, witness};
}

NormalPairBasis normal_pair_basis(const Matrix<Rat>& m, const SymplecticForm& form) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("pair basis needs the form dimension");
    if (!is_symplectically_normal(m, form))
        throw NotSymplecticallyNormal("endomorphism does not commute with its adjoint");
    const PairFactorization factors = factor_pairs(symplectic_charpoly(m, form));
    for (const auto& f : factors.factors)
        if (f.multiplicity > 1)
            throw RepeatedPairFactor("pair factors are not pairwise distinct");

    const Matrix<Rat> adj = adjoint(m, form);
    std::vector<Vec<Rat>> es, fs;
    std::vector<std::pair<Rat, Rat>> pairs;
    for (const auto& f : factors.factors) {
        const Subspace<Rat> w = pair_space(m, adj, f.lambda, f.mu);
        if (w.dim() != 2)
            throw Error("INTERNAL", "pair space of a simple factor is not a plane");
        const Vec<Rat> e = w.basis_vector(0);
        Vec<Rat> g = w.basis_vector(1);
        const Rat c = form.omega(e, g);
        if (c.is_zero())
            throw Error("INTERNAL", "pair space is not symplectic");
        for (Rat& x : g)
            x /= c;
        es.push_back(e);
        fs.push_back(std::move(g));
        pairs.emplace_back(f.lambda, f.mu);
    }

    NormalPairBasis result{assemble(es, fs), std::move(pairs)};
    const Matrix<Rat>& p = result.basis.vectors();
    if (p.transpose() * form.gram() * p != standard_form(form.n()).gram())
        throw Error("INTERNAL", "pair basis is not symplectic");
    return result;
}

SymplecticDiagonalization distinct_pair_eigenbasis(const Matrix<Rat>& m,
                                                   const SymplecticForm& form) {
    if (!m.is_square() || m.rows() != form.dim())
        throw SizeMismatch("pair eigenbasis needs the form dimension");
    if (!is_symplectically_normal(m, form))
        throw NotSymplecticallyNormal("endomorphism does not commute with its adjoint");
    const PairFactorization factors = factor_pairs(symplectic_charpoly(m, form));
    for (const auto& f : factors.factors)
        if (f.multiplicity > 1)
            throw RepeatedPairFactor("pair factors are not pairwise distinct");
    for (const auto& f : factors.factors)
        if (f.lambda == f.mu)
            throw EqualPairValues("a pair has equal eigenvalues");

    const Matrix<Rat> adj = adjoint(m, form);
    std::vector<Vec<Rat>> es, fs;
    std::vector<std::pair<Rat, Rat>> pairs;
    for (const auto& f : factors.factors) {
        const auto e_line = subspace_intersect(eigenspace(m, f.lambda), eigenspace(adj, f.mu));
        const auto f_line = subspace_intersect(eigenspace(m, f.mu), eigenspace(adj, f.lambda));
        if (e_line.dim() != 1 || f_line.dim() != 1)
            throw Error("INTERNAL", "eigenvector intersection is not a line");
        const Vec<Rat> e = e_line.basis_vector(0);
        Vec<Rat> g = f_line.basis_vector(0);
        const Rat c = form.omega(e, g);
        if (c.is_zero())
            throw Error("INTERNAL", "pair eigenvectors pair to zero");
        for (Rat& x : g)
            x /= c;
        es.push_back(e);
        fs.push_back(std::move(g));
        pairs.emplace_back(f.lambda, f.mu);
    }

    SymplecticDiagonalization result{assemble(es, fs), std::move(pairs)};
    verify_diagonalization(m, form, result);
    return result;
}

} // namespace scpoly
