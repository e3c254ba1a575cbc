#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <scpoly/symplectic.hpp>

#include "support.hpp"

using namespace scpoly;
using namespace scpoly::testing;

TEST_CASE("standard form") {
    CHECK(standard_form(1).gram() == mrat({{0, 1}, {-1, 0}}));
    CHECK(standard_form(2).gram() ==
          mrat({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
    CHECK_THROWS_AS(standard_form(0), DegenerateForm);
    CHECK_THROWS_AS(SymplecticForm(2, mrat({{0, 0}, {0, 0}})), DegenerateForm);
    CHECK_THROWS_AS(SymplecticForm(2, mrat({{1, 0}, {0, 1}})), DegenerateForm);
}

TEST_CASE("adjoint block formula") {
    const SymplecticForm f1 = standard_form(1);
    CHECK(adjoint(mrat({{1, 2}, {3, 4}}), f1) == mrat({{4, -2}, {-3, 1}}));
    CHECK(adjoint(Matrix<Rat>::identity(2), f1) == Matrix<Rat>::identity(2));
    CHECK(adjoint(diag({Rat(1), Rat(2), Rat(3), Rat(4)}), standard_form(2)) ==
          diag({Rat(3), Rat(4), Rat(1), Rat(2)}));
    CHECK_THROWS_AS(adjoint(Matrix<Rat>::identity(4), f1), SizeMismatch);
}

TEST_CASE("adjoint algebra on random endomorphisms") {
    Rng rng(401);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.i(1, 3);
        const SymplecticForm form = standard_form(n);
        const Matrix<Rat> m = random_matrix(rng, 2 * n, 6);
        const Matrix<Rat> nn = random_matrix(rng, 2 * n, 6);
        const Matrix<Rat> ma = adjoint(m, form);
        CHECK(adjoint(ma, form) == m);
        CHECK(adjoint(m * nn, form) == adjoint(nn, form) * ma);
        CHECK(charpoly(ma) == charpoly(m));
        // defining property omega(Mv, w) = omega(v, M^adj w)
        for (int probe = 0; probe < 3; ++probe) {
            Vec<Rat> v, w;
            for (int k = 0; k < 2 * n; ++k) {
                v.push_back(rng.rat(5));
                w.push_back(rng.rat(5));
            }
            CHECK(form.omega(m * v, w) == form.omega(v, ma * w));
        }
    }
}

TEST_CASE("dimension-two identities") {
    Rng rng(402);
    const SymplecticForm form = standard_form(1);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix<Rat> m = random_matrix(rng, 2, 9, true);
        const Matrix<Rat> ma = adjoint(m, form);
        CHECK(m * ma == Matrix<Rat>::identity(2) * det(m));
        CHECK(m + ma == Matrix<Rat>::identity(2) * m.trace());
    }
}

TEST_CASE("symplectic basis construction") {
    CHECK(symplectic_basis(standard_form(2)).vectors() == Matrix<Rat>::identity(4));

    const SymplecticForm scaled(2, mrat({{0, 2}, {-2, 0}}));
    const SymplecticBasis b = symplectic_basis(scaled);
    CHECK(b.e(0) == Vec<Rat>{Rat(1), Rat(0)});
    CHECK(b.f(0) == Vec<Rat>{Rat(0), Rat(1, 2)});

    Rng rng(403);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix<Rat> c = random_unimodular(rng, 4);
        const Matrix<Rat> gram = c.transpose() * standard_form(2).gram() * c;
        const SymplecticForm form(4, gram);
        const Matrix<Rat> v = symplectic_basis(form).vectors();
        CHECK(v.transpose() * gram * v == standard_form(2).gram());
    }
}

TEST_CASE("perp examples and duality") {
    const SymplecticForm f1 = standard_form(1);
    CHECK(perp(span(2, {{1, 0}}), f1) == span(2, {{1, 0}}));
    CHECK(perp(span(2, {{1, 0}, {0, 1}}), f1).is_zero());

    const SymplecticForm f2 = standard_form(2);
    CHECK(perp(span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}), f2) ==
          span(4, {{0, 1, 0, 0}, {0, 0, 0, 1}}));

    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.i(1, 3);
        const SymplecticForm form = standard_form(n);
        std::vector<Vec<Rat>> vs;
        for (int k = rng.i(0, 2 * n); k > 0; --k) {
            Vec<Rat> v;
            for (int j = 0; j < 2 * n; ++j)
                v.push_back(rng.rat(4));
            vs.push_back(std::move(v));
        }
        const Subspace<Rat> w(2 * n, vs);
        const Subspace<Rat> wp = perp(w, form);
        CHECK(w.dim() + wp.dim() == 2 * n);
        CHECK(perp(wp, form) == w);
    }
}

TEST_CASE("kernel equals the perp of the adjoint image") {
    Rng rng(405);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.i(1, 3);
        const SymplecticForm form = standard_form(n);
        Matrix<Rat> m = random_matrix(rng, 2 * n, 4);
        // plant singularity: overwrite a row with a multiple of another
        const int r = rng.i(0, 2 * n - 1);
        int r2 = rng.i(0, 2 * n - 2);
        if (r2 >= r)
            ++r2;
        for (int j = 0; j < 2 * n; ++j)
            m.at(r, j) = m.at(r2, j) * Rat(2);
        CHECK(kernel_basis(m) == perp(column_space(adjoint(m, form)), form));
    }
}

TEST_CASE("invariant subspaces dualize under the adjoint") {
    Rng rng(406);
    for (int trial = 0; trial < 30; ++trial) {
        const SymplecticForm form = standard_form(2);
        // M preserving span{e1, f1}: zero blocks from that plane into the rest
        Matrix<Rat> m = random_matrix(rng, 4, 5);
        m.at(1, 0) = m.at(1, 2) = m.at(3, 0) = m.at(3, 2) = Rat(0);
        const Subspace<Rat> w = span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
        REQUIRE(subspace_contains(w, column_space(m * w.basis_matrix())));
        const Subspace<Rat> wp = perp(w, form);
        const Matrix<Rat> ma = adjoint(m, form);
        CHECK(subspace_contains(wp, column_space(ma * wp.basis_matrix())));
    }
}

TEST_CASE("generalized eigenspaces of adjoint pairs are omega-orthogonal") {
    // lambda != mu forces gen(M,lambda) inside perp(gen(M^adj,mu))
    Rng rng(407);
    const SymplecticForm form = standard_form(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix<Rat> p = random_symplectic(2, rng.g());
        const Matrix<Rat> m = inverse(p) * diag({Rat(1), Rat(2), Rat(3), Rat(4)}) * p;
        const Matrix<Rat> ma = adjoint(m, form);
        const auto gm1 = generalized_eigenspace<Rat>(m, Rat(1));
        const auto ga2 = generalized_eigenspace<Rat>(ma, Rat(2));
        REQUIRE(!gm1.is_zero());
        REQUIRE(!ga2.is_zero());
        CHECK(subspace_contains(perp(ga2, form), gm1));
    }
}

TEST_CASE("self-adjoint generalized eigenspaces are symplectic subspaces") {
    Rng rng(408);
    const SymplecticForm form = standard_form(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix<Rat> m = random_matrix(rng, 4, 3);
        const Matrix<Rat> s = m * adjoint(m, form); // self-adjoint by construction
        const TPoly phi = charpoly(s);
        auto [roots, splits] = upoly_rational_roots(phi);
        (void)splits;
        for (const auto& [lambda, mult] : roots) {
            (void)mult;
            const auto g = generalized_eigenspace<Rat>(s, lambda);
            if (!g.is_zero())
                CHECK(classify_subspace(g, form) == SubspaceKind::symplectic);
        }
    }
}

TEST_CASE("subspace classification") {
    const SymplecticForm f2 = standard_form(2);
    CHECK(classify_subspace(span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}), f2) ==
          SubspaceKind::symplectic);
    CHECK(classify_subspace(span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), f2) ==
          SubspaceKind::lagrangian);
    CHECK(classify_subspace(span(4, {{1, 0, 0, 0}}), f2) == SubspaceKind::isotropic);
    CHECK(classify_subspace(span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}), f2) ==
          SubspaceKind::coisotropic);
    CHECK(classify_subspace(span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}),
                            f2) == SubspaceKind::symplectic);
    // span{e1, f1, e2} in dim 6: degenerate restricted form, e3 lies in the
    // perp but not in the span
    CHECK(classify_subspace(span(6, {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                                     {0, 1, 0, 0, 0, 0}}),
                            standard_form(3)) == SubspaceKind::generic);
}

TEST_CASE("lagrangian completion") {
    const SymplecticForm f2 = standard_form(2);
    const auto l1 = span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const auto l2 = span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    const SymplecticBasis b = lagrangian_complete(l1, l2, f2);
    CHECK(b.vectors() == Matrix<Rat>::identity(4));

    const SymplecticForm f1 = standard_form(1);
    const SymplecticBasis c = lagrangian_complete(span(2, {{1, 0}}), span(2, {{1, 1}}), f1);
    CHECK(c.e(0) == Vec<Rat>{Rat(1), Rat(0)});
    CHECK(c.f(0) == Vec<Rat>{Rat(1), Rat(1)});
    CHECK(f1.omega(c.e(0), c.f(0)) == Rat(1));

    CHECK_THROWS_AS(lagrangian_complete(l1, l1, f2), NotTransverse);
    CHECK_THROWS_AS(
        lagrangian_complete(span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}), l2, f2), NotLagrangian);
}

TEST_CASE("lagrangian completion produces a symplectic basis on random transverse pairs") {
    Rng rng(409);
    const SymplecticForm form = standard_form(2);
    const Matrix<Rat> std_gram = form.gram();
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix<Rat> p = random_symplectic(2, rng.g());
        // images of the standard Lagrangians under a symplectic map stay
        // Lagrangian and transverse
        std::vector<Vec<Rat>> l1v, l2v;
        for (int j = 0; j < 2; ++j) {
            l1v.push_back(p.column(j));
            l2v.push_back(p.column(2 + j));
        }
        const SymplecticBasis b =
            lagrangian_complete(Subspace<Rat>(4, l1v), Subspace<Rat>(4, l2v), form);
        CHECK(b.vectors().transpose() * std_gram * b.vectors() == std_gram);
    }
}

TEST_CASE("symplectic map and normality predicates") {
    const SymplecticForm f1 = standard_form(1);
    CHECK(is_symplectic_map(Matrix<Rat>::identity(2), f1));
    CHECK(is_symplectic_map(diag({Rat(2), Rat(1, 2)}), f1));
    CHECK(!is_symplectic_map(diag({Rat(2), Rat(2)}), f1));

    CHECK(is_symplectically_normal(Matrix<Rat>::identity(2), f1));
    CHECK(is_symplectically_normal(diag({Rat(3), Rat(7)}), f1));
    // dimension 2 is degenerate for normality: M M^adj = (det M) E makes
    // every endomorphism normal there
    CHECK(is_symplectically_normal(mrat({{1, 1}, {0, 1}}), f1));
    CHECK(!is_symplectically_normal(
        mrat({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}), standard_form(2)));
}

TEST_CASE("pf_omega normalization and examples") {
    const SymplecticForm f1 = standard_form(1);
    const SymplecticForm f2 = standard_form(2);
    const SymplecticBasis b1 = symplectic_basis(f1);
    const SymplecticBasis b2 = symplectic_basis(f2);

    CHECK(pf_omega(Matrix<Rat>::identity(2), b1, f1) == Rat(1));
    CHECK(pf_omega(Matrix<Rat>::identity(4), b2, f2) == Rat(1));
    CHECK(pf_omega(Matrix<Rat>::identity(2) * Rat(2), b1, f1) == Rat(2));

    const Matrix<Rat> m = diag({Rat(1), Rat(2), Rat(3), Rat(4)});
    const Matrix<Rat> a = m * adjoint(m, f2);
    CHECK(pf_omega(a, b2, f2) == det(m));

    CHECK_THROWS_AS(pf_omega(mrat({{1, 1}, {0, 1}}), b1, f1), NotSelfAdjoint);
}

TEST_CASE("pf_omega does not depend on the symplectic basis") {
    Rng rng(410);
    const SymplecticForm form = standard_form(2);
    const SymplecticBasis base = symplectic_basis(form);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix<Rat> m = random_matrix(rng, 4, 4);
        const Matrix<Rat> a = m * adjoint(m, form);
        const Matrix<Rat> p = random_symplectic(2, rng.g());
        const SymplecticBasis moved(p * base.vectors());
        CHECK(pf_omega(a, moved, form) == pf_omega(a, base, form));
    }
}

TEST_CASE("random symplectic generator") {
    const Matrix<Rat> p = random_symplectic(1, 7);
    CHECK(det(p) == Rat(1));
    CHECK(is_symplectic_map(p, standard_form(1)));
    CHECK(random_symplectic(1, 7) == p); // deterministic per seed
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(is_symplectic_map(random_symplectic(2, seed), standard_form(2)));
}
