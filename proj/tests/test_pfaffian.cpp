#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <scpoly/pfaffian.hpp>

#include "support.hpp"

using namespace scpoly;
using namespace scpoly::testing;

TEST_CASE("pfaffian of small fixed matrices") {
    CHECK(pfaffian_field(mrat({{0, 1}, {-1, 0}})) == Rat(1));

    // interleaved standard form: two diagonal [[0,1],[-1,0]] blocks
    CHECK(pfaffian_field(mrat({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}})) ==
          Rat(1));

    CHECK_THROWS_AS(pfaffian_field(mrat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})), OddSize);
    CHECK_THROWS_AS(pfaffian_field(mrat({{1, 0}, {0, 1}})), NotAlternating);
    CHECK(pfaffian_field(Matrix<Rat>(2, 2)) == Rat(0)); // singular
}

TEST_CASE("generic 4x4 pfaffian is af - be + cd") {
    Rng rng(301);
    for (int trial = 0; trial < 50; ++trial) {
        const Rat a = rng.rat(), b = rng.rat(), c = rng.rat();
        const Rat d = rng.rat(), e = rng.rat(), f = rng.rat();
        Matrix<Rat> m(4, 4);
        m.at(0, 1) = a; m.at(0, 2) = b; m.at(0, 3) = c;
        m.at(1, 2) = d; m.at(1, 3) = e; m.at(2, 3) = f;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j)
                m.at(i, j) = -m.at(j, i);
        const Rat expected = a * f - b * e + c * d;
        CHECK(pfaffian_field(m) == expected);
        CHECK(pfaffian_oracle(m) == expected);
    }
}

TEST_CASE("elimination agrees with the cofactor oracle up to size 6") {
    Rng rng(302);
    for (int trial = 0; trial < 200; ++trial) {
        const int size = 2 * rng.i(1, 3);
        const Matrix<Rat> a = random_alternating(rng, size, 6);
        CHECK(pfaffian_field(a) == pfaffian_oracle(a));
    }
}

TEST_CASE("pfaffian squared is the determinant, sizes 2 through 8") {
    Rng rng(303);
    for (int trial = 0; trial < 120; ++trial) {
        const int size = 2 * rng.i(1, 4);
        const Matrix<Rat> a = random_alternating(rng, size, 6);
        const Rat pf = pfaffian_field(a);
        CHECK(pf * pf == det(a));
    }
}

TEST_CASE("congruence covariance Pf(B^T A B) = det(B) Pf(A)") {
    Rng rng(304);
    for (int trial = 0; trial < 80; ++trial) {
        const int size = 2 * rng.i(1, 3);
        const Matrix<Rat> a = random_alternating(rng, size, 5);
        const Matrix<Rat> b = random_matrix(rng, size, 3);
        CHECK(pfaffian_field(b.transpose() * a * b) == det(b) * pfaffian_field(a));
    }
}

namespace {

Matrix<BiPoly> lift_rat(const Matrix<Rat>& m) {
    return m.map([](const Rat& x) { return BiPoly(x); });
}

} // namespace

TEST_CASE("polynomial pfaffians via evaluation-interpolation") {
    // Gram of omega_{2E - tE} for n = 1: [[0, 2-t], [-(2-t), 0]]
    Matrix<TPoly> g1(2, 2);
    g1.at(0, 1) = TPoly({Rat(2), Rat(-1)});
    g1.at(1, 0) = -g1.at(0, 1);
    CHECK(pfaffian_tpoly(g1, 1) == TPoly({Rat(2), Rat(-1)}));

    // Gram of the pullback form for M = diag(1,2), n = 1: (1-s)(2-s) - t
    Matrix<BiPoly> g2(2, 2);
    g2.at(0, 1) = BiPoly(SPoly({Rat(2), Rat(-3), Rat(1)})) - BiPoly::t();
    g2.at(1, 0) = -g2.at(0, 1);
    CHECK(pfaffian_bipoly(g2, 2, 1) == g2.at(0, 1));

    // block-diagonal Gram with pair factors for M = diag(1,2,3,4), n = 2
    const BiPoly f13 = BiPoly(SPoly({Rat(3), Rat(-4), Rat(1)})) - BiPoly::t();
    const BiPoly f24 = BiPoly(SPoly({Rat(8), Rat(-6), Rat(1)})) - BiPoly::t();
    Matrix<BiPoly> g4(4, 4);
    g4.at(0, 1) = f13;
    g4.at(1, 0) = -f13;
    g4.at(2, 3) = f24;
    g4.at(3, 2) = -f24;
    CHECK(pfaffian_bipoly(g4, 2, 1) == f13 * f24);

    CHECK_THROWS_AS(pfaffian_bipoly(g4, 1, 1), DegreeBoundExceeded);
    CHECK_THROWS_AS(pfaffian_bipoly(lift_rat(mrat({{1, 0}, {0, 1}})), 1, 1), NotAlternating);
}

TEST_CASE("polynomial pfaffian commutes with rational substitution") {
    Rng rng(305);
    for (int trial = 0; trial < 40; ++trial) {
        const int size = 2 * rng.i(1, 2);
        // alternating matrix of random entries a + b s + c t
        Matrix<BiPoly> a(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) {
                BiPoly e = BiPoly(SPoly({rng.rat(4), rng.rat(4)})) + BiPoly::t(1, rng.rat(4));
                a.at(i, j) = e;
                a.at(j, i) = -e;
            }
        const BiPoly pf = pfaffian_bipoly(a, 1, 1);
        for (int probe = 0; probe < 3; ++probe) {
            const Rat sv = rng.rat_frac(5), tv = rng.rat_frac(5);
            const Matrix<Rat> num = a.map([&](const BiPoly& p) { return p.eval(sv, tv); });
            CHECK(pf.eval(sv, tv) == pfaffian_field(num));
        }
    }
}
