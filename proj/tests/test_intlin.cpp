#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "trisect/intlin.hpp"

using namespace trisect;

namespace {

bool is_smith_form(const IntMatrix& d)
{
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (d(i, i) < 0) return false;
        if (i + 1 < n) {
            const Integer& a = d(i, i);
            const Integer& b = d(i + 1, i + 1);
            if (a == 0 ? b != 0 : b % a != 0) return false;
        }
    }
    return true;
}

Integer abs_det(const IntMatrix& m)
{
    return abs(m.rows() <= 5 ? oracle::leibniz_determinant(m) : determinant(m));
}

} // namespace

TEST_CASE("snf: worked examples")
{
    CHECK(snf(IntMatrix{{2, 0}, {0, 4}}).D == IntMatrix{{2, 0}, {0, 4}});

    // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4.
    const IntMatrix m{{2, 4}, {6, 8}};
    CHECK(oracle::invariant_factors_by_minors(m) == std::vector<Integer>{2, 4});
    CHECK(snf(m).D == IntMatrix{{2, 0}, {0, 4}});

    const auto z = snf(IntMatrix(2, 3));
    CHECK(z.D == IntMatrix(2, 3));
    CHECK(z.rank() == 0);
}

TEST_CASE("snf: empty shapes")
{
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {3, 0}}) {
        const IntMatrix m(r, c);
        const auto s = snf(m);
        CHECK(s.D == m);
        CHECK(s.U == IntMatrix::identity(r));
        CHECK(s.V == IntMatrix::identity(c));
        CHECK(s.rank() == 0);
    }
}

TEST_CASE("snf: reconstruction, unimodularity and idempotence on random matrices")
{
    std::mt19937_64 gen(20240611);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + gen() % 8, c = 1 + gen() % 8;
        IntMatrix m = testgen::random_matrix(gen, r, c, -20, 20);
        if (trial % 5 == 0 && r > 1) {
            // Force rank deficiency.
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 3 * m(0, j);
        }
        const auto s = snf(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(is_smith_form(s.D));
        CHECK(abs_det(s.U) == 1);
        CHECK(abs_det(s.V) == 1);
        CHECK(snf(s.D).D == s.D);
    }
}

TEST_CASE("snf: invariant factors agree with determinantal divisors")
{
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + gen() % 4, c = 1 + gen() % 4;
        const IntMatrix m = testgen::random_matrix(gen, r, c, -9, 9);
        CHECK(snf(m).invariant_factors() == oracle::invariant_factors_by_minors(m));
    }
}

TEST_CASE("determinant: Bareiss agrees with Leibniz")
{
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + gen() % 5;
        IntMatrix m = testgen::random_matrix(gen, n, n, -6, 6);
        if (trial % 4 == 0) m(0, 0) = 0;
        CHECK(determinant(m) == oracle::leibniz_determinant(m));
    }
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("is_primitive")
{
    CHECK(is_primitive(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK_FALSE(is_primitive(IntMatrix{{2, 0}}));
    CHECK_FALSE(is_primitive(IntMatrix{{1, 2}, {3, 4}}));
    CHECK_FALSE(is_primitive(IntMatrix{{1, 0}, {1, 0}}));
    CHECK(is_primitive(IntMatrix(0, 4)));

    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t r = 1 + gen() % 4, c = r + gen() % 3;
        const IntMatrix m = testgen::random_matrix(gen, r, c, -3, 3);
        IntMatrix expected(r, c);
        for (std::size_t i = 0; i < r; ++i) expected(i, i) = 1;
        CHECK(is_primitive(m) == (snf(m).D == expected));
    }
}

TEST_CASE("left_kernel_basis: examples")
{
    CHECK(left_kernel_basis(IntMatrix::identity(2)).rows() == 0);

    const auto k1 = left_kernel_basis(IntMatrix{{1}, {1}});
    REQUIRE(k1.rows() == 1);
    CHECK((k1 == IntMatrix{{1, -1}} || k1 == IntMatrix{{-1, 1}}));

    // (1, 0) also kills (2, 0)^T, while the index-2 vector (0, 2) must not appear.
    const auto k2 = left_kernel_basis(IntMatrix{{2}, {0}});
    REQUIRE(k2.rows() == 1);
    CHECK((k2 == IntMatrix{{0, 1}} || k2 == IntMatrix{{0, -1}}));
}

TEST_CASE("left_kernel_basis: annihilates, primitive, right dimension")
{
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t r = 1 + gen() % 7, c = 1 + gen() % 5;
        IntMatrix m = testgen::random_matrix(gen, r, c, -5, 5);
        if (trial % 3 == 0 && r > 2)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - m(1, j);
        const IntMatrix k = left_kernel_basis(m);
        CHECK(k.rows() == r - rank(m));
        CHECK(k.cols() == r);
        CHECK(k * m == IntMatrix(k.rows(), c));
        CHECK(is_primitive(k));
    }
}

TEST_CASE("symmetric_signature: examples")
{
    CHECK(symmetric_signature(IntMatrix{{2, 0, 0}, {0, -3, 0}, {0, 0, 0}}) == Inertia{1, 1, 1});
    // Hyperbolic plane: eigenvalues +1 and -1.
    const IntMatrix h{{0, 1}, {1, 0}};
    CHECK(oracle::inertia_by_charpoly(to_rational(h)) == Inertia{1, 1, 0});
    CHECK(symmetric_signature(h) == Inertia{1, 1, 0});
    CHECK(symmetric_signature(IntMatrix::identity(3)) == Inertia{3, 0, 0});
    CHECK(symmetric_signature(IntMatrix(0, 0)) == Inertia{0, 0, 0});

    RationalMatrix q(2, 2);
    q(0, 0) = Rational(1, 2);
    q(0, 1) = q(1, 0) = Rational(3, 4);
    q(1, 1) = Rational(1, 3);
    CHECK(symmetric_signature(q) == oracle::inertia_by_charpoly(q));
}

TEST_CASE("symmetric_signature: rejects non-symmetric input")
{
    CHECK_THROWS_AS(symmetric_signature(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_signature(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("symmetric_signature: agrees with the characteristic polynomial oracle")
{
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + gen() % 6;
        const IntMatrix s = testgen::random_symmetric(gen, n, 3);
        const Inertia got = symmetric_signature(s);
        CHECK(got.positive + got.negative + got.zero == n);
        CHECK(got == oracle::inertia_by_charpoly(to_rational(s)));
    }
}

TEST_CASE("symmetric_signature: invariant under unimodular congruence")
{
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + gen() % 6;
        const IntMatrix s = testgen::random_symmetric(gen, n, 4);
        const IntMatrix p = random_unimodular(n, gen(), gen() % 12);
        CHECK(symmetric_signature(p * s * p.transpose()) == symmetric_signature(s));
    }
}

TEST_CASE("random_unimodular")
{
    CHECK(random_unimodular(3, 12345, 0) == IntMatrix::identity(3));
    CHECK(random_unimodular(2, 42, 9) == random_unimodular(2, 42, 9));
    CHECK(random_unimodular(1, 8, 3) == IntMatrix{{-1}});
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 1 + seed % 6;
        CHECK(abs_det(random_unimodular(n, seed, 25)) == 1);
    }
    CHECK_THROWS_AS(random_unimodular(0, 1, 1), std::invalid_argument);
}
