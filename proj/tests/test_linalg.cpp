#include "nilform/linalg.hpp"
#include "nilform/matrix.hpp"
#include "nilform/random.hpp"

#include <gtest/gtest.h>

using namespace nilform;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng, long bound = 3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    return m;
}

Matrix low_rank(std::size_t r, std::size_t c, std::size_t k, Rng& rng) {
    return random_matrix(r, k, rng) * random_matrix(k, c, rng);
}

}  // namespace

TEST(Rref, IsReducedAndIdempotent) {
    Rng rng(1);
    for (int t = 0; t < 40; ++t) {
        const Matrix a = low_rank(5, 7, 1 + t % 4, rng);
        const Echelon e = rref(a);
        EXPECT_EQ(e.pivots.size(), e.rank);
        for (std::size_t r = 0; r < e.rank; ++r) {
            EXPECT_EQ(e.reduced(r, e.pivots[r]), Rational(1));
            for (std::size_t q = 0; q < e.reduced.rows(); ++q)
                if (q != r) EXPECT_TRUE(e.reduced(q, e.pivots[r]).is_zero());
            if (r) EXPECT_LT(e.pivots[r - 1], e.pivots[r]);
        }
        for (std::size_t r = e.rank; r < e.reduced.rows(); ++r) EXPECT_TRUE(is_zero(e.reduced.row(r)));
        EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
    }
}

TEST(Rref, RankNullity) {
    Rng rng(2);
    for (int t = 0; t < 40; ++t) {
        const std::size_t k = 1 + t % 5;
        const Matrix a = low_rank(6, 8, k, rng);
        const auto ker = kernel_basis(a);
        EXPECT_EQ(rank(a) + ker.size(), 8u);
        EXPECT_LE(rank(a), k);
        for (const auto& v : ker) EXPECT_TRUE(is_zero(a.apply(v)));
    }
}

TEST(Linalg, InverseAndSolve) {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = random_invertible(5, rng);
        EXPECT_EQ(rank(a), 5u);
        EXPECT_EQ(a * inverse(a), Matrix::identity(5));
        Vector x(5);
        for (auto& v : x) v = rng.rational();
        const auto sol = solve(a, a.apply(x));
        ASSERT_TRUE(sol);
        EXPECT_EQ(*sol, x);
    }
    EXPECT_FALSE(solve(Matrix{{1, 0}, {0, 0}}, Vector{0, 1}));
}

TEST(Linalg, SparseEchelonAgreesWithDense) {
    Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        const Matrix a = low_rank(9, 7, 1 + t % 6, rng);
        SparseEchelon s(7);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            SparseEchelon::Row row;
            for (std::size_t c = 0; c < 7; ++c)
                if (!a(r, c).is_zero()) row[c] = a(r, c);
            s.add_row(row);
        }
        EXPECT_EQ(s.rank(), rank(a));
        const auto ker = s.kernel_basis();
        EXPECT_EQ(ker.size(), s.free_columns().size());
        EXPECT_EQ(ker.size() + s.rank(), 7u);
        for (const auto& v : ker) EXPECT_TRUE(is_zero(a.apply(v)));
    }
}

TEST(Linalg, CayleyHamilton) {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = random_matrix(5, 5, rng);
        const Polynomial p = char_poly(a);
        ASSERT_EQ(p.size(), 6u);
        EXPECT_EQ(p.back(), Rational(1));
        EXPECT_TRUE(evaluate(p, a).is_zero());
        EXPECT_EQ(-p[4], trace(a));
    }
}

TEST(Linalg, NilpotentJordanProfile) {
    // blocks 3,2,1 in the shift convention
    Matrix n(6, 6);
    n(1, 0) = 1;
    n(2, 1) = 1;
    n(4, 3) = 1;
    EXPECT_EQ(nilpotent_jordan_profile(n), (std::vector<std::size_t>{3, 2, 1}));
    Rng rng(6);
    const Matrix t = random_invertible(6, rng);
    EXPECT_EQ(nilpotent_jordan_profile(inverse(t) * n * t), (std::vector<std::size_t>{3, 2, 1}));
    EXPECT_EQ(conjugate_partition({3, 2, 1}), (std::vector<std::size_t>{3, 2, 1}));
    EXPECT_EQ(conjugate_partition({4, 1}), (std::vector<std::size_t>{2, 1, 1, 1}));
}

TEST(Linalg, SquarefreeProfile) {
    // (x-1)^2 (x+2)^3 x
    Polynomial p{1};
    for (Rational r : {Rational(1), Rational(1), Rational(-2), Rational(-2), Rational(-2), Rational(0)})
        p = poly_mul(p, Polynomial{-r, 1});
    const auto prof = squarefree_profile(p);
    std::size_t total = 0;
    for (auto [mult, deg] : prof) total += mult * deg;
    EXPECT_EQ(total, 6u);
    EXPECT_EQ(prof, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {3, 1}}));
}

TEST(Linalg, PolyGcdAndDivmod) {
    const Polynomial a = poly_mul({-1, 1}, {2, 1});
    const Polynomial b = poly_mul({-1, 1}, {3, 0, 1});
    EXPECT_EQ(poly_monic(poly_gcd(a, b)), (Polynomial{-1, 1}));
    const auto [q, r] = poly_divmod(b, {-1, 1});
    EXPECT_EQ(q, (Polynomial{3, 0, 1}));
    Polynomial rr = r;
    poly_trim(rr);
    EXPECT_TRUE(rr.empty() || (rr.size() == 1 && rr[0].is_zero()));
}

TEST(Subspace, SpanContainsAndCoordinates) {
    const Subspace s = Subspace::span(4, {Vector{1, 1, 0, 0}, Vector{0, 1, 1, 0}, Vector{1, 2, 1, 0}});
    EXPECT_EQ(s.dim(), 2u);
    const Vector v{2, 3, 1, 0};
    EXPECT_TRUE(s.contains(v));
    EXPECT_FALSE(s.contains(Vector{0, 0, 0, 1}));
    const Vector c = s.coordinates(v);
    Vector back = zero_vector(4);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(back, c[i], s.basis().row(i));
    EXPECT_EQ(back, v);
    EXPECT_TRUE(Subspace::whole(4).contains(s));
}
