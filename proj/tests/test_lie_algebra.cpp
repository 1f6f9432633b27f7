#include "nilform/catalog.hpp"
#include "nilform/errors.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/random.hpp"

#include <gtest/gtest.h>

using namespace nilform;

TEST(LieAlgebra, BracketIsAntisymmetric) {
    const LieAlgebra g = build(12, 5);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            for (std::size_t k = 0; k < g.dim(); ++k) EXPECT_EQ(g.constant(i, j, k), -g.constant(j, i, k));
}

TEST(LieAlgebra, AdIsColumnConvention) {
    const LieAlgebra g = heisenberg(1);
    const Matrix a = g.ad_basis(0);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a.column(j), g.bracket_basis(0, j));
}

TEST(LieAlgebra, JacobiDetectsViolation) {
    LieAlgebra g(4);
    g.add_bracket(0, 1, 2, 1);
    g.add_bracket(0, 2, 3, 1);
    g.add_bracket(1, 2, 3, 1);
    EXPECT_FALSE(jacobi_check(g));
    g.add_bracket(1, 3, 2, 1);
    const auto f = jacobi_check(g);
    ASSERT_TRUE(f);
    EXPECT_FALSE(is_zero(f->residual));
    EXPECT_EQ(jacobi_check_serial(g)->i, f->i);
}

TEST(LieAlgebra, ChangeBasisRoundTrip) {
    Rng rng(21);
    for (int family : {1, 29, 58, 81}) {
        const LieAlgebra g = build(family, 4);
        const Matrix t = random_invertible(g.dim(), rng);
        const LieAlgebra h = change_basis(g, t);
        EXPECT_FALSE(jacobi_check(h));
        EXPECT_EQ(change_basis(h, inverse(t)), g);
    }
}

TEST(LieAlgebra, ChangeBasisRejectsSingular) {
    const LieAlgebra g = heisenberg(1);
    EXPECT_THROW(change_basis(g, Matrix(3, 3)), SingularTransform);
}

TEST(LieAlgebra, HeisenbergStructure) {
    const LieAlgebra h = heisenberg(2);
    EXPECT_EQ(h.dim(), 5u);
    EXPECT_EQ(center(h).dim(), 1u);
    EXPECT_EQ(derived_subalgebra(h), center(h));
    EXPECT_EQ(lower_central_series(h).size(), 3u);
    EXPECT_FALSE(has_abelian_direct_factor(h));
    EXPECT_TRUE(has_abelian_direct_factor(direct_sum(h, abelian(1))));
    EXPECT_TRUE(is_abelian(abelian(3)));
}

TEST(LieAlgebra, QuotientByCenter) {
    const LieAlgebra g = build(6, 4);
    const Subspace z = center(g);
    EXPECT_TRUE(is_ideal(g, z));
    const LieAlgebra q = quotient(g, z);
    EXPECT_EQ(q.dim(), g.dim() - z.dim());
    EXPECT_FALSE(jacobi_check(q));
}

TEST(LieAlgebra, QuotientRejectsNonIdeal) {
    const LieAlgebra g = heisenberg(1);
    const Subspace s = Subspace::span(3, {unit_vector(3, 0)});
    EXPECT_FALSE(is_ideal(g, s));
    EXPECT_THROW(quotient(g, s), NotAnIdeal);
}
