#include "nilform/catalog.hpp"
#include "nilform/derivations.hpp"
#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace nilform;

TEST(Derivations, BasisElementsAreDerivations) {
    for (int family : {6, 25, 58, 81}) {
        const LieAlgebra g = build(family, 4);
        const DerivationSpace der = derivation_space(g);
        for (const auto& d : der.basis) EXPECT_TRUE(is_derivation(g, d));
        for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_TRUE(is_derivation(g, g.ad_basis(i)));
    }
}

TEST(Derivations, ClosedUnderCommutator) {
    const LieAlgebra g = build(12, 5);
    const DerivationSpace der = derivation_space(g);
    for (std::size_t a = 0; a < der.dim(); a += 3)
        for (std::size_t b = 1; b < der.dim(); b += 4) EXPECT_TRUE(is_derivation(g, commutator(der.basis[a], der.basis[b])));
}

TEST(Derivations, CoordinatesRoundTrip) {
    const DerivationSpace der = derivation_space(build(19, 4));
    Vector c(der.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(static_cast<long>(i % 5) - 2, 3);
    EXPECT_EQ(der.coordinates(der.combination(c)), c);
}

TEST(Derivations, KnownDimensions) {
    EXPECT_EQ(derivation_space(heisenberg(1)).dim(), 6u);
    EXPECT_EQ(derivation_space(abelian(3)).dim(), 9u);
    EXPECT_EQ(derivation_space(build(6, 4)).dim(), 13u);
}

TEST(Derivations, SerialMatchesParallel) {
    for (int family : {1, 37, 70}) {
        const LieAlgebra g = build(family, 4);
        const auto p = derivation_space(g), s = derivation_space_serial(g);
        EXPECT_EQ(p.basis, s.basis);
        EXPECT_EQ(p.free_unknowns, s.free_unknowns);
    }
}

TEST(Derivations, DerivationAlgebraSatisfiesJacobi) {
    const LieAlgebra d = derivation_algebra(build(6, 4));
    EXPECT_EQ(d.dim(), 13u);
    EXPECT_FALSE(jacobi_check(d));
}

TEST(Derivations, WeightVectorOfPrintedExample) {
    const auto& ex = fixtures().der_g8_6;
    const LieAlgebra g = ex.presentation_algebra();
    EXPECT_FALSE(jacobi_check(g));
    EXPECT_TRUE(verify_weight_vector(g, ex.weight_vector));
    Vector bumped = ex.weight_vector;
    bumped[2] += 1;
    EXPECT_FALSE(verify_weight_vector(g, bumped));
    EXPECT_THROW(verify_weight_vector(g, Vector(g.dim() + 1)), DimensionMismatch);
}

TEST(Derivations, DiagonalWeightsOfHeisenberg) {
    const WeightSignature w = diagonal_derivations(heisenberg(1));
    EXPECT_EQ(w.rank, 2u);
    EXPECT_EQ(w.weights.size(), 3u);
    EXPECT_EQ(w.weights[2], w.weights[0] + w.weights[1]);
}

TEST(CharNilpotency, TrialCountMeetsBound) {
    for (std::size_t n : {7u, 9u, 13u})
        for (std::size_t k = 1; k <= n * n; k += 7) {
            const double per = std::log2(static_cast<double>(k) / static_cast<double>(4 * n * k + 1));
            EXPECT_LE(per * static_cast<double>(trace_trials(n, k)), -40.0);
        }
}

TEST(CharNilpotency, DiagonalWitnessForGradedAlgebras) {
    for (const LieAlgebra& g : {heisenberg(2), direct_sum(heisenberg(1), abelian(2)), build(1, 4)}) {
        const auto r = is_characteristically_nilpotent(g);
        EXPECT_FALSE(r.nilpotent);
        EXPECT_EQ(r.witness_kind, "diagonal");
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(is_derivation(g, *r.witness));
    }
}

TEST(CharNilpotency, KnownPositiveAtDimensionSeven) {
    const auto r = is_characteristically_nilpotent(build(65, 3));
    EXPECT_TRUE(r.nilpotent);
    EXPECT_LE(r.log2_error_bound, -40.0);
}

TEST(DerivationTower, IndexOneForGradedExample) {
    const DerivationTower t = derivation_tower(build(6, 4), 1);
    ASSERT_EQ(t.levels.size(), 2u);
    EXPECT_EQ(t.levels[0].dim_der, 13u);
    EXPECT_EQ(t.index, 1u);
}

TEST(TorusSignature, SeedIndependentOnSample) {
    const DerivationSpace der = derivation_space(build(19, 4));
    const auto a = torus_signature(der, 1), b = torus_signature(der, 2);
    EXPECT_EQ(a.rank, b.rank);
    EXPECT_EQ(a.cartan_dim, b.cartan_dim);
}
