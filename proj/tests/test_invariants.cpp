#include "nilform/catalog.hpp"
#include "nilform/errors.hpp"
#include "nilform/invariants.hpp"

#include <gtest/gtest.h>

using namespace nilform;

namespace {

LieAlgebra model_filiform(std::size_t k) {
    LieAlgebra g(k);
    for (std::size_t j = 1; j + 1 < k; ++j) g.add_bracket(0, j, j + 1, 1);
    return g;
}

}  // namespace

TEST(Invariants, PFiliformSequence) {
    EXPECT_EQ(p_filiform_sequence(10, 5), (CharSequence{5, 1, 1, 1, 1, 1}));
    EXPECT_EQ(p_filiform_sequence(6, 1), (CharSequence{5, 1}));
    EXPECT_EQ(to_string(p_filiform_sequence(7, 2)), "(5,1,1)");
}

TEST(Invariants, ModelFiliformIsFiliform) {
    for (std::size_t k = 3; k <= 8; ++k) {
        const LieAlgebra g = model_filiform(k);
        EXPECT_EQ(char_sequence(g), p_filiform_sequence(k, 1));
        EXPECT_TRUE(is_p_filiform(g, 1));
        EXPECT_EQ(nilindex(g), k - 1);
    }
}

TEST(Invariants, SplitExtensionsShiftP) {
    EXPECT_TRUE(is_p_filiform(direct_sum(heisenberg(1), abelian(3)), 4));
    EXPECT_TRUE(is_p_filiform(heisenberg(3), 5));
    EXPECT_TRUE(is_p_filiform(direct_sum(model_filiform(5), abelian(2)), 3));
    EXPECT_FALSE(is_p_filiform(direct_sum(model_filiform(5), abelian(2)), 2));
}

TEST(Invariants, VectorInDerivedThrows) {
    const LieAlgebra h = heisenberg(1);
    EXPECT_THROW(char_sequence_of_vector(h, unit_vector(3, 2)), VectorInDerivedAlgebra);
}

TEST(Invariants, NilindexRejectsNonNilpotent) {
    LieAlgebra g(2);
    g.add_bracket(0, 1, 1, 1);
    EXPECT_THROW(nilindex(g), NotNilpotent);
}

TEST(Invariants, CatalogFamiliesHaveNilindexFive) {
    for (const auto& inst : enumerate(9)) EXPECT_EQ(nilindex(inst.algebra), 5u) << inst.label();
}

TEST(Invariants, FingerprintIsBasisInvariant) {
    Rng rng(31);
    for (int family : {6, 19, 58, 65}) {
        const LieAlgebra g = build(family, 4);
        const Fingerprint f = fingerprint(g);
        EXPECT_EQ(fingerprint(change_basis(g, random_invertible(g.dim(), rng))), f) << family;
        EXPECT_EQ(f.dim, g.dim());
        EXPECT_FALSE(f.key().empty());
    }
}

TEST(Invariants, DistinguishGroupsEqualPrints) {
    const LieAlgebra a = build(6, 4);
    Rng rng(32);
    const LieAlgebra b = change_basis(a, random_invertible(a.dim(), rng));
    const LieAlgebra c = direct_sum(heisenberg(3), abelian(1));
    const Distinction d = pairwise_distinguish(std::vector<LieAlgebra>{a, c, b});
    ASSERT_EQ(d.unresolved.size(), 1u);
    EXPECT_EQ(d.unresolved[0], (std::pair<std::size_t, std::size_t>{0, 2}));
}

TEST(Invariants, CoordinateIdealScanFindsFiliformPrefix) {
    const LieAlgebra g = build(30, 5);
    const auto found = scan_coordinate_ideals(g, 6, CharSequence{5, 1});
    for (const auto& c : found) {
        EXPECT_TRUE(is_ideal(g, c.ideal));
        EXPECT_EQ(c.char_sequence, (CharSequence{5, 1}));
    }
}
