#include "nilform/catalog.hpp"
#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/invariants.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace nilform;

TEST(Catalog, HasAllFamilies) {
    ASSERT_EQ(catalog().size(), 103u);
    for (int i = 1; i <= 103; ++i) EXPECT_EQ(catalog_entry(i).index, i);
    EXPECT_THROW(catalog_entry(0), UnknownFamily);
    EXPECT_THROW(catalog_entry(104), UnknownFamily);
}

TEST(Catalog, EveryInstanceSatisfiesJacobiAndNilindexFive) {
    for (std::size_t n = 7; n <= 11; ++n)
        for (const auto& inst : enumerate(n)) {
            EXPECT_EQ(inst.dim(), n);
            EXPECT_FALSE(jacobi_check(inst.algebra)) << inst.label();
            EXPECT_EQ(nilindex(inst.algebra), 5u) << inst.label();
            EXPECT_TRUE(center(inst.algebra).dim() > 0);
        }
}

TEST(Catalog, DerivedDimensionMatchesHeading) {
    for (const auto& e : catalog()) {
        const LieAlgebra g = build(e.index, e.min_m + 1, e.has_alpha ? std::optional<Rational>(2) : std::nullopt);
        EXPECT_EQ(derived_subalgebra(g).dim(), e.dim_derived) << e.index;
        if (e.derived_abelian) EXPECT_EQ(is_abelian(restrict_to(g, derived_subalgebra(g))), *e.derived_abelian) << e.index;
    }
}

TEST(Catalog, ParityAndDimension) {
    for (const auto& e : catalog())
        EXPECT_EQ(family_dimension(e.index, 5) % 2, e.parity == Parity::Odd ? 1u : 0u) << e.index;
    EXPECT_THROW(build(6, 2), InvalidDimension);
}

TEST(Catalog, AlphaFamilies) {
    EXPECT_THROW(build(7, 4), MissingParameter);
    EXPECT_THROW(build(7, 4, Rational(0)), InvalidParameter);
    EXPECT_NE(build(7, 4, Rational(1)), build(7, 4, Rational(2)));
    std::set<int> with_alpha;
    for (const auto& e : catalog())
        if (e.has_alpha) with_alpha.insert(e.index);
    EXPECT_EQ(with_alpha, (std::set<int>{7, 66}));
}

TEST(Catalog, InstanceIdsAreUnique) {
    std::set<std::string> ids;
    for (const auto& inst : enumerate(12)) EXPECT_TRUE(ids.insert(inst.id()).second) << inst.id();
    EXPECT_FALSE(ids.empty());
}

TEST(Catalog, OnlyFamily61IsReconstructed) {
    for (const auto& e : catalog()) EXPECT_EQ(e.reconstructed, e.index == 61) << e.index;
}

TEST(Catalog, ApplyBracketsParser) {
    LieAlgebra g(3, {"A", "B", "C"});
    apply_brackets(g, "A,B=2C; B,C=aA", Rational(3));
    EXPECT_EQ(g.constant(0, 1, 2), Rational(2));
    EXPECT_EQ(g.constant(1, 2, 0), Rational(3));
    EXPECT_ANY_THROW(apply_brackets(g, "A,Q=C"));
}

TEST(Fixtures, TablesListEachFamilyAtMostOnce) {
    std::set<int> seen;
    for (int t = 1; t <= 7; ++t)
        for (const auto& row : table_fixture(t).rows) EXPECT_TRUE(seen.insert(row.family).second) << row.family;
    std::set<int> missing;
    for (int i = 1; i <= 103; ++i)
        if (!seen.count(i)) missing.insert(i);
    // no printed row for these two
    EXPECT_EQ(missing, (std::set<int>{5, 54}));
}
