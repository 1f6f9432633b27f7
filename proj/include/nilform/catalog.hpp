#pragma once

#include "nilform/lie_algebra.hpp"
#include "nilform/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nilform {

enum class Parity { Even, Odd };

/// Static description of one family mu_n^i of the (n-5)-filiform classification.
struct CatalogEntry {
    int index = 0;
    Parity parity = Parity::Even;
    int min_m = 0;
    std::size_t dim_derived = 0;             // dim C^1 from the section heading
    std::optional<bool> derived_abelian;     // stated only for dim C^1 = 4
    bool has_alpha = false;
    bool reconstructed = false;              // law not printed, inferred
    std::vector<std::string> errata;
};

const std::vector<CatalogEntry>& catalog();
/// Throws UnknownFamily.
const CatalogEntry& catalog_entry(int index);
std::vector<std::string> errata(int index);

/// Dimension 2m (even families) or 2m+1 (odd families).
std::size_t family_dimension(int index, int m);

/// Brackets of mu^i at the given m. Throws InvalidDimension, MissingParameter, InvalidParameter.
LieAlgebra build(int index, int m, std::optional<Rational> alpha = std::nullopt);

struct CatalogInstance {
    int index = 0;
    int m = 0;
    std::optional<Rational> alpha;
    LieAlgebra algebra;

    [[nodiscard]] std::size_t dim() const { return algebra.dim(); }
    /// "mu_{n}_{i}" plus "_alpha_p_q" (or "_alpha_p") for continuous families; '-' written as 'm'.
    [[nodiscard]] std::string id() const;
    /// Short display label, e.g. "g12^7(a=1/2)".
    [[nodiscard]] std::string label() const;
};

std::vector<Rational> default_alpha_samples();

/// Every family valid in dimension n, continuous families once per alpha sample,
/// ordered by (family index, alpha sample order).
std::vector<CatalogInstance> enumerate(std::size_t n, const std::vector<Rational>& alphas = default_alpha_samples());

/// Parses "A,B=expr; ..." where expr is a sum of [coef]Label terms; coef "a" stands for alpha.
void apply_brackets(LieAlgebra& g, const std::string& spec, const Rational& alpha = Rational(0));

}  // namespace nilform
