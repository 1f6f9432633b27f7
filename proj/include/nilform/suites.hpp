#pragma once

#include "nilform/catalog.hpp"
#include "nilform/report.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace nilform {

struct SuiteConfig {
    std::uint64_t seed = kDefaultSeed;
    std::vector<Rational> alphas = default_alpha_samples();
};

/// Inclusive range lo..hi as a list; empty when lo > hi.
std::vector<std::size_t> dim_range(std::size_t lo, std::size_t hi);

/// Jacobi, characteristic sequence (n-5,1,...,1), nilindex, Z in C^1 and no abelian factor per catalog instance.
Report check_suite(const std::vector<std::size_t>& dims, const SuiteConfig& cfg = {});
/// Jacobi for an arbitrary algebra; nilpotent inputs also get their invariants reported.
Report check_algebra(const LieAlgebra& g, const std::string& id, const SuiteConfig& cfg = {});

/// Tables 1-7: one "structure" item per row and m, plus a "dim_der" item where a closed form is printed.
/// Tables 8-9: one "weights" item per row and m. m below a family's minimum is skipped.
Report tables_suite(int table, int m_lo, int m_hi, const SuiteConfig& cfg = {});

/// Per-instance characteristic nilpotency plus one set comparison per n with a printed list.
/// With sums, every pair a <= b of the printed 7-dimensional list is tested as a direct sum.
Report charnilp_suite(const std::vector<std::size_t>& dims, bool sums, const SuiteConfig& cfg = {});
/// Direct sums of the printed 7-dimensional positives (first alpha sample for family 66).
Report direct_sum_suite(const SuiteConfig& cfg = {});

/// Tower levels of one family instance plus the checks attached to the printed examples.
Report dertower_suite(int family, std::size_t dim, std::size_t depth, std::optional<Rational> alpha,
                      const SuiteConfig& cfg = {});

/// Fingerprint classes at dimension n. Same-class pairs pass only when the printed tables leave them
/// to external labels; the printed weight-table pairs must be separated.
Report distinguish_suite(std::size_t n, const SuiteConfig& cfg = {});

/// Catalog instance of a family in dimension n; throws InvalidDimension when the parity does not fit.
CatalogInstance instance_at(int family, std::size_t n, std::optional<Rational> alpha = std::nullopt);

/// "f11^2" style rendering of a weight multiset entry.
std::string weight_token(const LinearForm& form, std::size_t multiplicity);

}  // namespace nilform
