#pragma once

#include "nilform/derivations.hpp"
#include "nilform/lie_algebra.hpp"
#include "nilform/random.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nilform {

/// Jordan block sizes, descending, summing to dim g.
using CharSequence = std::vector<std::size_t>;

/// "(5,1,1,1)" style rendering.
std::string to_string(const CharSequence& c);
/// (n - p, 1, ..., 1) of total n, 1 <= p < n.
CharSequence p_filiform_sequence(std::size_t n, std::size_t p);

/// Jordan profile of ad(x). Throws VectorInDerivedAlgebra when x lies in C^1 g.
CharSequence char_sequence_of_vector(const LieAlgebra& g, const Vector& x);

struct CharSequenceResult {
    CharSequence sequence;
    Vector witness;
};

/// Lexicographic maximum over basis vectors outside C^1 and 64 seeded random vectors with entries in -3..3.
CharSequenceResult char_sequence_with_witness(const LieAlgebra& g, std::uint64_t seed = kDefaultSeed);
CharSequence char_sequence(const LieAlgebra& g, std::uint64_t seed = kDefaultSeed);

bool is_p_filiform(const LieAlgebra& g, std::size_t p, std::uint64_t seed = kDefaultSeed);
/// Number of steps for the lower central series to reach 0. Throws NotNilpotent.
std::size_t nilindex(const LieAlgebra& g);

struct QuotientFingerprint {
    std::size_t dim = 0;
    std::size_t dim_derived = 0;
    std::size_t dim_center = 0;
    CharSequence char_sequence;
    friend bool operator==(const QuotientFingerprint&, const QuotientFingerprint&) = default;
};

/// Field order is fixed; key() renders the fields in this order.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t dim_derived = 0;
    bool derived_abelian = false;
    std::size_t dim_center = 0;
    CharSequence char_sequence;
    std::vector<std::size_t> lower_central_dims;
    std::vector<std::size_t> derived_dims;
    std::size_t dim_der = 0;
    TorusSignature torus;
    QuotientFingerprint quotient;  // g / Z(g)

    [[nodiscard]] std::string key() const;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& g, std::uint64_t seed = kDefaultSeed);

struct Distinction {
    std::vector<std::vector<std::size_t>> classes;              // indices grouped by equal fingerprint
    std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // i < j within a class
};

Distinction pairwise_distinguish(const std::vector<Fingerprint>& prints);
Distinction pairwise_distinguish(const std::vector<LieAlgebra>& entries, std::uint64_t seed = kDefaultSeed);

struct CoordinateIdeal {
    std::vector<std::size_t> indices;  // basis indices spanning the ideal
    Subspace ideal;
    CharSequence char_sequence;
    Fingerprint fingerprint;
};

/// Coordinate subspaces of dimension k that are ideals with the required characteristic sequence.
/// For dim g >= 6 and k >= 6 the candidates are X1..X6 plus k-6 of the remaining basis vectors,
/// otherwise every k-subset.
std::vector<CoordinateIdeal> scan_coordinate_ideals(const LieAlgebra& g, std::size_t k, const CharSequence& required,
                                                    std::uint64_t seed = kDefaultSeed);

}  // namespace nilform
