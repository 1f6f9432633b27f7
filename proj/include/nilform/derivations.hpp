#pragma once

#include "nilform/lie_algebra.hpp"
#include "nilform/linalg.hpp"
#include "nilform/random.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilform {

/// Basis of Der(g). Each basis matrix has a 1 at its free unknown and 0 at the
/// other free unknowns, so coordinates of a derivation are read off directly.
struct DerivationSpace {
    std::size_t n = 0;
    std::vector<Matrix> basis;
    std::vector<std::size_t> free_unknowns;  // unknown a*n+b <-> D(a, b)

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
    [[nodiscard]] Vector coordinates(const Matrix& d) const;
    [[nodiscard]] Matrix combination(std::span<const Rational> coeffs) const;
};

/// Sparse rows of the constraint D[e_i,e_j] = [De_i,e_j] + [e_i,De_j], one per (i<j, k).
std::vector<SparseEchelon::Row> derivation_constraints(const LieAlgebra& g, std::size_t i, std::size_t j);

DerivationSpace derivation_space(const LieAlgebra& g);
DerivationSpace derivation_space_serial(const LieAlgebra& g);

bool is_derivation(const LieAlgebra& g, const Matrix& d);

/// Structure constants of Der(g) under the commutator, in the basis of derivation_space.
LieAlgebra derivation_algebra(const LieAlgebra& g);
LieAlgebra derivation_algebra(const DerivationSpace& der);

/// Weights of the diagonal derivations in the given basis.
struct WeightSignature {
    std::size_t rank = 0;
    std::vector<std::string> parameters;  // free parameters in basis order
    std::vector<LinearForm> weights;      // weight of each basis vector

    /// Distinct weights with multiplicities, sorted by LinearForm order.
    [[nodiscard]] std::vector<std::pair<LinearForm, std::size_t>> multiset() const;
};

/// Parameter name for a free basis index: f11 for X1, f22 for X2, mu_i for Y_i, w_<label> otherwise.
std::string weight_parameter_name(const LieAlgebra& g, std::size_t index);

WeightSignature diagonal_derivations(const LieAlgebra& g);
/// True iff e_i -> v_i e_i is a derivation. Throws DimensionMismatch.
bool verify_weight_vector(const LieAlgebra& g, const Vector& v);

struct CharNilpotency {
    bool nilpotent = false;
    std::optional<Matrix> witness;  // non-nilpotent derivation when nilpotent is false
    std::string witness_kind;       // "diagonal", "basis" or "random"
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    double log2_error_bound = 0;    // one-sided error bound of the randomized stage
};

/// Trial count at trace power k for a derivation algebra of an n-dimensional algebra.
std::size_t trace_trials(std::size_t n, std::size_t k);

CharNilpotency is_characteristically_nilpotent(const LieAlgebra& g, std::uint64_t seed = kDefaultSeed);
CharNilpotency is_characteristically_nilpotent(const LieAlgebra& g, const DerivationSpace& der,
                                               std::uint64_t seed = kDefaultSeed);

struct TowerLevel {
    std::size_t dim = 0;      // dim of the algebra at this level
    std::size_t dim_der = 0;  // dim of its derivation algebra
    bool char_nilpotent = false;
};

struct DerivationTower {
    std::vector<TowerLevel> levels;  // level 0 is g itself
    std::optional<std::size_t> index;
};

/// Levels 0..max_depth; index is the least k in 1..max_depth with Der^k(g) not characteristically nilpotent.
DerivationTower derivation_tower(const LieAlgebra& g, std::size_t max_depth, std::uint64_t seed = kDefaultSeed);
std::optional<std::size_t> derivation_tower_index(const LieAlgebra& g, std::size_t max_depth,
                                                  std::uint64_t seed = kDefaultSeed);

/// Basis-free torus data of Der(g) from a generic derivation D.
struct TorusSignature {
    std::size_t cartan_dim = 0;  // dim of the generalized 0-eigenspace of ad(D) on Der(g)
    std::size_t rank = 0;        // cartan_dim minus its nilpotent part
    std::vector<std::pair<std::size_t, std::size_t>> multiplicities;  // squarefree profile of char_poly(D)
    friend bool operator==(const TorusSignature&, const TorusSignature&) = default;
};

TorusSignature torus_signature(const DerivationSpace& der, std::uint64_t seed = kDefaultSeed);

}  // namespace nilform
