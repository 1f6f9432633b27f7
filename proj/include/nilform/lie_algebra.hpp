#pragma once

#include "nilform/linalg.hpp"
#include "nilform/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilform {

/// Finite-dimensional Lie algebra given by structure constants [e_i, e_j] = sum_k c_ij^k e_k.
/// Only the antisymmetric tensor is representable; set_bracket(i, j, v) also sets [e_j, e_i] = -v.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    /// Index of a basis label; throws std::out_of_range.
    [[nodiscard]] std::size_t index_of(const std::string& label) const;

    void set_bracket(std::size_t i, std::size_t j, const Vector& value);
    /// [e_i, e_j] += c e_k
    void add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& c);

    [[nodiscard]] const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    [[nodiscard]] Vector bracket_basis(std::size_t i, std::size_t j) const;
    [[nodiscard]] bool basis_bracket_is_zero(std::size_t i, std::size_t j) const;
    [[nodiscard]] Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;
    /// Matrix of ad(u) in the column convention: column j holds [u, e_j].
    [[nodiscard]] Matrix ad(std::span<const Rational> u) const;
    [[nodiscard]] Matrix ad_basis(std::size_t i) const;
    /// Pairs i<j with nonzero bracket, in lexicographic order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> nonzero_pairs() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;
};

struct JacobiFailure {
    std::size_t i, j, k;  // zero-based, i < j < k
    Vector residual;
};

/// First failing triple in lexicographic order, or nullopt.
std::optional<JacobiFailure> jacobi_check(const LieAlgebra& g);
std::optional<JacobiFailure> jacobi_check_serial(const LieAlgebra& g);

enum class BasisChangeType { I, II, III, IV, General };

/// New basis vectors are the columns of t, in old coordinates.
struct BasisChange {
    Matrix t;
    BasisChangeType type = BasisChangeType::General;
};

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& t);
inline LieAlgebra change_basis(const LieAlgebra& g, const BasisChange& b) { return change_basis(g, b.t); }

Subspace derived_subalgebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
/// Span of [u, v] for u in a, v in b.
Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b);
/// C^0 = g, C^{k+1} = [g, C^k], ending with the first zero term (or a repeated term).
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
std::vector<Subspace> derived_series(const LieAlgebra& g);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_abelian(const LieAlgebra& g);

/// Induced bracket on the complement spanned by non-pivot standard vectors. Throws NotAnIdeal.
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);
/// Structure constants of a subalgebra in its rref basis. Throws NotAnIdeal if not closed.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& sub);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
bool has_abelian_direct_factor(const LieAlgebra& g);

LieAlgebra abelian(std::size_t n);
/// Heisenberg algebra of dimension 2k+1: [x_i, y_i] = z.
LieAlgebra heisenberg(std::size_t k);

}  // namespace nilform
