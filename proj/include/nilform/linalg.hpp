#pragma once

#include "nilform/matrix.hpp"
#include "nilform/random.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilform {

struct Echelon {
    Matrix reduced;                   // reduced row-echelon form, same shape as the input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of row r, r < rank
};

/// Fraction-free (Bareiss) elimination followed by back-substitution to rref.
/// Pivot choice: leftmost nonzero column, smallest row index within it.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
std::vector<Vector> kernel_basis(const Matrix& a);

/// Inverse of a square matrix; throws SingularTransform.
Matrix inverse(const Matrix& a);
/// Entries uniform in -bound..bound, redrawn until the matrix is invertible.
Matrix random_invertible(std::size_t n, Rng& rng, long bound = 2);
/// Some solution of A x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Jordan block sizes of a nilpotent matrix, descending. Throws NotNilpotent.
std::vector<std::size_t> nilpotent_jordan_profile(const Matrix& a);
/// rank(A^k) for k = 0.. until the sequence stabilises.
std::vector<std::size_t> power_ranks(const Matrix& a);
/// Conjugate of a partition given by its part sizes.
std::vector<std::size_t> conjugate_partition(const std::vector<std::size_t>& parts);

/// Ascending-power polynomial over Q: p[0] + p[1] x + ...
using Polynomial = std::vector<Rational>;

/// det(xI - A) by Berkowitz's division-free recurrence; ascending coefficients, monic.
Polynomial char_poly(const Matrix& a);
Matrix evaluate(const Polynomial& p, const Matrix& a);
Rational evaluate(const Polynomial& p, const Rational& x);
std::string poly_to_string(const Polynomial& p, const std::string& var = "x");

void poly_trim(Polynomial& p);
Polynomial poly_derivative(const Polynomial& p);
Polynomial poly_monic(Polynomial p);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(Polynomial a, Polynomial b);
/// Squarefree factorisation (Yun): pairs (multiplicity, degree of the squarefree factor).
std::vector<std::pair<std::size_t, std::size_t>> squarefree_profile(const Polynomial& p);

/// Row-reduced basis of a subspace of Q^ambient.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : basis_(0, ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient);

    [[nodiscard]] std::size_t ambient() const { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] std::vector<Vector> vectors() const;
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// Coordinates of v in the rref basis (v must lie in the subspace).
    [[nodiscard]] Vector coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Incremental sparse row reducer; rows are kept with leading coefficient 1.
class SparseEchelon {
public:
    using Row = std::map<std::size_t, Rational>;

    explicit SparseEchelon(std::size_t cols) : cols_(cols) {}
    /// Returns true when the row increased the rank.
    bool add_row(Row row);
    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    /// Kernel basis, one vector per free column in ascending order.
    [[nodiscard]] std::vector<Vector> kernel_basis() const;
    [[nodiscard]] std::vector<std::size_t> free_columns() const;

private:
    std::size_t cols_;
    std::map<std::size_t, Row> pivots_;
};

/// Affine linear form over named parameters.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}
    static LinearForm variable(const std::string& name, Rational coeff = 1);

    [[nodiscard]] const std::map<std::string, Rational>& terms() const { return terms_; }
    [[nodiscard]] const Rational& constant() const { return constant_; }
    [[nodiscard]] Rational coefficient(const std::string& name) const;
    [[nodiscard]] bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
    [[nodiscard]] Rational evaluate(const std::map<std::string, Rational>& values) const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rational& s);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
    friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b);

    /// e.g. "3f11+f22", "mu_3", "0"; parameters ordered f11, f22, then by name with numeric suffixes.
    [[nodiscard]] std::string to_string() const;

private:
    std::map<std::string, Rational> terms_;
    Rational constant_;
};

/// Orders parameter names: f11, f22, mu_1, mu_2, ..., then anything else lexicographically.
bool parameter_less(const std::string& a, const std::string& b);

}  // namespace nilform
