#pragma once

#include "nilform/lie_algebra.hpp"
#include "nilform/random.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nilform {

/// Parameters of the (n-5)-filiform template on X1..X6, Y1..Y_{n-6}:
///   [X1,Xj] = X_{j+1} (j=2..5)
///   [Yi,X4] = d_i X6, [Yi,X3] = d_i X5 + e_i X6, [Yi,X2] = d_i X4 + e_i X5 + f_i X6
///   [X5,X2] = [X3,X4] = sum m^k Yk + n6 X6, [X4,X2] = o6 X6
///   [X3,X2] = sum p^k Yk + o6 X5 + p6 X6, [Yi,Yj] = a_ij X6
/// Vectors are zero-based (d[0] is d_1); a is (n-6)x(n-6) with only i<j read.
struct GenericN5Law {
    std::size_t n = 0;
    std::vector<Rational> d, e, f, m, p;
    Rational n6, o6, p6;
    Matrix a;

    explicit GenericN5Law(std::size_t dim = 6);
    [[nodiscard]] std::size_t y_count() const { return n - 6; }
    friend bool operator==(const GenericN5Law& x, const GenericN5Law& y) = default;
};

std::vector<std::string> template_labels(std::size_t n);
LieAlgebra instantiate(const GenericN5Law& t);
/// Inverse of instantiate; nullopt when some bracket falls outside the template.
std::optional<GenericN5Law> template_match(const LieAlgebra& g);

/// Random law with m^k = p^k = 0, n6 = 0, d_i = 0 for i >= 2 (satisfies Jacobi).
GenericN5Law random_reduced_law(std::size_t n, Rng& rng);

/// a[2..8] used (index = subscript), b[1..5]; a2, b1, b4 nonzero.
struct TypeIParams {
    std::vector<Rational> a = std::vector<Rational>(9);
    std::vector<Rational> b = std::vector<Rational>(6);
};
/// a[1..8], b2, b3, b7, c2, c3 chosen; b4..b6, c4, c5, delta_j solved so [X1', Y'] = 0.
struct TypeIIParams {
    std::vector<Rational> a = std::vector<Rational>(9);
    Rational b2 = 1, b3, b7, c2 = 1, c3;
};

TypeIParams random_type_i(Rng& rng);
TypeIIParams random_type_ii(Rng& rng);

/// X1' = X1, X2' = sum_{i=2..6} a_i X_i + a7 Y1 + a8 Y2, X_{k+1}' = [X1', X_k'],
/// Y1' = b1 Y1 + b2 Y2 + b3 X6, Y2' = b4 Y2 + b5 X6, other Y fixed.
BasisChange type_i_change(const LieAlgebra& g, const TypeIParams& p);
/// X1' = sum_{i=1..6} a_i X_i + a7 Y1 + a8 Y2, X2' = X2, X_{k+1}' = [X1', X_k'],
/// Y1' = b2 Y1 + b7 Y2 + b3 X6 + (X3..X5 part), Y2' = c2 Y2 + c3 X6 + (X4, X5 part), Y_j' = Y_j + delta_j X5,
/// delta_j cancelling the X6 component of [X1', Y_j].
/// Throws std::runtime_error if the corrections cannot be solved.
BasisChange type_ii_change(const LieAlgebra& g, const TypeIIParams& p);
/// Y_i' = Y_i + alpha_{2i-1} Y4 + alpha_{2i} Y5 (i = 1..3), Y4' = Y4 + alpha_7 Y5; alpha[1..7].
BasisChange type_iii_change(const LieAlgebra& g, const std::vector<Rational>& alpha);
/// X2' = X2 + alpha Y3, Y1' = Y1 + beta Y3, Y2' = Y2 + gamma Y3, X_{k+1}' = [X1, X_k'].
BasisChange type_iv_change(const LieAlgebra& g, const Rational& alpha, const Rational& beta, const Rational& gamma);

/// The constants tracked by the basis-change formulas.
struct TrackedConstants {
    Rational o6, p6, d1, e1, f1, e2, f2, a12;
    std::vector<Rational> a1j, a2j;  // j = 3..n-6
    friend bool operator==(const TrackedConstants& x, const TrackedConstants& y) = default;
};

/// Names of the ten tracked formulas in a fixed order.
const std::vector<std::string>& tracked_names();
/// Value of tracked formula k (j-indexed families compared as whole vectors).
bool tracked_equal(const TrackedConstants& x, const TrackedConstants& y, std::size_t k);

TrackedConstants read_tracked(const LieAlgebra& g);
TrackedConstants type_i_formulas(const GenericN5Law& t, const TypeIParams& p);
/// Closed forms obtained by direct expansion (differ from type_i_formulas in f1 and a12).
TrackedConstants type_i_formulas_expanded(const GenericN5Law& t, const TypeIParams& p);
TrackedConstants type_ii_formulas(const GenericN5Law& t, const TypeIIParams& p);

}  // namespace nilform
