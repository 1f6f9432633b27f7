#include "nilform/generic_law.hpp"

#include "nilform/errors.hpp"

#include <stdexcept>

namespace nilform {

namespace {

constexpr std::size_t X(std::size_t i) { return i - 1; }
constexpr std::size_t Y(std::size_t i) { return 5 + i; }


std::vector<Vector> chain(const LieAlgebra& g, const Vector& x1, const Vector& x2) {
    std::vector<Vector> xs{x1, x2};
    for (int k = 3; k <= 6; ++k) xs.push_back(g.bracket(x1, xs.back()));
    return xs;
}

Matrix assemble(const std::vector<Vector>& columns) { return Matrix::from_columns(columns, columns.front().size()); }

void require_template_dim(const LieAlgebra& g, std::size_t min_dim, const char* what) {
    if (g.dim() < min_dim) throw InvalidDimension(std::string(what) + ": dimension too small");
}

}  // namespace

GenericN5Law::GenericN5Law(std::size_t dim) : n(dim) {
    if (dim < 6) throw InvalidDimension("GenericN5Law: n >= 6 required");
    const std::size_t r = dim - 6;
    d.assign(r, Rational());
    e = f = m = p = d;
    a = Matrix(r, r);
}

std::vector<std::string> template_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= 6 && i <= n; ++i) labels.push_back("X" + std::to_string(i));
    for (std::size_t i = 1; i + 6 <= n; ++i) labels.push_back("Y" + std::to_string(i));
    return labels;
}

LieAlgebra instantiate(const GenericN5Law& t) {
    const std::size_t n = t.n;
    const std::size_t r = t.y_count();
    LieAlgebra g(n, template_labels(n));
    for (std::size_t j = 2; j <= 5; ++j) g.add_bracket(X(1), X(j), X(j + 1), 1);
    for (std::size_t i = 1; i <= r; ++i) {
        const auto& di = t.d[i - 1];
        const auto& ei = t.e[i - 1];
        const auto& fi = t.f[i - 1];
        g.add_bracket(Y(i), X(4), X(6), di);
        g.add_bracket(Y(i), X(3), X(5), di);
        g.add_bracket(Y(i), X(3), X(6), ei);
        g.add_bracket(Y(i), X(2), X(4), di);
        g.add_bracket(Y(i), X(2), X(5), ei);
        g.add_bracket(Y(i), X(2), X(6), fi);
    }
    for (std::size_t k = 1; k <= r; ++k) {
        g.add_bracket(X(5), X(2), Y(k), t.m[k - 1]);
        g.add_bracket(X(3), X(4), Y(k), t.m[k - 1]);
        g.add_bracket(X(3), X(2), Y(k), t.p[k - 1]);
    }
    g.add_bracket(X(5), X(2), X(6), t.n6);
    g.add_bracket(X(3), X(4), X(6), t.n6);
    g.add_bracket(X(4), X(2), X(6), t.o6);
    g.add_bracket(X(3), X(2), X(5), t.o6);
    g.add_bracket(X(3), X(2), X(6), t.p6);
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) g.add_bracket(Y(i), Y(j), X(6), t.a(i - 1, j - 1));
    return g;
}

std::optional<GenericN5Law> template_match(const LieAlgebra& g) {
    if (g.dim() < 6) return std::nullopt;
    GenericN5Law t(g.dim());
    const std::size_t r = t.y_count();
    for (std::size_t i = 1; i <= r; ++i) {
        t.d[i - 1] = g.constant(Y(i), X(4), X(6));
        t.e[i - 1] = g.constant(Y(i), X(3), X(6));
        t.f[i - 1] = g.constant(Y(i), X(2), X(6));
        t.m[i - 1] = g.constant(X(5), X(2), Y(i));
        t.p[i - 1] = g.constant(X(3), X(2), Y(i));
        for (std::size_t j = i + 1; j <= r; ++j) t.a(i - 1, j - 1) = g.constant(Y(i), Y(j), X(6));
    }
    t.n6 = g.constant(X(5), X(2), X(6));
    t.o6 = g.constant(X(4), X(2), X(6));
    t.p6 = g.constant(X(3), X(2), X(6));
    if (!(instantiate(t) == g)) return std::nullopt;
    return t;
}

GenericN5Law random_reduced_law(std::size_t n, Rng& rng) {
    GenericN5Law t(n);
    const std::size_t r = t.y_count();
    for (std::size_t i = 0; i < r; ++i) {
        t.d[i] = i == 0 ? rng.rational() : Rational();
        t.e[i] = rng.rational();
        t.f[i] = rng.rational();
        for (std::size_t j = i + 1; j < r; ++j) t.a(i, j) = rng.rational();
    }
    t.o6 = rng.rational();
    t.p6 = rng.rational();
    return t;
}

TypeIParams random_type_i(Rng& rng) {
    TypeIParams p;
    for (std::size_t i = 2; i <= 8; ++i) p.a[i] = rng.rational();
    p.a[2] = rng.nonzero_rational();
    for (std::size_t i = 1; i <= 5; ++i) p.b[i] = rng.rational();
    p.b[1] = rng.nonzero_rational();
    p.b[4] = rng.nonzero_rational();
    return p;
}

TypeIIParams random_type_ii(Rng& rng) {
    TypeIIParams p;
    for (std::size_t i = 1; i <= 8; ++i) p.a[i] = rng.rational();
    p.a[1] = rng.nonzero_rational();
    p.b2 = rng.nonzero_rational();
    p.b3 = rng.rational();
    p.b7 = rng.rational();
    p.c2 = rng.nonzero_rational();
    p.c3 = rng.rational();
    return p;
}

BasisChange type_i_change(const LieAlgebra& g, const TypeIParams& p) {
    require_template_dim(g, 8, "type_i_change");
    const std::size_t n = g.dim();
    Vector x1 = unit_vector(n, X(1));
    Vector x2(n);
    for (std::size_t i = 2; i <= 6; ++i) x2[X(i)] = p.a[i];
    x2[Y(1)] = p.a[7];
    x2[Y(2)] = p.a[8];
    std::vector<Vector> cols = chain(g, x1, x2);
    Vector y1(n), y2(n);
    y1[Y(1)] = p.b[1];
    y1[Y(2)] = p.b[2];
    y1[X(6)] = p.b[3];
    y2[Y(2)] = p.b[4];
    y2[X(6)] = p.b[5];
    cols.push_back(y1);
    cols.push_back(y2);
    for (std::size_t i = 3; i + 6 <= n; ++i) cols.push_back(unit_vector(n, Y(i)));
    return {assemble(cols), BasisChangeType::I};
}

namespace {

// Adds a combination of the slot vectors to main so that the listed components of [x1, main'] vanish
// (all components when rows is empty).
Vector corrected(const LieAlgebra& g, const Vector& x1, const Vector& main, const std::vector<std::size_t>& slots,
                 std::vector<std::size_t> rows = {}) {
    const std::size_t n = g.dim();
    if (rows.empty())
        for (std::size_t r = 0; r < n; ++r) rows.push_back(r);
    Matrix system(rows.size(), slots.size());
    for (std::size_t c = 0; c < slots.size(); ++c) {
        const Vector col = g.bracket(x1, unit_vector(n, slots[c]));
        for (std::size_t r = 0; r < rows.size(); ++r) system(r, c) = col[rows[r]];
    }
    const Vector full = g.bracket(x1, main);
    Vector rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rhs[r] = -full[rows[r]];
    const auto u = solve(system, rhs);
    if (!u) throw std::runtime_error("type_ii_change: no template-preserving correction");
    Vector out = main;
    for (std::size_t c = 0; c < slots.size(); ++c) out[slots[c]] += (*u)[c];
    return out;
}

}  // namespace

BasisChange type_ii_change(const LieAlgebra& g, const TypeIIParams& p) {
    require_template_dim(g, 8, "type_ii_change");
    const std::size_t n = g.dim();
    Vector x1(n);
    for (std::size_t i = 1; i <= 6; ++i) x1[X(i)] = p.a[i];
    x1[Y(1)] = p.a[7];
    x1[Y(2)] = p.a[8];
    const Vector x2 = unit_vector(n, X(2));
    std::vector<Vector> cols = chain(g, x1, x2);
    Vector y1(n), y2(n);
    y1[Y(1)] = p.b2;
    y1[Y(2)] = p.b7;
    y1[X(6)] = p.b3;
    y2[Y(2)] = p.c2;
    y2[X(6)] = p.c3;
    cols.push_back(corrected(g, x1, y1, {X(3), X(4), X(5)}));
    cols.push_back(corrected(g, x1, y2, {X(4), X(5)}));
    for (std::size_t i = 3; i + 6 <= n; ++i) cols.push_back(corrected(g, x1, unit_vector(n, Y(i)), {X(5)}, {X(6)}));
    return {assemble(cols), BasisChangeType::II};
}

BasisChange type_iii_change(const LieAlgebra& g, const std::vector<Rational>& alpha) {
    require_template_dim(g, 11, "type_iii_change");
    if (alpha.size() < 8) throw DimensionMismatch("type_iii_change: alpha[1..7] required");
    Matrix t = Matrix::identity(g.dim());
    for (std::size_t i = 1; i <= 3; ++i) {
        t(Y(4), Y(i)) = alpha[2 * i - 1];
        t(Y(5), Y(i)) = alpha[2 * i];
    }
    t(Y(5), Y(4)) = alpha[7];
    return {t, BasisChangeType::III};
}

BasisChange type_iv_change(const LieAlgebra& g, const Rational& alpha, const Rational& beta, const Rational& gamma) {
    require_template_dim(g, 9, "type_iv_change");
    const std::size_t n = g.dim();
    Vector x2 = unit_vector(n, X(2));
    x2[Y(3)] = alpha;
    std::vector<Vector> cols = chain(g, unit_vector(n, X(1)), x2);
    Vector y1 = unit_vector(n, Y(1));
    y1[Y(3)] = beta;
    Vector y2 = unit_vector(n, Y(2));
    y2[Y(3)] = gamma;
    cols.push_back(y1);
    cols.push_back(y2);
    for (std::size_t i = 3; i + 6 <= n; ++i) cols.push_back(unit_vector(n, Y(i)));
    return {assemble(cols), BasisChangeType::IV};
}

const std::vector<std::string>& tracked_names() {
    static const std::vector<std::string> kNames = {"o6", "p6", "d1", "e1", "f1", "e2", "f2", "a12", "a1j", "a2j"};
    return kNames;
}

bool tracked_equal(const TrackedConstants& x, const TrackedConstants& y, std::size_t k) {
    switch (k) {
        case 0: return x.o6 == y.o6;
        case 1: return x.p6 == y.p6;
        case 2: return x.d1 == y.d1;
        case 3: return x.e1 == y.e1;
        case 4: return x.f1 == y.f1;
        case 5: return x.e2 == y.e2;
        case 6: return x.f2 == y.f2;
        case 7: return x.a12 == y.a12;
        case 8: return x.a1j == y.a1j;
        case 9: return x.a2j == y.a2j;
        default: throw std::out_of_range("tracked_equal: index");
    }
}

TrackedConstants read_tracked(const LieAlgebra& g) {
    require_template_dim(g, 8, "read_tracked");
    TrackedConstants c;
    c.o6 = g.constant(X(4), X(2), X(6));
    c.p6 = g.constant(X(3), X(2), X(6));
    c.d1 = g.constant(Y(1), X(4), X(6));
    c.e1 = g.constant(Y(1), X(3), X(6));
    c.f1 = g.constant(Y(1), X(2), X(6));
    c.e2 = g.constant(Y(2), X(3), X(6));
    c.f2 = g.constant(Y(2), X(2), X(6));
    c.a12 = g.constant(Y(1), Y(2), X(6));
    for (std::size_t j = 3; j + 6 <= g.dim(); ++j) {
        c.a1j.push_back(g.constant(Y(1), Y(j), X(6)));
        c.a2j.push_back(g.constant(Y(2), Y(j), X(6)));
    }
    return c;
}

TrackedConstants type_i_formulas(const GenericN5Law& t, const TypeIParams& p) {
    const auto& a = p.a;
    const auto& b = p.b;
    const Rational d1 = t.d[0], e1 = t.e[0], e2 = t.e[1], f1 = t.f[0], f2 = t.f[1], a12 = t.a(0, 1);
    TrackedConstants c;
    c.o6 = a[2] * t.o6 - a[7] * d1;
    c.p6 = a[2] * t.p6 - a[7] * e1 - a[8] * e2;
    c.d1 = b[1] * d1;
    c.e1 = b[1] * e1 + b[2] * e2;
    c.f1 = b[1] * f1 + b[2] * f2 + b[1] * a[8] * a12 / a[2];
    c.e2 = b[4] * e2;
    c.f2 = b[4] * f2 - a[7] * b[4] * a12 / a[2];
    c.a12 = b[1] * b[4] * a12;
    for (std::size_t j = 2; j < t.y_count(); ++j) {
        c.a1j.push_back((b[1] * t.a(0, j) + b[2] * t.a(1, j)) / a[2]);
        c.a2j.push_back(b[4] * t.a(1, j) / a[2]);
    }
    return c;
}

TrackedConstants type_i_formulas_expanded(const GenericN5Law& t, const TypeIParams& p) {
    TrackedConstants c = type_i_formulas(t, p);
    const auto& a = p.a;
    const auto& b = p.b;
    const Rational a12 = t.a(0, 1);
    c.f1 = b[1] * t.f[0] + b[2] * t.f[1] + (b[1] * a[8] - b[2] * a[7]) * a12 / a[2];
    c.a12 = b[1] * b[4] * a12 / a[2];
    return c;
}

TrackedConstants type_ii_formulas(const GenericN5Law& t, const TypeIIParams& p) {
    const auto& a = p.a;
    const Rational a1 = a[1], a2 = a[2], a7 = a[7], a8 = a[8];
    const Rational b2 = p.b2, b7 = p.b7, c2 = p.c2;
    const Rational d1 = t.d[0], e1 = t.e[0], e2 = t.e[1], f1 = t.f[0], f2 = t.f[1], a12 = t.a(0, 1);
    const Rational o6 = t.o6, p6 = t.p6;
    const Rational a1p2 = pow(a1, 2), a1p3 = pow(a1, 3), a1p4 = pow(a1, 4), a1p5 = pow(a1, 5), a1p6 = pow(a1, 6);
    TrackedConstants c;
    c.o6 = o6 / a1p2;
    c.p6 = (a1 * p6 + 2 * a2 * o6 * o6 - 2 * a7 * d1 * o6) / a1p4;
    c.d1 = b2 * d1 / a1p2;
    c.e1 = (b2 * e1 + b7 * e2) / a1p3 + 2 * b2 * d1 * (a2 * o6 - a7 * d1) / a1p4;
    c.f1 = 5 * a7 * a7 * b2 * pow(d1, 3) / a1p6 - 10 * a2 * a7 * o6 * b2 * d1 * d1 / a1p6 +
           (b2 * f1 + b7 * f2) / a1p4 + 3 * a2 * o6 * (b2 * e1 + b7 * e2) / a1p5 +
           (5 * a2 * a2 * o6 * o6 * b2 / a1p6 + 2 * a2 * b2 * p6 / a1p5 - 5 * a7 * b2 * e1 / a1p5 -
            3 * a7 * b7 * e2 / a1p5 - 2 * b2 * a8 * e2 / a1p5) *
               d1;
    c.e2 = c2 * e2 / a1p3;
    c.f2 = c2 * (f2 / a1p4 + 3 * a2 * e2 * o6 / a1p5 - 3 * e2 * a7 * d1 / a1p5);
    c.a12 = b2 * c2 * a12 / a1p4;
    for (std::size_t j = 2; j < t.y_count(); ++j) {
        c.a1j.push_back((b2 * t.a(0, j) + b7 * t.a(1, j)) / a1p4 - a2 * b2 * d1 * t.e[j] / a1p5);
        c.a2j.push_back(c2 * t.a(1, j) / a1p4);
    }
    return c;
}

}  // namespace nilform
