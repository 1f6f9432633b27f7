#include "nilform/lie_algebra.hpp"

#include "nilform/errors.hpp"
#include "nilform/parallel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace nilform {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : n_(dim), labels_(std::move(labels)), c_(dim * dim * dim) {
    if (labels_.empty())
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != dim) throw DimensionMismatch("LieAlgebra: label count");
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::out_of_range("LieAlgebra: unknown label " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
    if (i >= n_ || j >= n_ || value.size() != n_) throw DimensionMismatch("set_bracket: index or length");
    if (i == j) {
        if (!is_zero(value)) throw std::invalid_argument("set_bracket: [x,x] must vanish");
        return;
    }
    for (std::size_t k = 0; k < n_; ++k) {
        c_[(i * n_ + j) * n_ + k] = value[k];
        c_[(j * n_ + i) * n_ + k] = -value[k];
    }
}

void LieAlgebra::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i >= n_ || j >= n_ || k >= n_) throw DimensionMismatch("add_bracket: index");
    if (i == j) throw std::invalid_argument("add_bracket: [x,x] must vanish");
    c_[(i * n_ + j) * n_ + k] += c;
    c_[(j * n_ + i) * n_ + k] -= c;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    return Vector(c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
                  c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
}

bool LieAlgebra::basis_bracket_is_zero(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < n_; ++k)
        if (!constant(i, j, k).is_zero()) return false;
    return true;
}

Vector LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != n_ || v.size() != n_) throw DimensionMismatch("bracket: vector length");
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j || v[j].is_zero()) continue;
            const Rational s = u[i] * v[j];
            for (std::size_t k = 0; k < n_; ++k) {
                const auto& c = constant(i, j, k);
                if (!c.is_zero()) out[k] += s * c;
            }
        }
    }
    return out;
}

Matrix LieAlgebra::ad(std::span<const Rational> u) const {
    if (u.size() != n_) throw DimensionMismatch("ad: vector length");
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                const auto& c = constant(i, j, k);
                if (!c.is_zero()) m(k, j) += u[i] * c;
            }
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(n_, i)); }

std::vector<std::pair<std::size_t, std::size_t>> LieAlgebra::nonzero_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!basis_bracket_is_zero(i, j)) out.emplace_back(i, j);
    return out;
}

namespace {

Vector jacobi_residual(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = g.dim();
    Vector r(n);
    auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
        // [[e_a, e_b], e_c]
        for (std::size_t l = 0; l < n; ++l) {
            const auto& x = g.constant(a, b, l);
            if (x.is_zero()) continue;
            for (std::size_t s = 0; s < n; ++s) {
                const auto& y = g.constant(l, c, s);
                if (!y.is_zero()) r[s] += x * y;
            }
        }
    };
    add(i, j, k);
    add(j, k, i);
    add(k, i, j);
    return r;
}

std::vector<std::array<std::size_t, 3>> triples(std::size_t n) {
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
    return out;
}

}  // namespace

std::optional<JacobiFailure> jacobi_check_serial(const LieAlgebra& g) {
    for (const auto& [i, j, k] : triples(g.dim())) {
        Vector r = jacobi_residual(g, i, j, k);
        if (!is_zero(r)) return JacobiFailure{i, j, k, std::move(r)};
    }
    return std::nullopt;
}

std::optional<JacobiFailure> jacobi_check(const LieAlgebra& g) {
    const auto ts = triples(g.dim());
    const auto first = parallel_first_index(ts.size(), [&](std::size_t t) {
        return !is_zero(jacobi_residual(g, ts[t][0], ts[t][1], ts[t][2]));
    });
    if (!first) return std::nullopt;
    const auto& [i, j, k] = ts[*first];
    return JacobiFailure{i, j, k, jacobi_residual(g, i, j, k)};
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& t) {
    const std::size_t n = g.dim();
    if (t.rows() != n || t.cols() != n) throw DimensionMismatch("change_basis: transform shape");
    const Matrix tinv = inverse(t);
    LieAlgebra out(n, g.labels());
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(t.column(j));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vector w = g.bracket(cols[a], cols[b]);
            if (is_zero(w)) continue;
            out.set_bracket(a, b, tinv.apply(w));
        }
    return out;
}

Subspace bracket_space(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vector> vs;
    const auto av = a.vectors();
    const auto bv = b.vectors();
    for (const auto& u : av)
        for (const auto& v : bv) {
            Vector w = g.bracket(u, v);
            if (!is_zero(w)) vs.push_back(std::move(w));
        }
    return Subspace::span(g.dim(), vs);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
    std::vector<Vector> vs;
    for (const auto& [i, j] : g.nonzero_pairs()) vs.push_back(g.bracket_basis(i, j));
    return Subspace::span(g.dim(), vs);
}

Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // x is central iff sum_i x_i c_ij^k = 0 for all j, k
    Matrix stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) stacked(j * n + k, i) = g.constant(i, j, k);
    return Subspace::span(n, kernel_basis(stacked));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    const Subspace whole = Subspace::whole(g.dim());
    std::vector<Subspace> out{whole};
    while (out.back().dim() > 0) {
        Subspace next = bracket_space(g, whole, out.back());
        if (next.dim() == out.back().dim()) break;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
    std::vector<Subspace> out{Subspace::whole(g.dim())};
    while (out.back().dim() > 0) {
        Subspace next = bracket_space(g, out.back(), out.back());
        if (next.dim() == out.back().dim()) break;
        out.push_back(std::move(next));
    }
    return out;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_space(g, s, s)); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
    return s.contains(bracket_space(g, Subspace::whole(g.dim()), s));
}

bool is_abelian(const LieAlgebra& g) { return g.nonzero_pairs().empty(); }

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) {
    if (ideal.ambient() != g.dim()) throw DimensionMismatch("quotient: ambient dimension");
    if (!is_ideal(g, ideal)) throw NotAnIdeal("quotient: subspace is not an ideal");
    const std::size_t n = g.dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) {
            comp.push_back(i);
            labels.push_back(g.label(i));
        }
    LieAlgebra q(comp.size(), labels);
    const Matrix& basis = ideal.basis();
    for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = a + 1; b < comp.size(); ++b) {
            Vector w = g.bracket_basis(comp[a], comp[b]);
            for (std::size_t r = 0; r < ideal.dim(); ++r) {
                const Rational f = w[ideal.pivots()[r]];
                if (!f.is_zero()) axpy(w, -f, basis.row(r));
            }
            Vector v(comp.size());
            for (std::size_t c = 0; c < comp.size(); ++c) v[c] = w[comp[c]];
            if (!is_zero(v)) q.set_bracket(a, b, v);
        }
    return q;
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& sub) {
    if (!is_subalgebra(g, sub)) throw NotAnIdeal("restrict_to: subspace is not a subalgebra");
    const auto vs = sub.vectors();
    LieAlgebra out(vs.size());
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            Vector w = g.bracket(vs[a], vs[b]);
            if (!is_zero(w)) out.set_bracket(a, b, sub.coordinates(w));
        }
    return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t n1 = a.dim(), n2 = b.dim();
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(l + "'");
    LieAlgebra out(n1 + n2, labels);
    for (const auto& [i, j] : a.nonzero_pairs())
        for (std::size_t k = 0; k < n1; ++k)
            if (!a.constant(i, j, k).is_zero()) out.add_bracket(i, j, k, a.constant(i, j, k));
    for (const auto& [i, j] : b.nonzero_pairs())
        for (std::size_t k = 0; k < n2; ++k)
            if (!b.constant(i, j, k).is_zero()) out.add_bracket(n1 + i, n1 + j, n1 + k, b.constant(i, j, k));
    return out;
}

bool has_abelian_direct_factor(const LieAlgebra& g) {
    if (g.dim() == 0) return false;
    return !derived_subalgebra(g).contains(center(g));
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

LieAlgebra heisenberg(std::size_t k) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
    labels.push_back("z");
    LieAlgebra h(2 * k + 1, labels);
    for (std::size_t i = 0; i < k; ++i) h.add_bracket(i, k + i, 2 * k, 1);
    return h;
}

}  // namespace nilform
