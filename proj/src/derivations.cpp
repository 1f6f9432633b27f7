#include "nilform/derivations.hpp"

#include "nilform/errors.hpp"
#include "nilform/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace nilform {

Vector DerivationSpace::coordinates(const Matrix& d) const {
    Vector out;
    out.reserve(free_unknowns.size());
    for (const auto u : free_unknowns) out.push_back(d(u / n, u % n));
    return out;
}

Matrix DerivationSpace::combination(std::span<const Rational> coeffs) const {
    if (coeffs.size() != basis.size()) throw DimensionMismatch("DerivationSpace::combination: coefficient count");
    Matrix out(n, n);
    for (std::size_t s = 0; s < basis.size(); ++s)
        if (!coeffs[s].is_zero()) out += basis[s] * coeffs[s];
    return out;
}

std::vector<SparseEchelon::Row> derivation_constraints(const LieAlgebra& g, std::size_t i, std::size_t j) {
    const std::size_t n = g.dim();
    std::vector<SparseEchelon::Row> rows;
    for (std::size_t k = 0; k < n; ++k) {
        SparseEchelon::Row row;
        for (std::size_t l = 0; l < n; ++l) {
            const auto& c = g.constant(i, j, l);
            if (!c.is_zero()) row[k * n + l] += c;
        }
        for (std::size_t a = 0; a < n; ++a) {
            const auto& c1 = g.constant(a, j, k);
            if (!c1.is_zero()) row[a * n + i] -= c1;
            const auto& c2 = g.constant(i, a, k);
            if (!c2.is_zero()) row[a * n + j] -= c2;
        }
        std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

DerivationSpace solve_constraints(std::size_t n, const std::vector<std::vector<SparseEchelon::Row>>& blocks) {
    SparseEchelon ech(n * n);
    for (const auto& block : blocks)
        for (const auto& row : block) ech.add_row(row);
    DerivationSpace out;
    out.n = n;
    out.free_unknowns = ech.free_columns();
    for (const auto& v : ech.kernel_basis()) {
        Matrix d(n, n);
        for (std::size_t u = 0; u < v.size(); ++u) d(u / n, u % n) = v[u];
        out.basis.push_back(std::move(d));
    }
    return out;
}

}  // namespace

DerivationSpace derivation_space(const LieAlgebra& g) {
    const auto pairs = all_pairs(g.dim());
    const auto blocks = parallel_map(pairs.size(), [&](std::size_t p) {
        return derivation_constraints(g, pairs[p].first, pairs[p].second);
    });
    return solve_constraints(g.dim(), blocks);
}

DerivationSpace derivation_space_serial(const LieAlgebra& g) {
    const auto pairs = all_pairs(g.dim());
    const auto blocks = serial_map(pairs.size(), [&](std::size_t p) {
        return derivation_constraints(g, pairs[p].first, pairs[p].second);
    });
    return solve_constraints(g.dim(), blocks);
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
    const std::size_t n = g.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionMismatch("is_derivation: matrix shape");
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(d.column(i));
    for (std::size_t i = 0; i < n; ++i) {
        const auto ei = unit_vector(n, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto ej = unit_vector(n, j);
            const Vector lhs = d.apply(g.bracket_basis(i, j));
            const Vector rhs = g.bracket(images[i], ej) + g.bracket(ei, images[j]);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

LieAlgebra derivation_algebra(const DerivationSpace& der) {
    const std::size_t r = der.dim();
    LieAlgebra out(r);
    const auto pairs = all_pairs(r);
    const auto values = parallel_map(pairs.size(), [&](std::size_t p) {
        return der.coordinates(commutator(der.basis[pairs[p].first], der.basis[pairs[p].second]));
    });
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (!is_zero(values[p])) out.set_bracket(pairs[p].first, pairs[p].second, values[p]);
    return out;
}

LieAlgebra derivation_algebra(const LieAlgebra& g) { return derivation_algebra(derivation_space(g)); }

std::vector<std::pair<LinearForm, std::size_t>> WeightSignature::multiset() const {
    std::map<LinearForm, std::size_t> counts;
    for (const auto& w : weights) ++counts[w];
    return {counts.begin(), counts.end()};
}

std::string weight_parameter_name(const LieAlgebra& g, std::size_t index) {
    const auto& label = g.label(index);
    if (label == "X1") return "f11";
    if (label == "X2") return "f22";
    if (label.size() > 1 && label[0] == 'Y' && std::all_of(label.begin() + 1, label.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; }))
        return "mu_" + label.substr(1);
    return "w_" + label;
}

WeightSignature diagonal_derivations(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // columns reversed so that elimination runs from the last basis vector and the free
    // parameters sit at the earliest indices
    SparseEchelon ech(n);
    for (const auto& [i, j] : g.nonzero_pairs())
        for (std::size_t k = 0; k < n; ++k) {
            if (g.constant(i, j, k).is_zero()) continue;
            SparseEchelon::Row row;
            row[n - 1 - i] += 1;
            row[n - 1 - j] += 1;
            row[n - 1 - k] -= 1;
            std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
            if (!row.empty()) ech.add_row(std::move(row));
        }
    const auto kernel = ech.kernel_basis();
    const auto free = ech.free_columns();

    std::vector<std::pair<std::size_t, std::size_t>> order;  // (original index, kernel slot)
    for (std::size_t s = 0; s < free.size(); ++s) order.emplace_back(n - 1 - free[s], s);
    std::sort(order.begin(), order.end());

    WeightSignature out;
    out.rank = kernel.size();
    out.weights.assign(n, LinearForm());
    for (const auto& [index, slot] : order) {
        const auto name = weight_parameter_name(g, index);
        out.parameters.push_back(name);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& c = kernel[slot][n - 1 - i];
            if (!c.is_zero()) out.weights[i] += LinearForm::variable(name, c);
        }
    }
    return out;
}

bool verify_weight_vector(const LieAlgebra& g, const Vector& v) {
    if (v.size() != g.dim()) throw DimensionMismatch("verify_weight_vector: length " + std::to_string(v.size()));
    return is_derivation(g, Matrix::diagonal(v));
}

std::size_t trace_trials(std::size_t n, std::size_t k) {
    const double per_trial = std::log2((4.0 * double(n) * double(k) + 1.0) / double(k));
    const auto needed = static_cast<std::size_t>(std::ceil(41.0 / per_trial));
    return std::max<std::size_t>(2 * (k + 1), needed);
}

namespace {

bool matrix_nilpotent(const Matrix& d) {
    Matrix p = d;
    for (std::size_t k = 1; k < d.rows() && !p.is_zero(); ++k) p = p * d;
    return p.is_zero();
}

}  // namespace

CharNilpotency is_characteristically_nilpotent(const LieAlgebra& g, std::uint64_t seed) {
    return is_characteristically_nilpotent(g, derivation_space(g), seed);
}

CharNilpotency is_characteristically_nilpotent(const LieAlgebra& g, const DerivationSpace& der, std::uint64_t seed) {
    const std::size_t n = g.dim();
    CharNilpotency out;
    out.seed = seed;

    const auto weights = diagonal_derivations(g);
    if (weights.rank > 0) {
        std::map<std::string, Rational> values;
        for (std::size_t s = 0; s < weights.parameters.size(); ++s) values[weights.parameters[s]] = s == 0 ? 1 : 0;
        Vector diag;
        for (const auto& w : weights.weights) diag.push_back(w.evaluate(values));
        out.witness = Matrix::diagonal(diag);
        out.witness_kind = "diagonal";
        return out;
    }
    for (const auto& d : der.basis)
        if (!matrix_nilpotent(d)) {
            out.witness = d;
            out.witness_kind = "basis";
            return out;
        }

    Rng rng(seed);
    double worst = -1e300;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t trials = trace_trials(n, k);
        const auto bound = static_cast<std::int64_t>(2 * n * k);
        for (std::size_t t = 0; t < trials; ++t) {
            Vector coeffs;
            for (std::size_t s = 0; s < der.dim(); ++s) coeffs.push_back(Rational(static_cast<long>(rng.uniform(-bound, bound))));
            const Matrix d = der.combination(coeffs);
            ++out.trials;
            if (!trace(power(d, static_cast<unsigned>(k))).is_zero()) {
                out.witness = d;
                out.witness_kind = "random";
                return out;
            }
        }
        worst = std::max(worst, double(trials) * std::log2(double(k) / (4.0 * double(n) * double(k) + 1.0)));
    }
    out.nilpotent = true;
    out.log2_error_bound = n == 0 ? 0 : worst;
    return out;
}

DerivationTower derivation_tower(const LieAlgebra& g, std::size_t max_depth, std::uint64_t seed) {
    DerivationTower out;
    LieAlgebra current = g;
    for (std::size_t level = 0; level <= max_depth; ++level) {
        const auto der = derivation_space(current);
        const auto cn = is_characteristically_nilpotent(current, der, seed + level);
        out.levels.push_back({current.dim(), der.dim(), cn.nilpotent});
        if (level >= 1 && !cn.nilpotent) {
            out.index = level;
            break;
        }
        if (level < max_depth) current = derivation_algebra(der);
    }
    return out;
}

std::optional<std::size_t> derivation_tower_index(const LieAlgebra& g, std::size_t max_depth, std::uint64_t seed) {
    return derivation_tower(g, max_depth, seed).index;
}

namespace {

SparseEchelon::Row flatten(const Matrix& m) {
    SparseEchelon::Row row;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) row[r * m.cols() + c] = m(r, c);
    return row;
}

// generalized kernel of a: ker a^j once the rank sequence stops dropping
std::vector<Vector> generalized_kernel(const Matrix& a) {
    Matrix p = a;
    std::size_t r = rank(p);
    while (r > 0) {
        Matrix next = p * a;
        const std::size_t rn = rank(next);
        if (rn == r) break;
        p = std::move(next);
        r = rn;
    }
    return kernel_basis(p);
}

TorusSignature torus_trial(const DerivationSpace& der, Rng& rng) {
    const std::size_t r = der.dim();
    const std::size_t n = der.n;
    TorusSignature sig;
    Vector coeffs;
    for (std::size_t s = 0; s < r; ++s) coeffs.push_back(Rational(static_cast<long>(rng.uniform(-1000, 1000))));
    const Matrix d = der.combination(coeffs);
    sig.multiplicities = squarefree_profile(char_poly(d));
    if (r == 0) return sig;

    Matrix ad(r, r);
    for (std::size_t s = 0; s < r; ++s) {
        const auto col = der.coordinates(commutator(d, der.basis[s]));
        for (std::size_t q = 0; q < r; ++q) ad(q, s) = col[q];
    }
    const auto h_coords = generalized_kernel(ad);
    sig.cartan_dim = h_coords.size();
    std::vector<Matrix> h;
    for (const auto& c : h_coords) h.push_back(der.combination(c));

    // associative closure of h and the identity
    SparseEchelon span(n * n);
    std::vector<Matrix> closure{Matrix::identity(n)};
    span.add_row(flatten(closure.front()));
    for (std::size_t q = 0; q < closure.size(); ++q)
        for (const auto& y : h) {
            Matrix w = y * closure[q];
            if (span.add_row(flatten(w))) closure.push_back(std::move(w));
        }

    Matrix pairing(closure.size(), h.size());
    for (std::size_t l = 0; l < closure.size(); ++l)
        for (std::size_t s = 0; s < h.size(); ++s) pairing(l, s) = trace(h[s] * closure[l]);
    sig.rank = rank(pairing);
    return sig;
}

std::size_t distinct_roots(const TorusSignature& s) {
    std::size_t total = 0;
    for (const auto& [mult, deg] : s.multiplicities) total += deg;
    return total;
}

}  // namespace

TorusSignature torus_signature(const DerivationSpace& der, std::uint64_t seed) {
    Rng rng(seed);
    std::optional<TorusSignature> best;
    for (int trial = 0; trial < 3; ++trial) {
        auto sig = torus_trial(der, rng);
        if (!best || sig.cartan_dim < best->cartan_dim ||
            (sig.cartan_dim == best->cartan_dim && distinct_roots(sig) > distinct_roots(*best)))
            best = std::move(sig);
    }
    return *best;
}

}  // namespace nilform
