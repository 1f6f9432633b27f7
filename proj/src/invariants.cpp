#include "nilform/invariants.hpp"

#include "nilform/errors.hpp"
#include "nilform/parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nilform {

std::string to_string(const CharSequence& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + ")";
}

CharSequence p_filiform_sequence(std::size_t n, std::size_t p) {
    if (p == 0 || p >= n) throw InvalidParameter("p_filiform_sequence: p out of range");
    CharSequence out{n - p};
    out.resize(p + 1, 1);
    return out;
}

CharSequence char_sequence_of_vector(const LieAlgebra& g, const Vector& x) {
    if (x.size() != g.dim()) throw DimensionMismatch("char_sequence_of_vector: vector length");
    if (derived_subalgebra(g).contains(x)) throw VectorInDerivedAlgebra("char_sequence_of_vector: vector lies in C1");
    return nilpotent_jordan_profile(g.ad(x));
}

CharSequenceResult char_sequence_with_witness(const LieAlgebra& g, std::uint64_t seed) {
    const std::size_t n = g.dim();
    CharSequenceResult best;
    if (n == 0) return best;
    const Subspace c1 = derived_subalgebra(g);

    std::vector<Vector> candidates;
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit_vector(n, i));
    Rng rng(seed);
    for (int t = 0; t < 64; ++t) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(static_cast<long>(rng.uniform(-3, 3))));
        candidates.push_back(std::move(v));
    }
    std::erase_if(candidates, [&](const Vector& v) { return c1.contains(v); });

    const auto profiles = parallel_map(candidates.size(), [&](std::size_t i) {
        return nilpotent_jordan_profile(g.ad(candidates[i]));
    });
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (best.witness.empty() || best.sequence < profiles[i]) {
            best.sequence = profiles[i];
            best.witness = candidates[i];
        }
    return best;
}

CharSequence char_sequence(const LieAlgebra& g, std::uint64_t seed) {
    return char_sequence_with_witness(g, seed).sequence;
}

bool is_p_filiform(const LieAlgebra& g, std::size_t p, std::uint64_t seed) {
    if (p == 0 || p >= g.dim()) return false;
    return char_sequence(g, seed) == p_filiform_sequence(g.dim(), p);
}

std::size_t nilindex(const LieAlgebra& g) {
    const auto lcs = lower_central_series(g);
    for (std::size_t k = 0; k < lcs.size(); ++k)
        if (lcs[k].dim() == 0) return k;
    throw NotNilpotent("nilindex: lower central series stalls");
}

namespace {

void join(std::ostringstream& os, const std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "." : "") << v[i];
}

}  // namespace

std::string Fingerprint::key() const {
    std::ostringstream os;
    os << "n=" << dim << ";c1=" << dim_derived << ";ab=" << (derived_abelian ? 1 : 0) << ";z=" << dim_center
       << ";cs=";
    join(os, char_sequence);
    os << ";lcs=";
    join(os, lower_central_dims);
    os << ";ds=";
    join(os, derived_dims);
    os << ";der=" << dim_der << ";torus=" << torus.cartan_dim << ":" << torus.rank << ":";
    for (std::size_t i = 0; i < torus.multiplicities.size(); ++i)
        os << (i ? "," : "") << torus.multiplicities[i].first << "^" << torus.multiplicities[i].second;
    os << ";q=" << quotient.dim << "." << quotient.dim_derived << "." << quotient.dim_center << ":";
    join(os, quotient.char_sequence);
    return os.str();
}

Fingerprint fingerprint(const LieAlgebra& g, std::uint64_t seed) {
    Fingerprint f;
    f.dim = g.dim();
    const Subspace c1 = derived_subalgebra(g);
    f.dim_derived = c1.dim();
    f.derived_abelian = bracket_space(g, c1, c1).dim() == 0;
    const Subspace z = center(g);
    f.dim_center = z.dim();
    f.char_sequence = char_sequence(g, seed);
    for (const auto& s : lower_central_series(g)) f.lower_central_dims.push_back(s.dim());
    for (const auto& s : derived_series(g)) f.derived_dims.push_back(s.dim());
    const auto der = derivation_space(g);
    f.dim_der = der.dim();
    f.torus = torus_signature(der, seed);

    const LieAlgebra q = z.dim() > 0 ? quotient(g, z) : g;
    f.quotient.dim = q.dim();
    f.quotient.dim_derived = derived_subalgebra(q).dim();
    f.quotient.dim_center = center(q).dim();
    f.quotient.char_sequence = char_sequence(q, seed);
    return f;
}

Distinction pairwise_distinguish(const std::vector<Fingerprint>& prints) {
    Distinction out;
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < prints.size(); ++i) {
        const auto [it, fresh] = slot.emplace(prints[i].key(), out.classes.size());
        if (fresh) out.classes.emplace_back();
        out.classes[it->second].push_back(i);
    }
    for (const auto& cls : out.classes)
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b) out.unresolved.emplace_back(cls[a], cls[b]);
    std::sort(out.unresolved.begin(), out.unresolved.end());
    return out;
}

Distinction pairwise_distinguish(const std::vector<LieAlgebra>& entries, std::uint64_t seed) {
    const auto prints = parallel_map(entries.size(), [&](std::size_t i) { return fingerprint(entries[i], seed); });
    return pairwise_distinguish(prints);
}

namespace {

void combinations(std::size_t first, std::size_t last, std::size_t k, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out) {
    if (k == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = first; i + k <= last; ++i) {
        current.push_back(i);
        combinations(i + 1, last, k - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<CoordinateIdeal> scan_coordinate_ideals(const LieAlgebra& g, std::size_t k, const CharSequence& required,
                                                    std::uint64_t seed) {
    const std::size_t n = g.dim();
    std::vector<CoordinateIdeal> out;
    if (k > n) return out;

    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> current;
    if (n >= 6 && k >= 6) {
        current = {0, 1, 2, 3, 4, 5};
        combinations(6, n, k - 6, current, subsets);
    } else {
        combinations(0, n, k, current, subsets);
    }

    for (const auto& idx : subsets) {
        std::vector<Vector> vectors;
        for (const auto i : idx) vectors.push_back(unit_vector(n, i));
        Subspace s = Subspace::span(n, vectors);
        if (!is_ideal(g, s)) continue;
        const LieAlgebra sub = restrict_to(g, s);
        CharSequence cs = char_sequence(sub, seed);
        if (cs != required) continue;
        out.push_back({idx, std::move(s), std::move(cs), fingerprint(sub, seed)});
    }
    return out;
}

}  // namespace nilform
