#include "nilform/suites.hpp"

#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nilform {

std::vector<std::size_t> dim_range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

CatalogInstance instance_at(int family, std::size_t n, std::optional<Rational> alpha) {
    const auto& e = catalog_entry(family);
    const std::size_t odd = e.parity == Parity::Odd ? 1 : 0;
    if (n < 2 || n % 2 != odd)
        throw InvalidDimension("family " + std::to_string(family) + " has no member of dimension " + std::to_string(n));
    const int m = static_cast<int>((n - odd) / 2);
    if (e.has_alpha && !alpha) alpha = Rational(1);
    if (!e.has_alpha) alpha.reset();
    return {family, m, alpha, build(family, m, alpha)};
}

std::string weight_token(const LinearForm& form, std::size_t multiplicity) {
    std::string s = form.to_string();
    if (multiplicity == 1) return s;
    const bool compound = form.terms().size() + (form.constant().is_zero() ? 0 : 1) > 1;
    return (compound ? "(" + s + ")" : s) + "^" + std::to_string(multiplicity);
}

namespace {

Rational first_alpha(const SuiteConfig& cfg) { return cfg.alphas.empty() ? Rational(1) : cfg.alphas.front(); }

std::vector<CatalogInstance> instances(const std::vector<std::size_t>& dims, const SuiteConfig& cfg) {
    std::vector<CatalogInstance> out;
    for (const auto n : dims) {
        auto batch = enumerate(n, cfg.alphas);
        std::move(batch.begin(), batch.end(), std::back_inserter(out));
    }
    return out;
}

Json jacobi_json(const LieAlgebra& g, const std::optional<JacobiFailure>& f) {
    if (!f) return "pass";
    return {{"triple", {g.label(f->i), g.label(f->j), g.label(f->k)}}, {"residual", to_json(f->residual)}};
}

ReportItem check_instance(const CatalogInstance& inst, std::uint64_t seed) {
    const auto& g = inst.algebra;
    const std::size_t n = g.dim();
    ReportItem item;
    item.id = inst.id();
    item.ref = "law g_" + std::to_string(n) + "^" + std::to_string(inst.index);
    const auto expected_cs = p_filiform_sequence(n, n - 5);
    item.expected = {{"jacobi", "pass"},
                     {"char_sequence", to_string(expected_cs)},
                     {"nilindex", expected_cs.front()},
                     {"center_in_derived", true},
                     {"abelian_factor", false}};
    const auto failure = jacobi_check(g);
    item.computed["jacobi"] = jacobi_json(g, failure);
    if (failure) {
        item.pass = false;
        return item;
    }
    const auto cs = char_sequence(g, seed);
    item.computed["char_sequence"] = to_string(cs);
    try {
        item.computed["nilindex"] = nilindex(g);
    } catch (const NotNilpotent&) {
        item.computed["nilindex"] = nullptr;
    }
    item.computed["center_in_derived"] = derived_subalgebra(g).contains(center(g));
    item.computed["abelian_factor"] = has_abelian_direct_factor(g);
    item.pass = item.computed == item.expected;
    return item;
}

std::string formula_string(const std::array<long, 3>& f) {
    std::string s = std::to_string(f[0]) + "m^2";
    s += (f[1] < 0 ? "-" : "+") + std::to_string(std::labs(f[1])) + "m";
    s += (f[2] < 0 ? "-" : "+") + std::to_string(std::labs(f[2]));
    return s;
}

Report structural_tables(const TableFixture& t, int m_lo, int m_hi, const SuiteConfig& cfg) {
    struct Job {
        TableRow row;
        int m;
    };
    std::vector<Job> jobs;
    for (const auto& row : t.rows) {
        const int lo = std::max(m_lo, catalog_entry(row.family).min_m);
        for (int m = lo; m <= m_hi; ++m) jobs.push_back({row, m});
    }
    const auto items = parallel_map(jobs.size(), [&](std::size_t j) {
        const auto& [row, m] = jobs[j];
        const auto& entry = catalog_entry(row.family);
        std::optional<Rational> alpha;
        if (entry.has_alpha) alpha = first_alpha(cfg);
        const CatalogInstance inst{row.family, m, alpha, build(row.family, m, alpha)};
        const auto& g = inst.algebra;
        const Subspace c1 = derived_subalgebra(g);
        std::vector<ReportItem> out;

        ReportItem s;
        s.id = "table" + std::to_string(t.id) + "/" + inst.label() + "/structure";
        s.ref = row.ref + (entry.reconstructed ? " (reconstruction)" : "");
        s.computed = {{"m", m}, {"dim_center", center(g).dim()}, {"dim_derived", c1.dim()}};
        s.expected = {{"m", m}, {"dim_center", row.dim_center}, {"dim_derived", t.dim_derived}};
        if (t.derived_abelian) {
            s.computed["derived_abelian"] = bracket_space(g, c1, c1).dim() == 0;
            s.expected["derived_abelian"] = *t.derived_abelian;
        }
        s.pass = s.computed == s.expected;
        if (entry.reconstructed) s.computed["reconstruction"] = true;
        out.push_back(std::move(s));

        if (row.dim_der) {
            ReportItem d;
            d.id = "table" + std::to_string(t.id) + "/" + inst.label() + "/dim_der";
            d.ref = row.ref + ", " + formula_string(*row.dim_der);
            d.computed = {{"m", m}, {"dim_der", derivation_space(g).dim()}};
            d.expected = {{"m", m}, {"dim_der", *row.dim_der_at(m)}};
            d.pass = d.computed == d.expected;
            out.push_back(std::move(d));
        }
        return out;
    });
    Report r;
    for (const auto& batch : items)
        for (const auto& it : batch) r.add(it);
    return r;
}

Report weight_tables(int table, int m_lo, int m_hi, const SuiteConfig&) {
    struct Job {
        WeightRow row;
        int m;
    };
    std::vector<Job> jobs;
    for (const auto& row : weight_rows(table)) {
        const auto& entry = catalog_entry(row.family);
        for (int m = std::max(m_lo, entry.min_m); m <= m_hi; ++m) {
            const std::size_t n = family_dimension(row.family, m);
            if (n < 6 + row.tail_from - 1) continue;
            jobs.push_back({row, m});
        }
    }
    const auto items = parallel_map(jobs.size(), [&](std::size_t j) {
        const auto& [row, m] = jobs[j];
        const auto g = build(row.family, m);
        const auto ws = diagonal_derivations(g);
        const std::size_t head = 6 + row.tail_from - 1;

        std::map<LinearForm, std::size_t> got, want;
        for (std::size_t i = 0; i < head; ++i) ++got[ws.weights[i]];
        for (const auto& f : row.factors) want[f.form] += f.multiplicity;
        Json got_tokens = Json::array(), want_tokens = Json::array(), tail = Json::array();
        for (const auto& [form, k] : got) got_tokens.push_back(weight_token(form, k));
        for (const auto& [form, k] : want) want_tokens.push_back(weight_token(form, k));
        for (std::size_t i = head; i < g.dim(); ++i) tail.push_back(ws.weights[i].to_string());

        ReportItem it;
        it.id = "table" + std::to_string(table) + "/g" + std::to_string(g.dim()) + "^" + std::to_string(row.family) + "/weights";
        it.ref = row.ref;
        it.computed = {{"factors", got_tokens}, {"rank", ws.rank}, {"tail", tail}};
        it.expected = {{"factors", want_tokens}, {"factor_count", row.factor_count()}, {"tail_count", g.dim() - head}};
        it.pass = got == want;
        return it;
    });
    Report r;
    for (const auto& it : items) r.add(it);
    return r;
}

std::string family_tag(const CatalogInstance& inst) {
    std::string s = std::to_string(inst.index);
    if (inst.alpha) s += "(a=" + inst.alpha->to_string() + ")";
    return s;
}

}  // namespace

Report check_suite(const std::vector<std::size_t>& dims, const SuiteConfig& cfg) {
    Report r;
    r.suite = "check";
    r.seed = cfg.seed;
    const auto all = instances(dims, cfg);
    const auto items = parallel_map(all.size(), [&](std::size_t i) { return check_instance(all[i], cfg.seed); });
    for (const auto& it : items) r.add(it);
    return r;
}

Report check_algebra(const LieAlgebra& g, const std::string& id, const SuiteConfig& cfg) {
    Report r;
    r.suite = "check";
    r.seed = cfg.seed;
    ReportItem item;
    item.id = id;
    item.expected = {{"jacobi", "pass"}};
    const auto failure = jacobi_check(g);
    item.computed["dim"] = g.dim();
    item.computed["jacobi"] = jacobi_json(g, failure);
    item.pass = !failure;
    if (!failure) {
        try {
            item.computed["nilindex"] = nilindex(g);
            item.computed["char_sequence"] = to_string(char_sequence(g, cfg.seed));
            item.computed["dim_center"] = center(g).dim();
            item.computed["dim_derived"] = derived_subalgebra(g).dim();
            item.computed["abelian_factor"] = has_abelian_direct_factor(g);
        } catch (const NotNilpotent&) {
            item.computed["nilpotent"] = false;
        }
    }
    r.add(std::move(item));
    return r;
}

Report tables_suite(int table, int m_lo, int m_hi, const SuiteConfig& cfg) {
    if (table < 1 || table > 9) throw InvalidParameter("table id must be in 1..9");
    Report r = table <= 7 ? structural_tables(table_fixture(table), m_lo, m_hi, cfg) : weight_tables(table, m_lo, m_hi, cfg);
    r.suite = "tables/" + std::to_string(table);
    r.seed = cfg.seed;
    return r;
}

Report direct_sum_suite(const SuiteConfig& cfg) {
    Report r;
    r.suite = "direct_sums";
    r.seed = cfg.seed;
    const auto it = fixtures().charnilp.find(7);
    if (it == fixtures().charnilp.end()) return r;
    const auto& list = it->second;
    std::vector<std::pair<CatalogInstance, CatalogInstance>> pairs;
    for (std::size_t a = 0; a < list.size(); ++a)
        for (std::size_t b = a; b < list.size(); ++b) {
            auto x = instance_at(list[a].family, 7, list[a].alpha ? std::optional(first_alpha(cfg)) : std::nullopt);
            auto y = instance_at(list[b].family, 7, list[b].alpha ? std::optional(first_alpha(cfg)) : std::nullopt);
            pairs.emplace_back(std::move(x), std::move(y));
        }
    const auto items = parallel_map(pairs.size(), [&](std::size_t p) {
        const auto& [x, y] = pairs[p];
        const LieAlgebra s = direct_sum(x.algebra, y.algebra);
        const auto cn = is_characteristically_nilpotent(s, cfg.seed);
        ReportItem item;
        item.id = x.label() + "+" + y.label();
        item.ref = "direct sums of 7-dim positives, n=14";
        item.computed = {{"dim", s.dim()}, {"char_nilpotent", cn.nilpotent}, {"nilindex", nilindex(s)}};
        if (cn.witness) item.computed["witness_kind"] = cn.witness_kind;
        else item.computed["log2_error_bound"] = cn.log2_error_bound;
        item.expected = {{"dim", 14}, {"char_nilpotent", true}, {"nilindex", 5}};
        item.pass = cn.nilpotent && nilindex(s) == 5 && s.dim() == 14;
        return item;
    });
    for (const auto& item : items) r.add(item);
    return r;
}

Report charnilp_suite(const std::vector<std::size_t>& dims, bool sums, const SuiteConfig& cfg) {
    Report r;
    r.suite = "charnilp";
    r.seed = cfg.seed;
    const auto all = instances(dims, cfg);
    const auto results = parallel_map(all.size(), [&](std::size_t i) {
        return is_characteristically_nilpotent(all[i].algebra, cfg.seed);
    });
    const auto& printed = fixtures().charnilp;

    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& inst = all[i];
        ReportItem item;
        item.id = inst.id();
        item.computed = to_json(results[i]);
        if (const auto it = printed.find(inst.dim()); it != printed.end()) {
            const bool listed = std::any_of(it->second.begin(), it->second.end(), [&](const CharNilpEntry& e) {
                return e.family == inst.index;
            });
            item.expected = {{"char_nilpotent", listed}};
            item.ref = fixtures().charnilp_ref;
            item.pass = results[i].nilpotent == listed;
        }
        r.add(std::move(item));
    }

    for (const auto n : dims) {
        const auto it = printed.find(n);
        if (it == printed.end()) continue;
        std::set<std::string> got, want;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i].dim() == n && results[i].nilpotent) got.insert(family_tag(all[i]));
        for (const auto& e : it->second) {
            if (!e.alpha) {
                want.insert(std::to_string(e.family));
                continue;
            }
            for (const auto& a : cfg.alphas)
                if (!a.is_zero()) want.insert(std::to_string(e.family) + "(a=" + a.to_string() + ")");
        }
        ReportItem item;
        item.id = "positives/n=" + std::to_string(n);
        item.ref = fixtures().charnilp_ref;
        item.computed = got;
        item.expected = want;
        item.pass = got == want;
        r.add(std::move(item));
    }
    if (sums) r.append(direct_sum_suite(cfg));
    return r;
}

Report dertower_suite(int family, std::size_t dim, std::size_t depth, std::optional<Rational> alpha,
                      const SuiteConfig& cfg) {
    if (depth < 1) throw InvalidParameter("depth must be at least 1");
    Report r;
    r.suite = "dertower";
    r.seed = cfg.seed;
    if (!alpha && catalog_entry(family).has_alpha) alpha = first_alpha(cfg);
    const auto inst = instance_at(family, dim, alpha);
    const auto& g = inst.algebra;
    const auto tower = derivation_tower(g, depth, cfg.seed);
    const auto weights = diagonal_derivations(g);

    const ExampleFixture* ex = nullptr;
    for (const auto* e : {&fixtures().der_g8_6, &fixtures().der_g7_81})
        if (e->family == family && e->dim == dim) ex = e;

    for (std::size_t k = 0; k < tower.levels.size(); ++k) {
        const auto& lv = tower.levels[k];
        ReportItem item;
        item.id = inst.label() + "/level" + std::to_string(k);
        item.computed = {{"dim", lv.dim}, {"dim_der", lv.dim_der}, {"char_nilpotent", lv.char_nilpotent}};
        if (k == 0) item.computed["diagonal_rank"] = weights.rank;
        if (ex && k == 0) {
            item.expected = {{"dim_der", ex->dim_der}};
            item.ref = ex->ref;
            item.pass = lv.dim_der == ex->dim_der;
        }
        if (ex && k == 1 && ex->der_char_nilpotent) {
            item.expected = {{"char_nilpotent", *ex->der_char_nilpotent}};
            item.ref = ex->ref;
            item.pass = lv.char_nilpotent == *ex->der_char_nilpotent;
        }
        r.add(std::move(item));
    }

    ReportItem idx;
    idx.id = inst.label() + "/tower_index";
    idx.computed = tower.index ? Json(*tower.index) : Json("> " + std::to_string(depth));
    if (ex && ex->tower_index) {
        idx.expected = *ex->tower_index;
        idx.ref = ex->ref;
        idx.pass = tower.index == ex->tower_index;
    }
    r.add(std::move(idx));

    if (!ex) return r;
    const LieAlgebra p = ex->presentation_algebra();
    ReportItem pj;
    pj.id = "presentation/jacobi";
    pj.ref = ex->ref;
    pj.computed = {{"dim", p.dim()}, {"jacobi", jacobi_json(p, jacobi_check(p))}};
    pj.expected = {{"dim", ex->dim_der}, {"jacobi", "pass"}};
    pj.pass = pj.computed == pj.expected;
    r.add(std::move(pj));

    if (!ex->weight_vector.empty()) {
        ReportItem wv;
        wv.id = "presentation/weight_vector";
        wv.ref = ex->ref;
        wv.computed = verify_weight_vector(p, ex->weight_vector);
        wv.expected = true;
        wv.pass = wv.computed == wv.expected;
        r.add(std::move(wv));

        Vector bad = ex->weight_vector;
        bad[2] += Rational(1);
        ReportItem wb;
        wb.id = "presentation/perturbed_weight_vector";
        wb.computed = verify_weight_vector(p, bad);
        wb.expected = false;
        wb.pass = wb.computed == wb.expected;
        r.add(std::move(wb));
    }
    if (ex->der_char_nilpotent) {
        const auto cn = is_characteristically_nilpotent(p, cfg.seed);
        ReportItem pc;
        pc.id = "presentation/char_nilpotent";
        pc.ref = ex->ref;
        pc.computed = to_json(cn);
        pc.expected = {{"char_nilpotent", *ex->der_char_nilpotent}};
        pc.pass = cn.nilpotent == *ex->der_char_nilpotent;
        r.add(std::move(pc));
    }
    return r;
}

namespace {

struct PairVerdict {
    bool allowed = false;
    std::string route;
};

bool same_up_to_sign(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    return a && b && (*a == *b || *a == -*b);
}

PairVerdict judge(const CatalogInstance& a, const CatalogInstance& b) {
    if (a.index == b.index) {
        if (same_up_to_sign(a.alpha, b.alpha)) return {true, "isomorphic (alpha' = +-alpha)"};
        return {true, "external ideal label (n13,alpha)"};
    }
    const auto ta = table_of(a.index), tb = table_of(b.index);
    const auto ra = table_row(a.index), rb = table_row(b.index);
    if (!ta || !tb || *ta != *tb) return {false, "not tabulated together"};
    if (ra->dim_center != rb->dim_center) return {false, "printed dim Z differs"};
    const auto da = ra->dim_der_at(a.m), db = rb->dim_der_at(b.m);
    if (da && db && *da != *db) return {false, "printed dim Der differs"};
    if (ra->quotient != rb->quotient) return {true, "external quotient label"};
    if (ra->ideal != rb->ideal) return {true, "external ideal label"};
    if (ra->filiform_ideal != rb->filiform_ideal) return {true, "external filiform ideal label"};
    return {false, "printed rows identical"};
}

std::vector<std::string> ideal_keys(const LieAlgebra& g, std::size_t k, const CharSequence& cs, std::uint64_t seed) {
    std::set<std::string> keys;
    for (const auto& ideal : scan_coordinate_ideals(g, k, cs, seed)) keys.insert(ideal.fingerprint.key());
    return {keys.begin(), keys.end()};
}

Json weight_multiset_json(const WeightSignature& w) {
    Json out = Json::array();
    for (const auto& [form, k] : w.multiset()) out.push_back(weight_token(form, k));
    return out;
}

}  // namespace

Report distinguish_suite(std::size_t n, const SuiteConfig& cfg) {
    Report r;
    r.suite = "distinguish/n=" + std::to_string(n);
    r.seed = cfg.seed;
    const auto all = enumerate(n, cfg.alphas);
    const auto prints = parallel_map(all.size(), [&](std::size_t i) { return fingerprint(all[i].algebra, cfg.seed); });
    const auto dist = pairwise_distinguish(prints);

    for (const auto& cls : dist.classes) {
        ReportItem item;
        item.id = "class/" + all[cls.front()].label();
        Json members = Json::array();
        for (const auto i : cls) members.push_back(all[i].label());
        item.computed = {{"members", members}, {"key", prints[cls.front()].key()}};
        r.add(std::move(item));
    }

    const auto unresolved = parallel_map(dist.unresolved.size(), [&](std::size_t p) {
        const auto& a = all[dist.unresolved[p].first];
        const auto& b = all[dist.unresolved[p].second];
        const auto verdict = judge(a, b);
        ReportItem item;
        item.id = "unresolved/" + a.label() + "~" + b.label();
        item.computed = {{"route", verdict.route}};
        if (a.index != b.index) {
            const CharSequence cs7{5, 1, 1}, cs6{5, 1};
            const auto ka = ideal_keys(a.algebra, 7, cs7, cfg.seed), kb = ideal_keys(b.algebra, 7, cs7, cfg.seed);
            const auto fa = ideal_keys(a.algebra, 6, cs6, cfg.seed), fb = ideal_keys(b.algebra, 6, cs6, cfg.seed);
            item.computed["ideal7_separated"] = ka != kb;
            item.computed["ideal6_separated"] = fa != fb;
            item.computed["weights_separated"] = diagonal_derivations(a.algebra).multiset() != diagonal_derivations(b.algebra).multiset();
        }
        item.expected = "deferred to external labels";
        if (const auto t = table_of(a.index)) item.ref = "Table " + std::to_string(*t);
        item.pass = verdict.allowed;
        return item;
    });
    for (const auto& it : unresolved) r.add(it);

    const auto sep = fixtures().must_separate.find(n);
    if (sep != fixtures().must_separate.end()) {
        for (const auto& [x, y] : sep->second) {
            const auto find = [&](int family) {
                return std::find_if(all.begin(), all.end(), [&](const CatalogInstance& c) { return c.index == family; });
            };
            const auto ia = find(x), ib = find(y);
            ReportItem item;
            item.id = "separate/" + std::to_string(x) + "," + std::to_string(y);
            item.ref = fixtures().separate_ref.at(n);
            item.expected = {{"fingerprint_separated", true}, {"weights_separated", true}};
            if (ia == all.end() || ib == all.end()) {
                item.computed = "missing instance";
                item.pass = false;
                r.add(std::move(item));
                continue;
            }
            const auto pa = static_cast<std::size_t>(ia - all.begin()), pb = static_cast<std::size_t>(ib - all.begin());
            const auto wa = diagonal_derivations(ia->algebra), wb = diagonal_derivations(ib->algebra);
            const bool fp = prints[pa].key() != prints[pb].key();
            const bool ws = wa.multiset() != wb.multiset();
            item.computed = {{"fingerprint_separated", fp},
                             {"weights_separated", ws},
                             {"weights_" + std::to_string(x), weight_multiset_json(wa)},
                             {"weights_" + std::to_string(y), weight_multiset_json(wb)}};
            item.pass = fp && ws;
            r.add(std::move(item));
        }
    }
    return r;
}

}  // namespace nilform
