// Acceptance criteria 1-10. One line per criterion on stdout, failing details on stderr.
// Exit status 1 when any criterion fails; --no-fail-exit reports and exits 0.

#include "nilform/catalog.hpp"
#include "nilform/derivations.hpp"
#include "nilform/errors.hpp"
#include "nilform/fixtures.hpp"
#include "nilform/generic_law.hpp"
#include "nilform/invariants.hpp"
#include "nilform/parallel.hpp"
#include "nilform/suites.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

using namespace nilform;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
};

constexpr std::uint64_t kSeed = kDefaultSeed;
constexpr double kRuntimeLimit1 = 60.0;  // seconds
constexpr double kLog2Bound = -40.0;
constexpr int kOracleTrials = 100;
constexpr std::size_t kOracleDim = 10;
constexpr int kConjugates = 10;

void failing_items(const Report& r, Outcome& out, const std::function<bool(const ReportItem&)>& keep = {}) {
    for (const auto& it : r.items)
        if (!it.pass && (!keep || keep(it)))
            out.details.push_back(it.id + " computed=" + it.computed.dump() + " expected=" + it.expected.dump());
}

std::size_t count_if(const Report& r, const std::function<bool(const ReportItem&)>& pred) {
    return static_cast<std::size_t>(std::count_if(r.items.begin(), r.items.end(), pred));
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Outcome criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const Report r = check_suite({8, 10, 12, 7, 9, 11, 13}, {kSeed, default_alpha_samples()});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome out;
    out.pass = r.passed() && secs < kRuntimeLimit1;
    std::ostringstream os;
    os << r.items.size() - r.failures() << "/" << r.items.size() << " instances pass; " << secs << " s (limit "
       << kRuntimeLimit1 << " s)";
    out.summary = os.str();
    failing_items(r, out);
    return out;
}

bool at_two_lowest(const ReportItem& it) {
    const int family = std::stoi(it.id.substr(it.id.find('^') + 1));
    const int m = it.computed.at("m").get<int>();
    const int lo = catalog_entry(family).min_m;
    return m == lo || m == lo + 1;
}

Outcome criterion2() {
    Outcome out;
    std::size_t checked = 0, failed = 0, recon = 0, recon_failed = 0;
    for (int t = 1; t <= 7; ++t) {
        const Report r = tables_suite(t, 3, 6, {kSeed, default_alpha_samples()});
        for (const auto& it : r.items) {
            if (!ends_with(it.id, "/structure") || !at_two_lowest(it)) continue;
            if (it.computed.contains("reconstruction")) {
                ++recon;
                recon_failed += it.pass ? 0 : 1;
                continue;
            }
            ++checked;
            if (!it.pass) {
                ++failed;
                out.details.push_back(it.id + " computed=" + it.computed.dump() + " expected=" + it.expected.dump());
            }
        }
    }
    out.pass = failed == 0;
    std::ostringstream os;
    os << checked - failed << "/" << checked << " rows match (dim Z, dim C1, C1 abelian); reconstruction family 61: "
       << recon - recon_failed << "/" << recon << " match, reported separately";
    out.summary = os.str();
    return out;
}

Outcome criterion3() {
    Outcome out;
    std::size_t checked = 0, failed = 0;
    for (int t : {3, 4, 6, 7}) {
        const Report r = tables_suite(t, 3, 8, {kSeed, default_alpha_samples()});
        for (const auto& it : r.items) {
            if (!ends_with(it.id, "/dim_der")) continue;
            ++checked;
            if (!it.pass) {
                ++failed;
                out.details.push_back(it.id + " computed=" + it.computed.dump() + " expected=" + it.expected.dump() + " [" +
                                      it.ref + "]");
            }
        }
    }
    out.pass = failed == 0;
    out.summary = std::to_string(checked - failed) + "/" + std::to_string(checked) + " closed-form instances match (m = min..8)";
    return out;
}

Outcome criterion4() {
    Outcome out;
    const auto& ex6 = fixtures().der_g8_6;
    const auto& ex81 = fixtures().der_g7_81;
    const LieAlgebra g6 = build(6, 4);
    const LieAlgebra g81 = build(81, 3);
    const std::size_t d6 = derivation_space(g6).dim();
    const bool v_ok = verify_weight_vector(ex6.presentation_algebra(), ex6.weight_vector);
    const auto der81 = derivation_space(g81);
    const bool cn81 = is_characteristically_nilpotent(derivation_algebra(der81), kSeed).nilpotent;
    const auto index6 = derivation_tower_index(g6, 1, kSeed);

    const std::vector<std::pair<std::string, bool>> parts = {
        {"dim Der(g8^6)=" + std::to_string(d6) + " (13)", d6 == 13},
        {std::string("weight vector ") + (v_ok ? "verified" : "rejected"), v_ok},
        {"dim Der(g7^81)=" + std::to_string(der81.dim()) + " (10)", der81.dim() == 10},
        {std::string("Der(g7^81) char-nilpotent=") + (cn81 ? "true" : "false") + " (true)", cn81},
        {"tower index(g8^6)=" + (index6 ? std::to_string(*index6) : std::string("none")) + " (1)", index6 == 1u},
    };
    out.pass = true;
    for (const auto& [text, ok] : parts) {
        out.summary += (out.summary.empty() ? "" : "; ") + text;
        if (!ok) {
            out.pass = false;
            out.details.push_back(text);
        }
    }
    return out;
}

Outcome criterion5() {
    Outcome out;
    const Report r = charnilp_suite({7, 8, 9}, false, {kSeed, default_alpha_samples()});
    double worst = -1e300;
    for (const auto& it : r.items)
        if (it.computed.contains("char_nilpotent") && it.computed["char_nilpotent"].get<bool>() &&
            it.computed.contains("log2_error_bound"))
            worst = std::max(worst, it.computed["log2_error_bound"].get<double>());
    const bool bound_ok = worst <= kLog2Bound;
    out.pass = r.passed() && bound_ok;
    std::ostringstream os;
    os << count_if(r, [](const ReportItem& it) { return it.pass; }) << "/" << r.items.size()
       << " items agree; worst log2 false-negative bound " << worst << " (limit " << kLog2Bound << ")";
    out.summary = os.str();
    failing_items(r, out, [](const ReportItem& it) { return it.id.rfind("positives", 0) == 0; });
    return out;
}

LieAlgebra model_filiform(std::size_t k) {
    LieAlgebra g(k);
    for (std::size_t j = 1; j + 1 < k; ++j) {
        Vector v(k);
        v[j + 1] = 1;
        g.set_bracket(0, j, v);
    }
    return g;
}

Outcome criterion6() {
    struct Case {
        std::string name;
        LieAlgebra g;
        std::size_t p;
    };
    std::vector<Case> cases;
    for (std::size_t extra : {0u, 2u, 4u})
        cases.push_back({"H3+a" + std::to_string(extra), direct_sum(heisenberg(1), abelian(extra)), 1 + extra});
    cases.push_back({"H5", heisenberg(2), 3});
    cases.push_back({"L4+a3", direct_sum(model_filiform(4), abelian(3)), 4});
    cases.push_back({"L5+a3", direct_sum(model_filiform(5), abelian(3)), 4});
    {
        // nonsplit (n-3)-filiform: L4 with a Heisenberg pair feeding its center
        LieAlgebra g = direct_sum(model_filiform(4), abelian(2));
        Vector v(6);
        v[3] = 1;
        g.set_bracket(4, 5, v);
        cases.push_back({"L4*H(y1,y2)", g, 3});
    }
    {
        LieAlgebra g = direct_sum(model_filiform(5), abelian(2));
        Vector v(7);
        v[4] = 1;
        g.set_bracket(5, 6, v);
        cases.push_back({"L5*H(y1,y2)", g, 3});
    }
    Outcome out;
    out.pass = true;
    std::size_t ok = 0;
    for (const auto& c : cases) {
        const std::size_t n = c.g.dim();
        const bool filiform = c.g.dim() == 1 || is_p_filiform(c.g, c.p, kSeed);
        const auto cn = is_characteristically_nilpotent(c.g, kSeed);
        const bool good = filiform && !cn.nilpotent && cn.witness_kind == "diagonal" && cn.witness &&
                          is_derivation(c.g, *cn.witness);
        if (good) ++ok;
        else {
            out.pass = false;
            out.details.push_back(c.name + " n=" + std::to_string(n) + " (n-" + std::to_string(n - c.p) +
                                  ")-filiform=" + (filiform ? "yes" : "no") + " witness=" + cn.witness_kind);
        }
    }
    out.summary = std::to_string(ok) + "/" + std::to_string(cases.size()) +
                  " ad hoc (n-2)/(n-3)/(n-4)-filiform algebras carry a diagonal derivation witness";
    return out;
}

Outcome criterion7() {
    Outcome out;
    const Report r = direct_sum_suite({kSeed, default_alpha_samples()});
    out.pass = r.passed() && !r.items.empty();
    out.summary = std::to_string(r.items.size() - r.failures()) + "/" + std::to_string(r.items.size()) +
                  " direct sums at n=14 are char-nilpotent with nilindex 5";
    failing_items(r, out);
    return out;
}

Outcome criterion8() {
    Outcome out;
    Rng rng(kSeed);
    const auto& names = tracked_names();
    std::vector<std::size_t> bad_i(names.size()), bad_ii(names.size());
    int skipped = 0;
    for (int t = 0; t < kOracleTrials; ++t) {
        const auto law = random_reduced_law(kOracleDim, rng);
        const LieAlgebra g = instantiate(law);
        const auto p = random_type_i(rng);
        const auto got = read_tracked(change_basis(g, type_i_change(g, p)));
        const auto want = type_i_formulas(law, p);
        for (std::size_t k = 0; k < names.size(); ++k) bad_i[k] += tracked_equal(got, want, k) ? 0 : 1;
    }
    for (int t = 0; t < kOracleTrials; ++t) {
        const auto law = random_reduced_law(kOracleDim, rng);
        const LieAlgebra g = instantiate(law);
        const auto p = random_type_ii(rng);
        BasisChange change;
        try {
            change = type_ii_change(g, p);
        } catch (const std::runtime_error&) {
            ++skipped;
            --t;
            continue;
        }
        const auto got = read_tracked(change_basis(g, change));
        const auto want = type_ii_formulas(law, p);
        for (std::size_t k = 0; k < names.size(); ++k) bad_ii[k] += tracked_equal(got, want, k) ? 0 : 1;
    }
    std::size_t total_bad = 0;
    for (std::size_t k = 0; k < names.size(); ++k) {
        total_bad += bad_i[k] + bad_ii[k];
        if (bad_i[k]) out.details.push_back("type I " + names[k] + ": " + std::to_string(bad_i[k]) + "/" + std::to_string(kOracleTrials) + " trials differ");
        if (bad_ii[k]) out.details.push_back("type II " + names[k] + ": " + std::to_string(bad_ii[k]) + "/" + std::to_string(kOracleTrials) + " trials differ");
    }
    out.pass = total_bad == 0;
    out.summary = std::to_string(kOracleTrials) + " type I + " + std::to_string(kOracleTrials) + " type II trials x " +
                  std::to_string(names.size()) + " closed forms; " + std::to_string(total_bad) + " mismatches";
    if (skipped) out.summary += "; " + std::to_string(skipped) + " redraws";
    return out;
}

Outcome criterion9() {
    Outcome out;
    const SuiteConfig cfg{kSeed, default_alpha_samples()};
    const Report d12 = distinguish_suite(12, cfg);
    const Report d13 = distinguish_suite(13, cfg);
    const Report t8 = tables_suite(8, 6, 6, cfg);
    const Report t9 = tables_suite(9, 6, 6, cfg);
    const auto unresolved = [](const Report& r) {
        return count_if(r, [](const ReportItem& it) { return it.id.rfind("unresolved/", 0) == 0; });
    };
    const auto separated = [](const Report& r) {
        return count_if(r, [](const ReportItem& it) { return it.id.rfind("separate/", 0) == 0 && it.pass; });
    };
    out.pass = d12.passed() && d13.passed() && t8.passed() && t8.items.size() >= 16;
    std::ostringstream os;
    os << "n=12: " << unresolved(d12) << " unresolved, " << d12.failures() << " not deferred by the tables; n=13: "
       << unresolved(d13) << " unresolved, " << d13.failures() << " not deferred; weight pairs separated "
       << separated(d12) + separated(d13) << "/8; Table 8 rows " << t8.items.size() - t8.failures() << "/"
       << t8.items.size() << "; Table 9 rows (informational) " << t9.items.size() - t9.failures() << "/" << t9.items.size();
    out.summary = os.str();
    failing_items(d12, out);
    failing_items(d13, out);
    failing_items(t8, out);
    return out;
}

Outcome criterion10() {
    const std::vector<std::pair<int, int>> picks = {{1, 4}, {6, 4}, {12, 4}, {20, 4}, {30, 5}, {51, 5}, {58, 4}, {65, 3}, {81, 3}, {93, 4}};
    Rng rng(kSeed);
    std::vector<std::pair<LieAlgebra, Matrix>> jobs;
    std::vector<LieAlgebra> originals;
    for (const auto& [family, m] : picks) {
        const auto& e = catalog_entry(family);
        const LieAlgebra g = build(family, std::max(m, e.min_m));
        originals.push_back(g);
        for (int k = 0; k < kConjugates; ++k) jobs.emplace_back(g, random_invertible(g.dim(), rng));
    }
    const auto base = parallel_map(originals.size(), [&](std::size_t i) { return fingerprint(originals[i], kSeed); });
    const auto conj = parallel_map(jobs.size(), [&](std::size_t i) {
        return fingerprint(change_basis(jobs[i].first, jobs[i].second), kSeed);
    });
    Outcome out;
    std::size_t same = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& b = base[i / kConjugates];
        if (conj[i] == b) ++same;
        else out.details.push_back("family " + std::to_string(picks[i / kConjugates].first) + " copy " +
                                   std::to_string(i % kConjugates) + ": " + conj[i].key() + " vs " + b.key());
    }
    out.pass = same == jobs.size();
    out.summary = std::to_string(same) + "/" + std::to_string(jobs.size()) + " conjugated fingerprints identical";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    bool fail_exit = true;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--no-fail-exit") == 0) fail_exit = false;

    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                            criterion6, criterion7, criterion8, criterion9, criterion10};
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        Outcome o;
        try {
            o = criteria[c]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        failed += o.pass ? 0 : 1;
        std::cout << "criterion " << c + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << std::endl;
        for (const auto& d : o.details) std::cerr << "  [" << c + 1 << "] " << d << "\n";
        std::cerr.flush();
    }
    std::cout << (10 - failed) << "/10 criteria pass" << std::endl;
    return failed && fail_exit ? 1 : 0;
}
