#include "nilform/errors.hpp"
#include "nilform/json_io.hpp"
#include "nilform/report.hpp"
#include "nilform/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

using namespace nilform;

namespace {

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long v = std::stol(text, &used);
            if (used != text.size()) throw InvalidParameter("");
            return {v, v};
        }
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw InvalidParameter("");
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw InvalidParameter("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw InvalidParameter("range must look like A..B, got '" + text + "'");
    }
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    const auto [lo, hi] = parse_range(text);
    if (lo < 0 || hi < 0) throw InvalidParameter("dimensions must be non-negative");
    return dim_range(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
}

std::vector<Rational> parse_alphas(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(Rational::parse(tok));
        } catch (const std::exception&) {
            throw InvalidParameter("bad alpha '" + tok + "'");
        }
        if (out.back().is_zero()) throw InvalidParameter("alpha must be nonzero");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("NILFORM_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw InvalidParameter(std::string("NILFORM_SEED is not an unsigned integer: ") + env);
    }
    return kDefaultSeed;
}

int emit(const Report& r, Format f) {
    std::cout << render(r, f);
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the (n-5)-filiform catalog"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::uint64_t> seed_flag;
    std::string format_name = "text";
    std::string alpha_text = "1,2,-1,1/2";
    app.add_option("--seed", seed_flag, "random seed (falls back to NILFORM_SEED)");
    app.add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--alpha", alpha_text, "alpha samples for families 7 and 66, comma separated");

    auto* check = app.add_subcommand("check", "Jacobi, characteristic sequence and nonsplit checks");
    std::string dims_text = "7..13";
    std::string file;
    check->add_option("--dims", dims_text, "dimension range A..B");
    check->add_option("--file", file, "check an algebra file instead of the catalog");

    auto* tables = app.add_subcommand("tables", "recompute a table and diff against the printed values");
    int table_id = 0;
    std::string m_text = "3..8";
    tables->add_option("--id", table_id, "table 1..9")->required();
    tables->add_option("--m", m_text, "m range A..B");

    auto* charnilp = app.add_subcommand("charnilp", "characteristic nilpotency of catalog instances");
    std::string cn_dims = "7..9";
    bool no_sums = false;
    charnilp->add_option("--dims", cn_dims, "dimension range A..B");
    charnilp->add_flag("--no-sums", no_sums, "skip the direct sums at n=14");

    auto* dertower = app.add_subcommand("dertower", "derivation tower of one family");
    int family = 0;
    std::size_t dim = 0, depth = 2;
    dertower->add_option("--family", family, "family index 1..103")->required();
    dertower->add_option("--dim", dim, "dimension")->required();
    dertower->add_option("--depth", depth, "tower depth");

    auto* distinguish = app.add_subcommand("distinguish", "fingerprint classes of all instances in one dimension");
    std::size_t dist_dim = 12;
    distinguish->add_option("--dim", dist_dim, "dimension");

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog utilities");
    catalog_cmd->require_subcommand(1);
    auto* export_cmd = catalog_cmd->add_subcommand("export", "write every instance as an algebra file");
    std::size_t export_dim = 0;
    std::string out_dir = ".";
    export_cmd->add_option("--dim", export_dim, "dimension")->required();
    export_cmd->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        SuiteConfig cfg;
        cfg.seed = resolve_seed(seed_flag);
        cfg.alphas = parse_alphas(alpha_text);
        const Format fmt = parse_format(format_name);

        if (check->parsed()) {
            if (!file.empty()) return emit(check_algebra(load_algebra(file), file, cfg), fmt);
            return emit(check_suite(parse_dims(dims_text), cfg), fmt);
        }
        if (tables->parsed()) {
            const auto [lo, hi] = parse_range(m_text);
            return emit(tables_suite(table_id, static_cast<int>(lo), static_cast<int>(hi), cfg), fmt);
        }
        if (charnilp->parsed()) return emit(charnilp_suite(parse_dims(cn_dims), !no_sums, cfg), fmt);
        if (dertower->parsed()) {
            std::optional<Rational> alpha;
            if (!cfg.alphas.empty()) alpha = cfg.alphas.front();
            return emit(dertower_suite(family, dim, depth, alpha, cfg), fmt);
        }
        if (distinguish->parsed()) return emit(distinguish_suite(dist_dim, cfg), fmt);
        if (export_cmd->parsed()) {
            std::filesystem::create_directories(out_dir);
            Report r;
            r.suite = "catalog/export";
            r.seed = cfg.seed;
            for (const auto& inst : enumerate(export_dim, cfg.alphas)) {
                const auto path = std::filesystem::path(out_dir) / (inst.id() + ".json");
                save_algebra(inst.algebra, path);
                r.add({inst.id(), path.string(), nullptr, "", true});
            }
            return emit(r, fmt);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
