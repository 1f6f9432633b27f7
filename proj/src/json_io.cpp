#include "nilform/json_io.hpp"

#include "nilform/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nilform {

Json algebra_to_json(const LieAlgebra& g) {
    Json doc;
    doc["dim"] = g.dim();
    doc["labels"] = g.labels();
    Json brackets = Json::array();
    for (const auto& [i, j] : g.nonzero_pairs()) {
        Json coeffs = Json::object();
        for (std::size_t k = 0; k < g.dim(); ++k)
            if (!g.constant(i, j, k).is_zero()) coeffs[std::to_string(k + 1)] = g.constant(i, j, k).to_string();
        brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
    }
    doc["brackets"] = std::move(brackets);
    return doc;
}

namespace {

std::size_t index_field(const Json& item, const char* name, std::size_t n) {
    if (!item.contains(name) || !item[name].is_number_integer()) throw FormatError(std::string("bracket field '") + name + "' missing");
    const auto v = item[name].get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n) throw FormatError(std::string("bracket index '") + name + "' out of range");
    return static_cast<std::size_t>(v - 1);
}

}  // namespace

LieAlgebra algebra_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
        throw FormatError("algebra document needs a non-negative integer 'dim'");
    const auto n = doc["dim"].get<std::size_t>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array() || doc["labels"].size() != n) throw FormatError("'labels' must list dim names");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw FormatError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    LieAlgebra g(n, labels);
    if (!doc.contains("brackets")) return g;
    if (!doc["brackets"].is_array()) throw FormatError("'brackets' must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& item : doc["brackets"]) {
        if (!item.is_object()) throw FormatError("bracket entries must be objects");
        const auto i = index_field(item, "i", n);
        const auto j = index_field(item, "j", n);
        if (i >= j) throw FormatError("bracket requires i < j");
        if (!seen.emplace(i, j).second) throw FormatError("bracket (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") listed twice");
        if (!item.contains("coeffs") || !item["coeffs"].is_object()) throw FormatError("bracket without 'coeffs' object");
        Vector value(n);
        for (const auto& [key, c] : item["coeffs"].items()) {
            std::size_t k = 0;
            try {
                std::size_t used = 0;
                const long v = std::stol(key, &used);
                if (used != key.size() || v < 1 || static_cast<std::size_t>(v) > n) throw FormatError("");
                k = static_cast<std::size_t>(v - 1);
            } catch (const std::exception&) {
                throw FormatError("bad component index '" + key + "'");
            }
            if (!c.is_string()) throw FormatError("coefficients must be rational strings");
            try {
                value[k] = Rational::parse(c.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw FormatError(std::string("bad rational: ") + e.what());
            }
        }
        g.set_bracket(i, j, value);
    }
    return g;
}

std::string write_algebra(const LieAlgebra& g) { return algebra_to_json(g).dump(2) + "\n"; }

LieAlgebra read_algebra(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from_json(doc);
}

void save_algebra(const LieAlgebra& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << write_algebra(g);
}

LieAlgebra load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_algebra(ss.str());
}

}  // namespace nilform
