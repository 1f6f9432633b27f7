#include "nilform/report.hpp"

#include "nilform/errors.hpp"

#include <sstream>

namespace nilform {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& it : items) n += it.pass ? 0 : 1;
    return n;
}

void Report::append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw InvalidParameter("unknown format '" + name + "'");
}

Json to_json(const Report& r) {
    Json doc;
    doc["schema"] = kReportSchema;
    doc["suite"] = r.suite;
    doc["version"] = r.version;
    doc["seed"] = r.seed;
    doc["pass"] = r.passed();
    Json items = Json::array();
    for (const auto& it : r.items)
        items.push_back({{"id", it.id}, {"computed", it.computed}, {"expected", it.expected}, {"ref", it.ref}, {"pass", it.pass}});
    doc["items"] = std::move(items);
    return doc;
}

namespace {

std::string compact(const Json& j) {
    if (j.is_null()) return "-";
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render(const Report& r, Format f) {
    std::ostringstream os;
    switch (f) {
    case Format::Json:
        os << to_json(r).dump(2) << "\n";
        break;
    case Format::Csv:
        os << "suite,id,pass,computed,expected,ref\n";
        for (const auto& it : r.items)
            os << csv_field(r.suite) << "," << csv_field(it.id) << "," << (it.pass ? "pass" : "FAIL") << ","
               << csv_field(compact(it.computed)) << "," << csv_field(compact(it.expected)) << "," << csv_field(it.ref)
               << "\n";
        break;
    case Format::Text:
        os << "suite " << r.suite << " (version " << r.version << ", seed " << r.seed << ")\n";
        for (const auto& it : r.items) {
            os << (it.pass ? "  pass  " : "  FAIL  ") << it.id << "  computed=" << compact(it.computed);
            if (!it.expected.is_null()) os << "  expected=" << compact(it.expected);
            if (!it.ref.empty()) os << "  [" << it.ref << "]";
            os << "\n";
        }
        os << r.items.size() - r.failures() << "/" << r.items.size() << " passed\n";
        break;
    }
    return os.str();
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

Json to_json(const CharSequence& c) { return to_string(c); }

Json to_json(const Fingerprint& f) {
    Json torus;
    torus["cartan_dim"] = f.torus.cartan_dim;
    torus["rank"] = f.torus.rank;
    Json mult = Json::array();
    for (const auto& [m, d] : f.torus.multiplicities) mult.push_back({m, d});
    torus["multiplicities"] = std::move(mult);
    Json q;
    q["dim"] = f.quotient.dim;
    q["dim_derived"] = f.quotient.dim_derived;
    q["dim_center"] = f.quotient.dim_center;
    q["char_sequence"] = to_string(f.quotient.char_sequence);
    return {{"dim", f.dim},
            {"dim_derived", f.dim_derived},
            {"derived_abelian", f.derived_abelian},
            {"dim_center", f.dim_center},
            {"char_sequence", to_string(f.char_sequence)},
            {"lower_central_dims", f.lower_central_dims},
            {"derived_dims", f.derived_dims},
            {"dim_der", f.dim_der},
            {"torus", std::move(torus)},
            {"quotient", std::move(q)}};
}

Json to_json(const CharNilpotency& c) {
    Json out = {{"char_nilpotent", c.nilpotent}, {"seed", c.seed}, {"trials", c.trials}, {"log2_error_bound", c.log2_error_bound}};
    if (c.witness) {
        out["witness_kind"] = c.witness_kind;
        out["witness"] = to_json(*c.witness);
    }
    return out;
}

}  // namespace nilform
