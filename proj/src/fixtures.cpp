#include "nilform/fixtures.hpp"

#include "nilform/errors.hpp"
#include "nilform/json_io.hpp"
#include "nilform/fixtures_data.hpp"

#include <cctype>

namespace nilform {

std::optional<long> TableRow::dim_der_at(int m) const {
    if (!dim_der) return std::nullopt;
    const auto& [a, b, c] = *dim_der;
    return a * m * m + b * m + c;
}

std::size_t WeightRow::factor_count() const {
    std::size_t total = 0;
    for (const auto& f : factors) total += f.multiplicity;
    return total;
}

LieAlgebra ExampleFixture::presentation_algebra() const {
    std::size_t k = 0;
    for (std::size_t pos = presentation.find('Z'); pos != std::string::npos; pos = presentation.find('Z', pos + 1))
        k = std::max<std::size_t>(k, std::stoul(presentation.substr(pos + 1)));
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("Z" + std::to_string(i));
    LieAlgebra g(k, labels);
    apply_brackets(g, presentation);
    return g;
}

LinearForm parse_linear_form(std::string_view text) {
    LinearForm out;
    std::size_t pos = 0;
    auto fail = [&] { return FormatError("bad linear form '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    while (pos < text.size()) {
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        const bool has_coeff = pos > start;
        const Rational coeff = has_coeff ? Rational::parse(text.substr(start, pos - start)) : Rational(1);
        const std::size_t name_start = pos;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
        const std::string name(text.substr(name_start, pos - name_start));
        if (name.empty()) {
            if (!has_coeff) throw fail();
            out += LinearForm(sign * coeff);
        } else {
            if (!std::isalpha(static_cast<unsigned char>(name[0]))) throw fail();
            out += LinearForm::variable(name, sign * coeff);
        }
    }
    return out;
}

namespace {

Parity parity_of(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw FormatError("fixture parity '" + s + "'");
}

ExampleFixture example_from(const Json& j) {
    ExampleFixture e;
    e.family = j.at("family").get<int>();
    e.dim = j.at("dim").get<std::size_t>();
    e.dim_der = j.at("dim_der").get<std::size_t>();
    if (j.contains("tower_index")) e.tower_index = j["tower_index"].get<std::size_t>();
    if (j.contains("der_char_nilpotent")) e.der_char_nilpotent = j["der_char_nilpotent"].get<bool>();
    e.presentation = j.at("presentation").get<std::string>();
    if (j.contains("weight_vector"))
        for (const auto& v : j["weight_vector"]) e.weight_vector.emplace_back(v.get<long>());
    e.ref = j.at("ref").get<std::string>();
    return e;
}

Fixtures load() {
    const Json doc = Json::parse(detail::kFixtureJson);
    Fixtures f;
    for (const auto& t : doc.at("tables")) {
        TableFixture tf;
        tf.id = t.at("id").get<int>();
        tf.parity = parity_of(t.at("parity").get<std::string>());
        tf.dim_derived = t.at("dim_derived").get<std::size_t>();
        if (!t.at("derived_abelian").is_null()) tf.derived_abelian = t["derived_abelian"].get<bool>();
        for (const auto& r : t.at("rows")) {
            TableRow row;
            row.family = r.at("family").get<int>();
            row.dim_center = r.at("dim_center").get<std::size_t>();
            row.quotient = r.at("quotient").get<std::string>();
            if (r.contains("ideal")) row.ideal = r["ideal"].get<std::string>();
            if (r.contains("filiform_ideal")) row.filiform_ideal = r["filiform_ideal"].get<std::string>();
            if (r.contains("dim_der")) row.dim_der = std::array<long, 3>{r["dim_der"][0], r["dim_der"][1], r["dim_der"][2]};
            row.ref = r.at("ref").get<std::string>();
            tf.rows.push_back(std::move(row));
        }
        f.tables.push_back(std::move(tf));
    }
    for (const auto& w : doc.at("weights")) {
        WeightRow row;
        row.table = w.at("table").get<int>();
        row.family = w.at("family").get<int>();
        for (const auto& fac : w.at("factors"))
            row.factors.push_back({parse_linear_form(fac[0].get<std::string>()), fac[1].get<std::size_t>()});
        row.tail_from = w.at("tail_from").get<std::size_t>();
        row.ref = w.at("ref").get<std::string>();
        f.weights.push_back(std::move(row));
    }
    for (const auto& [key, list] : doc.at("charnilp").items()) {
        if (key == "ref") {
            f.charnilp_ref = list.get<std::string>();
            continue;
        }
        auto& entries = f.charnilp[std::stoul(key)];
        for (const auto& e : list) entries.push_back({e[0].get<int>(), !e[1].is_null()});
    }
    f.der_g8_6 = example_from(doc.at("examples").at("der_g8_6"));
    f.der_g7_81 = example_from(doc.at("examples").at("der_g7_81"));
    for (const auto& [key, d] : doc.at("distinction").items()) {
        const std::size_t n = std::stoul(key);
        for (const auto& p : d.at("must_separate")) f.must_separate[n].emplace_back(p[0].get<int>(), p[1].get<int>());
        f.separate_ref[n] = d.at("ref").get<std::string>();
    }
    return f;
}

}  // namespace

const Fixtures& fixtures() {
    static const Fixtures kFixtures = load();
    return kFixtures;
}

const TableFixture& table_fixture(int id) {
    for (const auto& t : fixtures().tables)
        if (t.id == id) return t;
    throw InvalidParameter("no table " + std::to_string(id));
}

std::optional<TableRow> table_row(int family) {
    for (const auto& t : fixtures().tables)
        for (const auto& r : t.rows)
            if (r.family == family) return r;
    return std::nullopt;
}

std::optional<int> table_of(int family) {
    for (const auto& t : fixtures().tables)
        for (const auto& r : t.rows)
            if (r.family == family) return t.id;
    return std::nullopt;
}

std::vector<WeightRow> weight_rows(int table) {
    std::vector<WeightRow> out;
    for (const auto& w : fixtures().weights)
        if (w.table == table) out.push_back(w);
    return out;
}

}  // namespace nilform
