#include "nilform/catalog.hpp"

#include "nilform/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace nilform {

namespace {

// Heisenberg-type tail [Y_{2t+offset}, Y_{2t+offset+1}] = X6 for first <= t <= m - gap.
struct Tail {
    int offset;
    int first;
    int gap;
};

struct Block {
    std::vector<int> indices;
    Parity parity;
    int min_m;
    std::size_t dim_derived;
    std::optional<bool> derived_abelian;
    std::string common;
    Tail tail;
    std::map<int, std::string> bullets;
};

constexpr Tail kEvenTail2{-1, 2, 3};
constexpr Tail kEvenTail1{-1, 1, 3};
constexpr Tail kOddTail1{0, 1, 3};
constexpr Tail kOddTail2{0, 2, 3};

std::vector<int> range(int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
}

const std::vector<Block>& blocks() {
    static const std::vector<Block> kBlocks = {
        {{1, 2, 3}, Parity::Even, 4, 6, std::nullopt, "X5,X2=Y1; X3,X4=Y1", kEvenTail2,
         {{1, "X3,X2=Y2; Y2,X3=X6; Y2,X2=X5"}, {2, "X3,X2=Y2"}, {3, "X4,X2=X6; X3,X2=Y2+X5"}}},
        {{4}, Parity::Even, 5, 6, std::nullopt, "X5,X2=Y1; X3,X4=Y1; X3,X2=Y2; Y3,X3=X6; Y3,X2=X5", kEvenTail2, {}},
        {range(5, 19), Parity::Even, 4, 5, std::nullopt, "", kEvenTail2,
         {{5, "X5,X2=Y1; X3,X4=Y1; Y2,X3=X6; Y2,X2=X5"},
          {6, "X3,X2=Y1; Y1,X3=X6; Y1,X2=X5+X6; Y2,X2=X6"},
          {7, "X4,X2=aX6; X3,X2=Y1+aX5; Y1,X3=X6; Y1,X2=X5+X6; Y2,X2=X6"},
          {8, "X3,X2=Y1; Y1,X3=X6; Y1,X2=X5; Y2,X2=X6"},
          {9, "X4,X2=X6; X3,X2=Y1+X5; Y1,X3=X6; Y1,X2=X5; Y2,X2=X6"},
          {10, "X3,X2=Y1; Y1,X2=X6; Y2,X3=X6; Y2,X2=X5"},
          {11, "X5,X2=X6; X3,X4=X6; X3,X2=Y1; Y1,X2=X6; Y2,X3=X6; Y2,X2=X5"},
          {12, "X3,X2=Y1; Y2,X3=X6; Y2,X2=X5"},
          {13, "X5,X2=X6; X3,X4=X6; X3,X2=Y1; Y2,X3=X6; Y2,X2=X5"},
          {14, "X5,X2=X6; X3,X4=X6; X4,X2=X6; X3,X2=Y1+X5; Y2,X3=X6; Y2,X2=X5"},
          {15, "X4,X2=X6; X3,X2=Y1+X5; Y2,X3=X6; Y2,X2=X5"},
          {16, "X3,X2=Y1; Y2,X2=X6"},
          {17, "X5,X2=X6; X3,X4=X6; X3,X2=Y1; Y2,X2=X6"},
          {18, "X5,X2=X6; X3,X4=X6; X4,X2=X6; X3,X2=Y1+X5; Y2,X2=X6"},
          {19, "X4,X2=X6; X3,X2=Y1+X5; Y2,X2=X6"}}},
        {range(20, 23), Parity::Even, 5, 5, std::nullopt, "Y2,X3=X6; Y2,X2=X5; Y3,X2=X6; Y2,Y4=X6", {1, 2, 4},
         {{20, "X3,X2=Y1"},
          {21, "X5,X2=X6; X3,X4=X6; X3,X2=Y1"},
          {22, "X5,X2=X6; X3,X4=X6; X4,X2=X6; X3,X2=Y1+X5"},
          {23, "X4,X2=X6; X3,X2=Y1+X5"}}},
        {{24, 25}, Parity::Even, 4, 4, false, "X5,X2=X6; X3,X4=X6; Y1,X3=X6; Y1,X2=X5; Y2,X2=X6", kEvenTail2,
         {{25, "X4,X2=X6; X3,X2=X5"}}},
        {{26, 27}, Parity::Even, 4, 4, false, "X5,X2=X6; X3,X4=X6", kEvenTail1,
         {{26, "Y1,X3=X6; Y1,X2=X5"}, {27, "X4,X2=X6; X3,X2=X5; Y1,X3=X6; Y1,X2=X5"}}},
        {{28, 29}, Parity::Even, 3, 4, false, "X5,X2=X6; X3,X4=X6", kEvenTail1, {{29, "X4,X2=X6; X3,X2=X5"}}},
        {range(30, 36), Parity::Even, 5, 4, true, "Y1,X2=X4; Y1,X3=X5; Y1,X4=X6; Y2,X2=X5; Y2,X3=X6", {1, 2, 4},
         {{30, "Y3,X2=X6; Y1,Y4=X6"},
          {31, "Y3,X2=X6; Y1,Y4=X6; Y2,Y4=X6"},
          {32, "Y3,X2=X6; Y1,Y4=X6; Y2,Y3=X6"},
          {33, "Y3,X2=X6; Y1,Y4=X6; Y2,Y3=X6; Y2,Y4=X6"},
          {34, "Y3,X2=X6; Y2,Y4=X6"},
          {35, "Y3,X2=X6; Y1,Y3=X6; Y2,Y4=X6"},
          {36, "Y1,Y3=X6; Y2,Y4=X6"}}},
        {range(37, 41), Parity::Even, 4, 4, true, "Y1,X2=X4; Y1,X3=X5; Y1,X4=X6", kEvenTail1,
         {{37, "Y2,X3=X6; Y2,X2=X5"}, {38, "Y2,X2=X6"}, {39, "X3,X2=X6; Y2,X2=X6"}, {41, "X3,X2=X6"}}},
        {range(42, 44), Parity::Even, 4, 4, true, "Y1,X2=X4; Y1,X3=X5; Y1,X4=X6", kEvenTail2,
         {{42, "Y2,X3=X6; Y2,X2=X5"}, {43, "Y2,X2=X6"}, {44, "X3,X2=X6; Y2,X2=X6"}}},
        {{45, 46}, Parity::Even, 4, 4, true, "Y1,X3=X6; Y1,X2=X5; Y2,X2=X6", kEvenTail2,
         {{46, "X4,X2=X6; X3,X2=X5"}}},
        {range(47, 50), Parity::Even, 4, 4, true, "Y1,X3=X6; Y1,X2=X5", kEvenTail1,
         {{47, "Y2,X2=X6"}, {48, "X4,X2=X6; X3,X2=X5; Y2,X2=X6"}, {50, "X4,X2=X6; X3,X2=X5"}}},
        {range(51, 53), Parity::Even, 3, 4, true, "", kEvenTail1,
         {{52, "X3,X2=X6"}, {53, "X4,X2=X6; X3,X2=X5"}}},

        {{54}, Parity::Odd, 4, 6, std::nullopt, "X5,X2=Y1; X3,X4=Y1; X3,X2=Y2; Y3,X3=X6; Y3,X2=X5", kOddTail2, {}},
        {range(55, 61), Parity::Odd, 4, 5, std::nullopt, "Y2,X3=X6; Y2,X2=X5", kOddTail1,
         {{55, "X5,X2=Y1; X3,X4=Y1"},
          {56, "X3,X2=Y1; Y1,X2=X6"},
          {57, "X5,X2=X6; X3,X4=X6; X3,X2=Y1; Y1,X2=X6"},
          {58, "X3,X2=Y1"},
          {59, "X5,X2=X6; X3,X4=X6; X3,X2=Y1"},
          {60, "X5,X2=X6; X3,X4=X6; X4,X2=X6; X3,X2=Y1+X5"},
          {61, "X4,X2=X6; X3,X2=Y1+X5"}}},
        {range(62, 74), Parity::Odd, 3, 5, std::nullopt, "", kOddTail1,
         {{62, "X5,X2=Y1; X3,X4=Y1; X4,X2=X6; X3,X2=X5"},
          {63, "X5,X2=Y1; X3,X4=Y1; X3,X2=X6"},
          {64, "X5,X2=Y1; X3,X4=Y1"},
          {65, "X3,X2=Y1; Y1,X3=X6; Y1,X2=X5+X6"},
          {66, "X4,X2=aX6; X3,X2=Y1+aX5; Y1,X3=X6; Y1,X2=X5+X6"},
          {67, "X3,X2=Y1; Y1,X3=X6; Y1,X2=X5"},
          {68, "X4,X2=X6; X3,X2=Y1+X5; Y1,X3=X6; Y1,X2=X5"},
          {69, "X3,X2=Y1; Y1,X2=X6"},
          {70, "X5,X2=X6; X3,X4=X6; X3,X2=Y1; Y1,X2=X6"},
          {71, "X3,X2=Y1"},
          {72, "X5,X2=X6; X3,X4=X6; X3,X2=Y1"},
          {73, "X5,X2=X6; X3,X4=X6; X4,X2=X6; X3,X2=Y1+X5"},
          {74, "X4,X2=X6; X3,X2=Y1+X5"}}},
        {range(75, 78), Parity::Odd, 4, 5, std::nullopt, "Y2,X3=X6; Y2,X2=X5; Y3,X2=X6", kOddTail2,
         {{75, "X3,X2=Y1"},
          {76, "X5,X2=X6; X3,X4=X6; X3,X2=Y1"},
          {77, "X5,X2=X6; X3,X4=X6; X4,X2=X6; X3,X2=Y1+X5"},
          {78, "X4,X2=X6; X3,X2=Y1+X5"}}},
        {{79, 80}, Parity::Odd, 4, 4, false, "X5,X2=X6; X3,X4=X6; Y1,X2=X5; Y1,X3=X6; Y2,X2=X6; Y1,Y3=X6", kOddTail2,
         {{80, "X4,X2=X6; X3,X2=X5"}}},
        {range(81, 85), Parity::Odd, 3, 4, false, "X5,X2=X6; X3,X4=X6", kOddTail1,
         {{81, "Y1,X3=X6; Y1,X2=X5+X6"},
          {82, "Y1,X3=X6; Y1,X2=X5"},
          {83, "X4,X2=X6; X3,X2=X5; Y1,X3=X6; Y1,X2=X5"},
          {84, "Y1,X2=X6"},
          {85, "X4,X2=X6; X3,X2=X5; Y1,X2=X6"}}},
        {{86}, Parity::Odd, 5, 4, true,
         "Y1,X2=X4; Y1,X3=X5; Y1,X4=X6; Y2,X2=X5; Y2,X3=X6; Y3,X2=X6; Y1,Y4=X6; Y2,Y5=X6", {0, 3, 3}, {}},
        {range(87, 92), Parity::Odd, 4, 4, true, "Y1,X2=X4; Y1,X3=X5; Y1,X4=X6; Y2,X2=X5; Y2,X3=X6", kOddTail2,
         {{87, "Y3,X2=X6; Y2,Y3=X6"},
          {88, "Y3,X2=X6"},
          {89, "Y3,X2=X6; Y1,Y2=X6"},
          {90, "Y3,X2=X6; Y1,Y3=X6"},
          {91, "Y1,Y3=X6"},
          {92, "Y2,Y3=X6"}}},
        {range(93, 95), Parity::Odd, 3, 4, true, "Y1,X3=X5; Y1,X4=X6", kOddTail1,
         {{93, "Y1,X2=X4+X6"}, {94, "Y1,X2=X4"}, {95, "Y1,X2=X4; X3,X2=X6"}}},
        {{96, 97}, Parity::Odd, 4, 4, true, "Y1,X2=X5; Y1,X3=X6; Y2,X2=X6; Y1,Y3=X6", kOddTail2,
         {{97, "X4,X2=X6; X3,X2=X5"}}},
        {range(98, 103), Parity::Odd, 3, 4, true, "", kOddTail1,
         {{98, "X4,X2=X6; X3,X2=X5; Y1,X3=X6; Y1,X2=X5"},
          {99, "Y1,X3=X6; Y1,X2=X5"},
          {100, "Y1,X3=X6; Y1,X2=X5+X6"},
          {101, "Y1,X2=X6"},
          {102, "X4,X2=X6; X3,X2=X5; Y1,X2=X6"},
          {103, "X3,X2=X6; Y1,X2=X6"}}},
    };
    return kBlocks;
}

const std::map<int, std::vector<std::string>>& errata_table() {
    static const std::map<int, std::vector<std::string>> kErrata = [] {
        std::map<int, std::vector<std::string>> e;
        for (int i = 30; i <= 36; ++i)
            e[i].push_back("tail [Y_{2t+1},Y_{2t+2}]=X6 printed for 2<=t<=m-3 exceeds Y_{2m-6}; encoded for 2<=t<=m-4");
        for (int i : {45, 46})
            e[i].push_back("common line printed as [X1,Xj]=X_{j+2}; encoded as the filiform chain [X1,Xj]=X_{j+1}");
        for (int i : {26, 27})
            e[i].push_back("stray bigskip in the block header; read as the three displayed common lines");
        e[61].push_back(
            "no bullet printed; reconstructed as common block plus [X4,X2]=X6, [X3,X2]=Y1+X5 to match dim C^1 = 5");
        e[69].push_back("printed bullet labels the second bracket mu^68; encoded as [Y1,X2]=X6 in family 69");
        e[87].push_back("printed bullet labels [Y2,Y3] with mu_{2m}; encoded in the odd family mu_{2m+1}^87");
        return e;
    }();
    return kErrata;
}

const Block& block_of(int index) {
    for (const auto& b : blocks())
        if (std::find(b.indices.begin(), b.indices.end(), index) != b.indices.end()) return b;
    throw UnknownFamily("no catalog family with index " + std::to_string(index));
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::string rational_slug(const Rational& r) {
    std::string s = r.to_string();
    std::replace(s.begin(), s.end(), '/', '_');
    std::replace(s.begin(), s.end(), '-', 'm');
    return s;
}

}  // namespace

void apply_brackets(LieAlgebra& g, const std::string& spec, const Rational& alpha) {
    for (const auto& item : split(spec, ';')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw FormatError("bracket item without '=': " + item);
        const auto lhs = split(item.substr(0, eq), ',');
        if (lhs.size() != 2) throw FormatError("bracket needs two arguments: " + item);
        const std::size_t i = g.index_of(lhs[0]);
        const std::size_t j = g.index_of(lhs[1]);
        if (!g.basis_bracket_is_zero(i, j)) throw FormatError("bracket assigned twice: " + item);
        Vector value(g.dim());
        const std::string rhs = trim(item.substr(eq + 1));
        std::size_t pos = 0;
        while (pos < rhs.size()) {
            Rational sign = 1;
            if (rhs[pos] == '+' || rhs[pos] == '-') {
                if (rhs[pos] == '-') sign = -1;
                ++pos;
            }
            Rational coeff = 1;
            if (pos < rhs.size() && rhs[pos] == 'a') {
                coeff = alpha;
                ++pos;
            } else {
                std::size_t start = pos;
                while (pos < rhs.size() && (std::isdigit(static_cast<unsigned char>(rhs[pos])) || rhs[pos] == '/')) ++pos;
                if (pos > start) coeff = Rational::parse(rhs.substr(start, pos - start));
            }
            std::size_t start = pos;
            while (pos < rhs.size() && rhs[pos] != '+' && rhs[pos] != '-') ++pos;
            const std::string label = trim(rhs.substr(start, pos - start));
            if (label.empty()) throw FormatError("empty term in: " + item);
            value[g.index_of(label)] += sign * coeff;
        }
        g.set_bracket(i, j, value);
    }
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> kEntries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& b : blocks())
            for (int i : b.indices) {
                CatalogEntry e;
                e.index = i;
                e.parity = b.parity;
                e.min_m = b.min_m;
                e.dim_derived = b.dim_derived;
                e.derived_abelian = b.derived_abelian;
                e.has_alpha = (i == 7 || i == 66);
                e.reconstructed = (i == 61);
                const auto it = errata_table().find(i);
                if (it != errata_table().end()) e.errata = it->second;
                out.push_back(std::move(e));
            }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
        return out;
    }();
    return kEntries;
}

const CatalogEntry& catalog_entry(int index) {
    if (index < 1 || index > static_cast<int>(catalog().size()))
        throw UnknownFamily("no catalog family with index " + std::to_string(index));
    return catalog()[static_cast<std::size_t>(index - 1)];
}

std::vector<std::string> errata(int index) { return catalog_entry(index).errata; }

std::size_t family_dimension(int index, int m) {
    const auto& e = catalog_entry(index);
    return static_cast<std::size_t>(2 * m + (e.parity == Parity::Odd ? 1 : 0));
}

LieAlgebra build(int index, int m, std::optional<Rational> alpha) {
    const auto& e = catalog_entry(index);
    if (m < e.min_m)
        throw InvalidDimension("family " + std::to_string(index) + " requires m >= " + std::to_string(e.min_m));
    if (e.has_alpha && !alpha) throw MissingParameter("family " + std::to_string(index) + " requires alpha");
    if (e.has_alpha && alpha->is_zero()) throw InvalidParameter("alpha must be nonzero");
    const std::size_t n = family_dimension(index, m);
    std::vector<std::string> labels;
    for (int i = 1; i <= 6; ++i) labels.push_back("X" + std::to_string(i));
    for (std::size_t i = 1; i + 6 <= n; ++i) labels.push_back("Y" + std::to_string(i));
    LieAlgebra g(n, labels);
    const Rational a = alpha.value_or(Rational(0));
    apply_brackets(g, "X1,X2=X3; X1,X3=X4; X1,X4=X5; X1,X5=X6", a);
    const Block& b = block_of(index);
    apply_brackets(g, b.common, a);
    if (const auto it = b.bullets.find(index); it != b.bullets.end()) apply_brackets(g, it->second, a);
    for (int t = b.tail.first; t <= m - b.tail.gap; ++t) {
        const int p = 2 * t + b.tail.offset;
        apply_brackets(g, "Y" + std::to_string(p) + ",Y" + std::to_string(p + 1) + "=X6", a);
    }
    return g;
}

std::string CatalogInstance::id() const {
    std::string s = "mu_" + std::to_string(dim()) + "_" + std::to_string(index);
    if (alpha) s += "_alpha_" + rational_slug(*alpha);
    return s;
}

std::string CatalogInstance::label() const {
    std::string s = "g" + std::to_string(dim()) + "^" + std::to_string(index);
    if (alpha) s += "(a=" + alpha->to_string() + ")";
    return s;
}

std::vector<Rational> default_alpha_samples() { return {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}; }

std::vector<CatalogInstance> enumerate(std::size_t n, const std::vector<Rational>& alphas) {
    std::vector<CatalogInstance> out;
    if (n < 7) return out;
    const Parity parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
    const int m = static_cast<int>(n / 2);
    for (const auto& e : catalog()) {
        if (e.parity != parity || m < e.min_m) continue;
        if (e.has_alpha) {
            for (const auto& a : alphas) {
                if (a.is_zero()) continue;
                out.push_back({e.index, m, a, build(e.index, m, a)});
            }
        } else {
            out.push_back({e.index, m, std::nullopt, build(e.index, m)});
        }
    }
    return out;
}

}  // namespace nilform
