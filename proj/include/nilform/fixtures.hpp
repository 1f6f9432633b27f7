#pragma once

#include "nilform/catalog.hpp"
#include "nilform/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilform {

/// One printed row of Tables 1-7.
struct TableRow {
    int family = 0;
    std::size_t dim_center = 0;
    std::string quotient;                        // label of g/Z(g), kept verbatim
    std::optional<std::string> ideal;            // 7-dim ideal class label (Tables 2 and 5)
    std::optional<std::string> filiform_ideal;   // 6-dim filiform ideal label
    std::optional<std::array<long, 3>> dim_der;  // a m^2 + b m + c
    std::string ref;

    [[nodiscard]] std::optional<long> dim_der_at(int m) const;
};

struct TableFixture {
    int id = 0;
    Parity parity = Parity::Even;
    std::size_t dim_derived = 0;
    std::optional<bool> derived_abelian;
    std::vector<TableRow> rows;
};

struct WeightFactor {
    LinearForm form;
    std::size_t multiplicity = 1;
};

/// Printed factors of p_c(lambda) for one row of Tables 8-9; the tail covers Y_i for i >= tail_from.
struct WeightRow {
    int table = 0;
    int family = 0;
    std::vector<WeightFactor> factors;
    std::size_t tail_from = 1;
    std::string ref;

    [[nodiscard]] std::size_t factor_count() const;
};

struct CharNilpEntry {
    int family = 0;
    bool alpha = false;  // every alpha != 0
};

struct ExampleFixture {
    int family = 0;
    std::size_t dim = 0;
    std::size_t dim_der = 0;
    std::optional<std::size_t> tower_index;
    std::optional<bool> der_char_nilpotent;
    std::string presentation;  // brackets on Z1..Zk
    std::vector<Rational> weight_vector;
    std::string ref;

    [[nodiscard]] LieAlgebra presentation_algebra() const;
};

struct Fixtures {
    std::vector<TableFixture> tables;
    std::vector<WeightRow> weights;
    std::map<std::size_t, std::vector<CharNilpEntry>> charnilp;
    std::string charnilp_ref;
    ExampleFixture der_g8_6;
    ExampleFixture der_g7_81;
    std::map<std::size_t, std::vector<std::pair<int, int>>> must_separate;
    std::map<std::size_t, std::string> separate_ref;
};

/// Parsed once from the embedded data file.
const Fixtures& fixtures();
/// Throws InvalidParameter for ids outside 1..7.
const TableFixture& table_fixture(int id);
std::optional<TableRow> table_row(int family);
std::optional<int> table_of(int family);
std::vector<WeightRow> weight_rows(int table);

/// "3f11+f22", "f11+2f22", "mu_3", "0"; throws FormatError.
LinearForm parse_linear_form(std::string_view text);

}  // namespace nilform
