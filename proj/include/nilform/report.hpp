#pragma once

#include "nilform/derivations.hpp"
#include "nilform/invariants.hpp"
#include "nilform/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilform {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

struct ReportItem {
    std::string id;
    Json computed;
    Json expected;
    std::string ref;
    bool pass = true;
};

/// Any failing item makes the report fail.
struct Report {
    std::string suite;
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
    std::vector<ReportItem> items;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t failures() const;
    void add(ReportItem item) { items.push_back(std::move(item)); }
    void append(const Report& other);
};

enum class Format { Text, Json, Csv };

/// Throws InvalidParameter.
Format parse_format(const std::string& name);

Json to_json(const Report& r);
std::string render(const Report& r, Format f);

Json to_json(const Matrix& m);
Json to_json(const Vector& v);
Json to_json(const CharSequence& c);
Json to_json(const Fingerprint& f);
Json to_json(const CharNilpotency& c);

}  // namespace nilform
