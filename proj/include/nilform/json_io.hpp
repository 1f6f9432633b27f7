#pragma once

#include "nilform/lie_algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace nilform {

using Json = nlohmann::ordered_json;

/// {"dim", "labels", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}, 1-based, i < j, nonzero entries only.
Json algebra_to_json(const LieAlgebra& g);
/// Throws FormatError on malformed documents.
LieAlgebra algebra_from_json(const Json& doc);

std::string write_algebra(const LieAlgebra& g);
LieAlgebra read_algebra(const std::string& text);

void save_algebra(const LieAlgebra& g, const std::filesystem::path& path);
LieAlgebra load_algebra(const std::filesystem::path& path);

}  // namespace nilform
