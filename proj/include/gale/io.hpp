#pragma once

// Complex file formats.
//
// Text: one facet per line, vertex names separated by whitespace; a line
// whose first non-blank character is '#' is a comment.
//
// Structured (JSON): {"name": "...", "facets": [["1","2"], ...]} with an
// optional "vertices" array fixing the vertex order. Writing always emits
// "vertices", so a structured round trip reproduces the complex exactly.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gale/complex.hpp"

namespace gale {

struct NamedComplex
{
  std::optional<std::string> name;
  Complex complex;
};

Complex parse_facet_text(std::string_view text);
std::string format_facet_text(const Complex& x, const std::optional<std::string>& name = {});

nlohmann::json to_json(const Complex& x, const std::optional<std::string>& name = {});
NamedComplex complex_from_json(const nlohmann::json& j);
/// Parses JSON text; syntax errors become InputError with line and column.
NamedComplex parse_complex_json(std::string_view text);

nlohmann::json face_to_json(const Complex& x, Face f);
/// Array of vertex-name strings. Unknown names raise IllegalMove.
Face face_from_json(const Complex& x, const nlohmann::json& j);

/// Reads either format; JSON is recognized by a leading '{'.
NamedComplex read_complex_file(const std::filesystem::path& path);

}  // namespace gale
