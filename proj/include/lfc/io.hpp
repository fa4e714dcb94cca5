#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfc/complex.hpp"

namespace lfc {

using Json = nlohmann::ordered_json;

/// A complex document:
///   {"vertices": [labels of X in order],
///    "level": n, "staged": bool,              (omitted for plain complexes)
///    "points": [[base, c1, ..., cn, stage?]], (omitted for plain complexes)
///    "maximal_simplices": [[i, j, ...]],      indices into points (or vertices)
///    "metadata": {...}}
/// A "simplices" list may replace "maximal_simplices"; it is closed under
/// faces on reading unless `strict` is set, in which case it is taken as is.
struct ComplexFile {
  Complex complex;
  Json metadata = Json::object();
  /// With `strict`: listed maximal simplices that are faces of others.
  std::vector<std::string> strict_violations;
};

struct ReadOptions {
  bool strict = false;
};

/// Throws InputError on malformed documents, out-of-range indices, empty
/// simplices, duplicate labels or inconsistent point shapes.
ComplexFile parse_complex(const std::string& text, const ReadOptions& options = {});
ComplexFile read_complex_file(const std::filesystem::path& path, const ReadOptions& options = {});

/// Canonical text: maximal simplices in (dimension, lexicographic) order.
/// Identical complexes and metadata give identical bytes.
std::string complex_to_text(const Complex& c, const Json& metadata = Json::object());
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace lfc
