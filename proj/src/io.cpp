#include "lfc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lfc/errors.hpp"

namespace lfc {

namespace {

std::uint32_t as_index(const Json& j, std::size_t limit, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= limit)
    throw InputError(std::string(what) + " index " + j.dump() + " is out of range (" + std::to_string(limit) +
                     " entries)");
  return static_cast<std::uint32_t>(j.get<long long>());
}

bool is_face(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ComplexFile parse_complex(const std::string& text, const ReadOptions& options) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("a complex document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError("missing \"vertices\" list");

  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  Universe universe(std::move(labels));

  const std::size_t level = doc.value("level", std::size_t{0});
  const bool staged = doc.value("staged", false);

  std::vector<CoordVertex> points;
  if (doc.contains("points")) {
    for (const auto& p : doc["points"]) {
      if (!p.is_array() || p.size() != 1 + level + (staged ? 1 : 0))
        throw InputError("point " + p.dump() + " does not have the shape of level " + std::to_string(level) +
                         (staged ? " with a stage" : ""));
      CoordVertex v(as_index(p[0], universe.size(), "vertex"));
      for (std::size_t k = 0; k < level; ++k) {
        if (!p[1 + k].is_number_unsigned()) throw InputError("coordinates must be natural numbers");
        v.coords.push_back(p[1 + k].get<Coord>());
      }
      if (staged) {
        if (!p[1 + level].is_number_unsigned()) throw InputError("stages must be natural numbers");
        v.stage = p[1 + level].get<Coord>();
      }
      points.push_back(std::move(v));
    }
  } else {
    if (level != 0 || staged) throw InputError("\"points\" are required for level > 0 or staged complexes");
    for (std::uint32_t i = 0; i < universe.size(); ++i) points.emplace_back(i);
  }

  const bool literal = doc.contains("simplices");
  const char* key = literal ? "simplices" : "maximal_simplices";
  if (!doc.contains(key) || !doc[key].is_array()) throw InputError("missing \"maximal_simplices\" list");
  if (literal && doc.contains("maximal_simplices")) throw InputError("give either \"simplices\" or \"maximal_simplices\"");

  ComplexBuilder builder(universe, level, staged);
  std::vector<VertexId> point_id(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) point_id[i] = builder.vertex(points[i]);
  if (std::set<CoordVertex>(points.begin(), points.end()).size() != points.size())
    throw InputError("repeated point");

  ComplexFile file;
  std::vector<std::vector<VertexId>> listed;
  for (const auto& s : doc[key]) {
    if (!s.is_array() || s.empty()) throw InputError("simplices must be nonempty lists of indices");
    std::vector<VertexId> ids;
    for (const auto& i : s) ids.push_back(point_id[as_index(i, points.size(), "point")]);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw InputError("repeated vertex in " + s.dump());
    if (ids.size() > 24) throw InputError("simplex " + s.dump() + " is too large");
    listed.push_back(ids);
    if (literal && options.strict)
      builder.add_simplex(ids);
    else
      builder.add_with_faces(ids);
  }
  if (options.strict && !literal) {
    std::sort(listed.begin(), listed.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i < listed.size() && file.strict_violations.size() < 8; ++i)
      for (std::size_t j = i + 1; j < listed.size(); ++j)
        if (is_face(listed[i], listed[j])) {
          file.strict_violations.push_back("listed maximal simplex #" + std::to_string(i) + " is a face of another");
          break;
        }
  }
  file.complex = std::move(builder).build();
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw InputError("\"metadata\" must be an object");
    file.metadata = doc["metadata"];
  }
  return file;
}

ComplexFile read_complex_file(const std::filesystem::path& path, const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str(), options);
}

std::string complex_to_text(const Complex& c, const Json& metadata) {
  const bool plain = c.level() == 0 && !c.staged();
  std::ostringstream out;
  out << "{\n  \"vertices\": " << Json(c.universe().labels()).dump() << ",\n";
  // Plain complexes index the universe directly; otherwise the points.
  std::vector<std::uint32_t> index(c.num_vertices());
  if (plain) {
    for (VertexId v = 0; v < c.num_vertices(); ++v) index[v] = c.vertex(v).base;
  } else {
    out << "  \"level\": " << c.level() << ",\n  \"staged\": " << (c.staged() ? "true" : "false") << ",\n";
    out << "  \"points\": [";
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
      const auto& p = c.vertex(v);
      Json row = Json::array({p.base});
      for (auto x : p.coords) row.push_back(x);
      if (p.stage) row.push_back(*p.stage);
      out << (v ? ",\n    " : "\n    ") << row.dump();
      index[v] = v;
    }
    out << (c.num_vertices() ? "\n  ],\n" : "],\n");
  }
  auto maximal = c.maximal_simplices();
  out << "  \"maximal_simplices\": [";
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    Json row = Json::array();
    for (VertexId v : c.simplex(maximal[k].first, maximal[k].second)) row.push_back(index[v]);
    out << (k ? ",\n    " : "\n    ") << row.dump();
  }
  out << (maximal.empty() ? "]" : "\n  ]");
  if (!metadata.empty()) {
    std::string meta = metadata.dump(2);
    std::string indented;
    for (char ch : meta) {
      indented += ch;
      if (ch == '\n') indented += "  ";
    }
    out << ",\n  \"metadata\": " << indented;
  }
  out << "\n}\n";
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace lfc
