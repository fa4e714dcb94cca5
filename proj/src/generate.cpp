#include "lfc/generate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "lfc/errors.hpp"

namespace lfc {

namespace {

using Facets = std::vector<std::vector<std::uint32_t>>;

const std::map<std::string, Facets>& named_fixtures() {
  static const std::map<std::string, Facets> table = {
      {"circle_3", {{0, 1}, {1, 2}, {0, 2}}},
      {"sphere2_4", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}},
      // Moebius' 7-vertex torus.
      {"torus7", {{0, 1, 3}, {0, 1, 5}, {0, 2, 3}, {0, 2, 6}, {0, 4, 5}, {0, 4, 6}, {1, 2, 4},
                  {1, 2, 6}, {1, 3, 4}, {1, 5, 6}, {2, 3, 5}, {2, 4, 5}, {3, 4, 6}, {3, 5, 6}}},
      // Half of the icosahedron.
      {"rp2_6", {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5},
                 {1, 3, 4}, {2, 4, 5}, {1, 3, 5}}},
      {"klein8", {{0, 1, 4}, {0, 1, 6}, {0, 3, 4}, {0, 3, 5}, {0, 5, 6}, {1, 3, 5}, {1, 3, 7}, {1, 4, 5},
                  {1, 6, 7}, {2, 3, 6}, {2, 3, 7}, {2, 4, 5}, {2, 4, 7}, {2, 5, 6}, {3, 4, 6}, {4, 6, 7}}},
  };
  return table;
}

std::optional<std::size_t> numeric_suffix(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size() || name.size() > prefix.size() + 6) return std::nullopt;
  std::size_t k = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    k = k * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return k;
}

std::size_t vertex_count(const Facets& facets) {
  std::uint32_t top = 0;
  for (const auto& f : facets)
    for (auto v : f) top = std::max(top, v + 1);
  return top;
}

}  // namespace

Complex shelled_tree(int n, std::size_t size, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("shelled_tree: dimension must be at least 1");
  if (size == 0) throw PreconditionError("shelled_tree: size must be at least 1");
  std::mt19937_64 rng(seed);
  Facets tops;
  std::vector<std::uint32_t> first(n + 1);
  for (int i = 0; i <= n; ++i) first[i] = static_cast<std::uint32_t>(i);
  tops.push_back(first);
  std::uint32_t next = static_cast<std::uint32_t>(n + 1);
  // Every (n-1)-face of the current complex, each listed once.
  std::vector<std::vector<std::uint32_t>> faces;
  std::set<std::vector<std::uint32_t>> seen;
  auto add_faces = [&](const std::vector<std::uint32_t>& s) {
    for (int skip = 0; skip <= n; ++skip) {
      std::vector<std::uint32_t> f;
      for (int i = 0; i <= n; ++i)
        if (i != skip) f.push_back(s[i]);
      if (seen.insert(f).second) faces.push_back(std::move(f));
    }
  };
  add_faces(first);
  for (std::size_t k = 1; k < size; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    auto s = faces[pick(rng)];
    s.push_back(next++);
    tops.push_back(s);
    add_faces(s);
  }
  return closure(tops, Universe::numbered(next, "v"));
}

Complex cone(const Complex& c, const std::string& apex_label) {
  if (c.level() != 0 || c.staged()) throw PreconditionError("cone: needs a level-0 complex");
  std::vector<std::string> labels = c.universe().labels();
  if (c.universe().index_of(apex_label)) throw PreconditionError("cone: apex label already used");
  labels.push_back(apex_label);
  const auto apex = static_cast<std::uint32_t>(labels.size() - 1);
  Facets tops;
  for (auto [d, i] : c.maximal_simplices()) {
    std::vector<std::uint32_t> s;
    for (VertexId v : c.simplex(d, i)) s.push_back(c.vertex(v).base);
    s.push_back(apex);
    tops.push_back(std::move(s));
  }
  if (tops.empty()) tops.push_back({apex});
  return closure(tops, Universe(std::move(labels)));
}

Facets fixture_facets(const std::string& name) {
  const auto& table = named_fixtures();
  if (auto it = table.find(name); it != table.end()) return it->second;
  if (auto k = numeric_suffix(name, "path_"); k && *k >= 1) {
    if (*k == 1) return {{0}};
    Facets f;
    for (std::uint32_t i = 0; i + 1 < *k; ++i) f.push_back({i, i + 1});
    return f;
  }
  if (auto k = numeric_suffix(name, "star_")) {
    if (*k == 0) return {{0}};
    Facets f;
    for (std::uint32_t i = 1; i <= *k; ++i) f.push_back({0, i});
    return f;
  }
  if (auto k = numeric_suffix(name, "simplex_"); k && *k <= 12) {
    std::vector<std::uint32_t> s(*k + 1);
    for (std::uint32_t i = 0; i <= *k; ++i) s[i] = i;
    return {s};
  }
  throw InputError("unknown fixture '" + name + "'");
}

Complex fixture(const std::string& name) {
  const Facets facets = fixture_facets(name);
  return closure(facets, Universe::numbered(vertex_count(facets), "x"));
}

std::vector<std::string> fixture_names() {
  return {"circle_3", "sphere2_4", "torus7", "rp2_6", "klein8"};
}

Complex generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::shelled_tree: return shelled_tree(spec.dim, spec.size, spec.seed);
    case GeneratorSpec::Kind::fixture: return fixture(spec.fixture);
    case GeneratorSpec::Kind::cone:
      if (spec.fixture.empty()) return cone(shelled_tree(spec.dim, spec.size, spec.seed));
      return cone(fixture(spec.fixture));
  }
  throw PreconditionError("generate: unknown kind");
}

}  // namespace lfc
