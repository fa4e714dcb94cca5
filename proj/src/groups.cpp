#include "lfc/detail/groups.hpp"

#include <algorithm>

#include "lfc/errors.hpp"

namespace lfc::detail {

SimplexGroups::SimplexGroups(const Complex& c, std::vector<std::uint32_t> vertex_key)
    : complex_(&c), key_(std::move(vertex_key)) {
  KeySet keys;
  for (int d = 0; d <= c.dim(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) {
      keys.clear();
      for (VertexId v : c.simplex(d, i)) keys.push_back(key_[v]);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      groups_[keys].emplace_back(d, i);
    }
}

Complex SimplexGroups::gather(std::span<const std::uint32_t> keys) const {
  return subcomplex_from(*complex_, members(keys));
}

std::vector<std::pair<int, std::size_t>> SimplexGroups::members(std::span<const std::uint32_t> keys) const {
  if (keys.size() > 20) throw PreconditionError("gather: key set too large");
  std::vector<std::pair<int, std::size_t>> picked;
  KeySet subset;
  for (std::uint32_t mask = 1; mask < (1u << keys.size()); ++mask) {
    subset.clear();
    for (std::size_t j = 0; j < keys.size(); ++j)
      if (mask & (1u << j)) subset.push_back(keys[j]);
    auto it = groups_.find(subset);
    if (it != groups_.end()) picked.insert(picked.end(), it->second.begin(), it->second.end());
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::size_t SimplexGroups::exact_count(std::span<const std::uint32_t> keys) const {
  KeySet k(keys.begin(), keys.end());
  auto it = groups_.find(k);
  return it == groups_.end() ? 0 : it->second.size();
}

Complex subcomplex_from(const Complex& c, std::vector<std::pair<int, std::size_t>> simplices) {
  std::sort(simplices.begin(), simplices.end());
  std::vector<std::vector<VertexId>> cells;
  for (auto [d, i] : simplices) {
    if (cells.size() <= static_cast<std::size_t>(d)) cells.resize(d + 1);
    auto s = c.simplex(d, i);
    cells[d].insert(cells[d].end(), s.begin(), s.end());
  }
  std::vector<VertexId> used;
  if (!cells.empty()) used = cells[0];
  std::vector<VertexId> remap(c.num_vertices(), 0);
  std::vector<CoordVertex> vertices;
  vertices.reserve(used.size());
  for (VertexId v : used) {
    remap[v] = static_cast<VertexId>(vertices.size());
    vertices.push_back(c.vertex(v));
  }
  for (auto& flat : cells)
    for (auto& id : flat) id = remap[id];
  while (!cells.empty() && cells.back().empty()) cells.pop_back();
  return Complex::from_canonical(c.universe(), c.level(), c.staged(), std::move(vertices), std::move(cells));
}

}  // namespace lfc::detail
