#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lfc/complex.hpp"

namespace lfc::test {

inline Universe abc(std::size_t n = 3) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Universe(labels);
}

inline Complex make(const std::vector<std::vector<std::string>>& facets, std::size_t n = 3) {
  return closure(facets, abc(n));
}

inline std::shared_ptr<const Complex> share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

inline CoordVertex at(std::uint32_t base, std::initializer_list<Coord> coords) { return {base, Coords(coords)}; }

// All simplices as sorted vertex-value lists, for comparisons that do not trust ids.
inline std::vector<std::vector<CoordVertex>> all_simplices(const Complex& c) {
  std::vector<std::vector<CoordVertex>> out;
  for (int d = 0; d <= c.dim(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) out.push_back(c.simplex_vertices(d, i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lfc::test
