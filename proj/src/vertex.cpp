#include "lfc/vertex.hpp"

#include <algorithm>

namespace lfc {

std::strong_ordering operator<=>(const CoordVertex& a, const CoordVertex& b) {
  if (auto c = a.base <=> b.base; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.coords.begin(), a.coords.end(),
                                                      b.coords.begin(), b.coords.end());
      c != 0)
    return c;
  return a.stage <=> b.stage;
}

bool precedes(const CoordVertex& v, const CoordVertex& w) {
  if (v.coords.size() != w.coords.size() || v.stage.has_value() != w.stage.has_value()) return false;
  if (v.base > w.base) return false;
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    if (v.coords[i] > w.coords[i]) return false;
  return !v.stage || *v.stage <= *w.stage;
}

std::string to_string(const CoordVertex& v) {
  std::string out = "(" + std::to_string(v.base);
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    out += i == 0 ? ";" : ",";
    out += std::to_string(v.coords[i]);
  }
  if (v.stage) out += "|" + std::to_string(*v.stage);
  out += ")";
  return out;
}

std::size_t CoordVertexHash::operator()(const CoordVertex& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.base;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (Coord c : v.coords) mix(c);
  mix(v.stage ? *v.stage + 1ULL : 0ULL);
  return static_cast<std::size_t>(h);
}

}  // namespace lfc
