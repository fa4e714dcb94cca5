#include "lfc/telescope.hpp"

#include <algorithm>

#include "lfc/errors.hpp"

namespace lfc {

void check_telescope_input(const Complex& t, std::span<const Coord> ray_bounds) {
  if (ray_bounds.size() != t.level())
    throw PreconditionError("telescope: need one ray bound per coordinate");
  if (t.staged()) throw PreconditionError("telescope: staged complexes are not supported");
  for (VertexId v = 0; v < t.num_vertices(); ++v)
    for (std::size_t j = 0; j < t.level(); ++j)
      if (t.vertex(v).coords[j] > ray_bounds[j])
        throw PreconditionError("telescope: vertex " + to_string(t.vertex(v)) + " lies beyond the ray bound");
  for (int d = 1; d <= t.dim(); ++d)
    for (std::size_t i = 0; i < t.count(d); ++i) {
      auto s = t.simplex(d, i);
      for (std::size_t j = 0; j < t.level(); ++j) {
        Coord lo = t.vertex(s[0]).coords[j], hi = lo;
        for (VertexId v : s) {
          lo = std::min(lo, t.vertex(v).coords[j]);
          hi = std::max(hi, t.vertex(v).coords[j]);
        }
        if (hi - lo > 1)
          throw PreconditionError("telescope: coordinate " + std::to_string(j + 1) + " of " +
                                  describe_simplex(t, d, i) + " is not a simplex of the ray");
      }
    }
}

namespace {

Complex telescope_unchecked(const Complex& t, std::span<const Coord> ray_bounds) {
  const std::size_t n = t.level();
  if (n == 0 || t.empty()) return t;
  Complex projected = drop_last(t, 1);
  Complex cylinder = product_with_segment(projected, 0, ray_bounds[n - 1]);
  Complex lower = append_coordinate(telescope_unchecked(projected, ray_bounds.first(n - 1)), 0);
  return unite(cylinder, lower);
}

}  // namespace

Complex telescope(const Complex& t, std::span<const Coord> ray_bounds) {
  check_telescope_input(t, ray_bounds);
  return telescope_unchecked(t, ray_bounds);
}

}  // namespace lfc
