#include "lfc/collapse.hpp"

#include <numeric>

#include "lfc/detail/lattice.hpp"
#include "lfc/errors.hpp"

namespace lfc {

namespace {

std::vector<std::uint32_t> all_ids(std::size_t n) {
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  return ids;
}

}  // namespace

CollapseResult collapse_to_point(const Complex& c, const CollapseOptions& options) {
  if (c.empty()) throw PreconditionError("collapse_to_point: the empty complex");
  const detail::FaceLattice lat(c);
  return detail::collapse_members(lat, all_ids(lat.size()), {}, 1, options);
}

CollapseResult collapse_onto(const Complex& c, const Complex& sub, const CollapseOptions& options) {
  if (!is_subcomplex(sub, c)) throw PreconditionError("collapse_onto: not a subcomplex");
  if (sub.empty()) throw PreconditionError("collapse_onto: the target subcomplex is empty");
  const detail::FaceLattice lat(c);
  std::vector<char> protect(lat.size(), 0);
  std::vector<VertexId> ids;
  for (int d = 0; d <= sub.dim(); ++d)
    for (std::size_t i = 0; i < sub.count(d); ++i) {
      ids.clear();
      for (VertexId v : sub.simplex(d, i)) ids.push_back(*c.find_vertex(sub.vertex(v)));
      protect[lat.id(d, *c.index_of(ids))] = 1;
    }
  return detail::collapse_members(lat, all_ids(lat.size()), protect, sub.size(), options);
}

}  // namespace lfc
