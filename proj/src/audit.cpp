#include "lfc/audit.hpp"

#include <algorithm>

namespace lfc {

DegreeAudit degree_audit(const Complex& c, std::size_t bound, std::optional<std::size_t> one_sided_bound,
                         Execution execution) {
  const std::size_t n = c.num_vertices();
  std::vector<std::size_t> up(n, 0), down(n, 0);
  const auto edges = c.cells(1);
  const std::size_t m = edges.size() / 2;
  if (execution == Execution::serial) {
    for (std::size_t e = 0; e < m; ++e) {
      ++up[edges[2 * e]];
      ++down[edges[2 * e + 1]];
    }
  } else {
    // Edges are sorted, so the edges leaving a vertex upwards are contiguous.
    std::vector<std::size_t> first(n + 1, m);
    for (std::size_t e = m; e-- > 0;) first[edges[2 * e]] = e;
    for (std::size_t v = n; v-- > 0;) first[v] = std::min(first[v], first[v + 1]);
#pragma omp parallel for schedule(static)
    for (std::size_t v = 0; v < n; ++v) up[v] = first[v + 1] - first[v];
    std::size_t* counts = down.data();
#pragma omp parallel for schedule(static) reduction(+ : counts[:n])
    for (std::size_t e = 0; e < m; ++e) ++counts[edges[2 * e + 1]];
  }

  DegreeAudit a;
  a.bound = bound;
  a.one_sided_bound = one_sided_bound;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t deg = up[v] + down[v];
    ++a.histogram[deg];
    a.max_degree = std::max(a.max_degree, deg);
    a.max_up = std::max(a.max_up, up[v]);
    a.max_down = std::max(a.max_down, down[v]);
    if (deg > bound) a.violators.push_back(v);
    if (one_sided_bound && (up[v] > *one_sided_bound || down[v] > *one_sided_bound)) a.one_sided_violators.push_back(v);
  }
  return a;
}

}  // namespace lfc
