#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lfc/complex.hpp"
#include "lfc/execution.hpp"

namespace lfc {

struct DegreeAudit {
  std::size_t bound = 0;
  std::size_t max_degree = 0;
  std::map<std::size_t, std::size_t> histogram;  // degree -> number of vertices
  std::vector<VertexId> violators;               // degree > bound
  /// Largest number of edges from a vertex to later (earlier) vertices in
  /// the vertex order.
  std::size_t max_up = 0;
  std::size_t max_down = 0;
  std::optional<std::size_t> one_sided_bound;
  std::vector<VertexId> one_sided_violators;

  bool passed() const { return violators.empty() && one_sided_violators.empty(); }
};

/// Exact per-vertex edge counts against `bound`; with `one_sided_bound`, the
/// counts towards larger and towards smaller neighbours are checked as well.
DegreeAudit degree_audit(const Complex& c, std::size_t bound, std::optional<std::size_t> one_sided_bound = std::nullopt,
                         Execution execution = Execution::parallel);

}  // namespace lfc
