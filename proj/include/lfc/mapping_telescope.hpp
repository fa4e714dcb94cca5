#pragma once

#include <memory>
#include <vector>

#include "lfc/complex.hpp"
#include "lfc/simplicial_map.hpp"
#include "lfc/tower.hpp"

namespace lfc {

struct MappingTelescope {
  std::shared_ptr<const Complex> complex;
  /// Drops coordinates and stage, landing in the base complex S.
  SimplicialMap projection;
};

/// Mapping telescope of a finite tower T_0 -> T_1 -> ... -> T_n:
///   U_{k<n} i^k(T_k) x N|{k, k+1}  u  i^n(T_n) x {n},
/// with coordinates zero-padded to length n and the cylinder position kept
/// as the vertex stage. `levels[k]` must have level k and T_k x {0} must lie
/// in T_{k+1}. Throws PreconditionError on an empty tower or a broken
/// inclusion.
MappingTelescope mapping_telescope(const std::vector<std::shared_ptr<const Complex>>& levels,
                                   std::shared_ptr<const Complex> base);

MappingTelescope mapping_telescope(const Tower& tower);

}  // namespace lfc
