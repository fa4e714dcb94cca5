#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lfc/complex.hpp"
#include "lfc/execution.hpp"
#include "lfc/simplicial_map.hpp"
#include "lfc/smith.hpp"

namespace lfc {

/// One column of a sparse boundary matrix: (row, coefficient), rows increasing.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// A bounded chain complex of free abelian groups with chosen bases.
/// Degrees run from `bottom` to `bottom + sizes.size() - 1`.
struct ChainComplex {
  int bottom = 0;
  std::vector<std::size_t> sizes;
  /// boundary[g] holds the columns of the map out of degree bottom + g;
  /// boundary[0] is always empty.
  std::vector<std::vector<SparseColumn>> boundary;

  int top() const { return bottom + static_cast<int>(sizes.size()) - 1; }
  std::size_t size(int degree) const;
  /// Columns of the differential out of `degree` (empty outside the range).
  const std::vector<SparseColumn>& columns(int degree) const;
  IntMatrix dense(int degree) const;
  /// Checks that every composite of two differentials vanishes.
  bool squares_to_zero() const;
};

/// Simplicial chains with the alternating-face boundary. With `reduced`,
/// the augmentation to a copy of Z in degree -1 is included.
ChainComplex chain_complex(const Complex& c, bool reduced = false, Execution execution = Execution::parallel);

/// The chain map f_# in degree d as sparse columns over the d-simplices of
/// the source; degenerate images map to zero.
std::vector<SparseColumn> chain_map(const SimplicialMap& f, int d);

/// Cone of f_#: Cone_d = T_{d-1} (+) S_d with d(a, b) = (-da, f(a) + db).
ChainComplex mapping_cone(const SimplicialMap& f, Execution execution = Execution::parallel);

}  // namespace lfc
