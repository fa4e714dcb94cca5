#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lfc/chain_complex.hpp"
#include "lfc/collapse.hpp"
#include "lfc/complex.hpp"

namespace lfc::detail {

/// All simplices of a complex under one numbering (dimension-major, then
/// the complex's own order) with facet and coface lists in CSR form.
/// Facet k of a simplex omits its k-th vertex.
class FaceLattice {
 public:
  explicit FaceLattice(const Complex& c);

  std::size_t size() const { return dim_of_.size(); }
  std::uint32_t id(int d, std::size_t i) const { return static_cast<std::uint32_t>(offset_[d] + i); }
  int dim(std::uint32_t id) const { return dim_of_[id]; }
  std::span<const std::uint32_t> facets(std::uint32_t id) const {
    return {facets_.data() + facet_start_[id], facet_start_[id + 1] - facet_start_[id]};
  }
  std::span<const std::uint32_t> cofaces(std::uint32_t id) const {
    return {cofaces_.data() + coface_start_[id], coface_start_[id + 1] - coface_start_[id]};
  }

 private:
  std::vector<std::size_t> offset_;
  std::vector<std::int8_t> dim_of_;
  std::vector<std::size_t> facet_start_, coface_start_;
  std::vector<std::uint32_t> facets_, cofaces_;
};

/// Greedy collapse restricted to `members` (sorted ids forming a
/// subcomplex), never touching ids flagged in `protect` (indexed like
/// members; may be empty). Succeeds when `keep` simplices remain.
CollapseResult collapse_members(const FaceLattice& lat, std::span<const std::uint32_t> members,
                                const std::vector<char>& protect, std::size_t keep, const CollapseOptions& options);

/// Simplicial chain complex of the subcomplex `members` (sorted ids).
ChainComplex member_chain_complex(const FaceLattice& lat, std::span<const std::uint32_t> members, bool reduced);

}  // namespace lfc::detail
