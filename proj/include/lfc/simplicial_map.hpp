#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lfc/complex.hpp"

namespace lfc {

/// A vertex map between complexes that sends every source simplex onto a
/// target simplex. Validated on construction; the complexes are shared, not
/// copied.
class SimplicialMap {
 public:
  /// Throws PreconditionError if some image is not a target simplex or the
  /// vertex map has the wrong size.
  SimplicialMap(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target,
                std::vector<VertexId> vertex_map);

  const Complex& source() const { return *source_; }
  const Complex& target() const { return *target_; }
  const std::shared_ptr<const Complex>& source_ptr() const { return source_; }
  const std::shared_ptr<const Complex>& target_ptr() const { return target_; }

  VertexId operator()(VertexId v) const { return map_[v]; }
  const std::vector<VertexId>& vertex_map() const { return map_; }

  /// Sorted, duplicate-free target ids of the image of a source simplex.
  std::vector<VertexId> image(std::span<const VertexId> simplex) const;

  static SimplicialMap identity(std::shared_ptr<const Complex> c);

 private:
  std::shared_ptr<const Complex> source_;
  std::shared_ptr<const Complex> target_;
  std::vector<VertexId> map_;
};

/// The projection dropping trailing coordinates (and the stage when the
/// target is unstaged) from `source` onto `target`. Throws
/// PreconditionError when an image simplex is missing from the target.
SimplicialMap projection_map(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target);

}  // namespace lfc
