#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lfc/vertex.hpp"

namespace lfc {

using VertexId = std::uint32_t;

/// The vertex labels of X in their linear order. Cheap to copy.
class Universe {
 public:
  Universe() : labels_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Universe(std::vector<std::string> labels);

  /// Universe {"0", ..., "n-1"}; used for rays and generated complexes.
  static Universe numbered(std::size_t n, std::string_view prefix = "");

  std::size_t size() const { return labels_->size(); }
  const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::optional<std::uint32_t> index_of(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::unordered_map<std::string, std::uint32_t>> index_;
};

/// A finite simplicial complex whose vertices are CoordVertex values of a
/// common shape (same number of coordinates, stage present or not).
///
/// Simplices are stored per dimension as flat, lexicographically sorted
/// records of vertex ids; vertex ids follow the linear vertex order, so a
/// record lists its vertices in increasing order. Instances are immutable.
///
/// A Complex is normally downward closed. The raw constructor path
/// (`ComplexBuilder` without faces) can produce non-closed sets so that
/// `validate()` has something to report on.
class Complex {
 public:
  Complex() = default;
  Complex(Universe universe, std::size_t level, bool staged = false)
      : universe_(std::move(universe)), level_(level), staged_(staged) {}

  const Universe& universe() const { return universe_; }
  std::size_t level() const { return level_; }
  bool staged() const { return staged_; }

  /// -1 for the empty complex.
  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  bool empty() const { return cells_.empty(); }

  std::size_t num_vertices() const { return vertices_.size(); }
  const CoordVertex& vertex(VertexId id) const { return vertices_[id]; }
  const std::vector<CoordVertex>& vertices() const { return vertices_; }
  std::optional<VertexId> find_vertex(const CoordVertex& v) const;

  std::size_t count(int d) const {
    return d < 0 || d > dim() ? 0 : cells_[d].size() / (d + 1);
  }
  std::size_t size() const;

  std::span<const VertexId> simplex(int d, std::size_t i) const {
    return {cells_[d].data() + i * (d + 1), static_cast<std::size_t>(d + 1)};
  }
  /// Flat storage of all d-simplices (stride d + 1).
  std::span<const VertexId> cells(int d) const {
    return d < 0 || d > dim() ? std::span<const VertexId>{} : std::span<const VertexId>(cells_[d]);
  }

  /// Index of a sorted id record among the simplices of its dimension.
  std::optional<std::size_t> index_of(std::span<const VertexId> sorted_ids) const;
  bool contains(std::span<const VertexId> sorted_ids) const { return index_of(sorted_ids).has_value(); }
  /// Membership by vertex values; the vertices may come in any order.
  bool contains_vertices(std::span<const CoordVertex> vs) const;

  std::vector<CoordVertex> simplex_vertices(int d, std::size_t i) const;

  /// Maximal simplices (no proper coface), as (dimension, index) pairs.
  std::vector<std::pair<int, std::size_t>> maximal_simplices() const;

  friend bool operator==(const Complex& a, const Complex& b);

  /// Wraps already canonical storage: `vertices` sorted and unique, each
  /// cells[d] a sorted, duplicate-free flat record list over those ids, no
  /// trailing empty dimensions. No checks are made.
  static Complex from_canonical(Universe universe, std::size_t level, bool staged,
                                std::vector<CoordVertex> vertices,
                                std::vector<std::vector<VertexId>> cells);

 private:
  friend class ComplexBuilder;

  Universe universe_;
  std::size_t level_ = 0;
  bool staged_ = false;
  std::vector<CoordVertex> vertices_;
  std::vector<std::vector<VertexId>> cells_;
};

/// Collects vertices and simplices, then produces a canonical Complex.
class ComplexBuilder {
 public:
  ComplexBuilder(Universe universe, std::size_t level, bool staged = false);

  /// Interns a vertex and returns its builder-local id.
  VertexId vertex(const CoordVertex& v);
  /// Adds exactly this simplex (no faces). Throws InputError on repeated ids.
  void add_simplex(std::span<const VertexId> ids);
  /// Adds the simplex together with all of its nonempty faces.
  void add_with_faces(std::span<const VertexId> ids);
  /// Adds every simplex of `c`, which must have the builder's shape.
  void add_complex(const Complex& c);

  std::size_t pending_vertices() const { return vertices_.size(); }

  Complex build() &&;

 private:
  void check_shape(const CoordVertex& v) const;

  Universe universe_;
  std::size_t level_;
  bool staged_;
  std::vector<CoordVertex> vertices_;
  std::unordered_map<CoordVertex, VertexId, CoordVertexHash> ids_;
  std::vector<std::vector<VertexId>> cells_;
  std::vector<VertexId> scratch_;
};

// ---------------------------------------------------------------------------
// Structural operations

/// Smallest complex containing the given simplices, each a list of labels.
Complex closure(const std::vector<std::vector<std::string>>& maximal, const Universe& universe);
/// Same with vertex indices into the universe.
Complex closure(const std::vector<std::vector<std::uint32_t>>& maximal, const Universe& universe);

struct ValidationReport {
  bool closed = true;
  bool singletons = true;
  bool chains = true;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // first few, human readable

  bool valid() const { return closed && singletons && chains; }
};

/// Checks the closure, singleton and (if `ordered`) chain invariants.
ValidationReport validate(const Complex& c, bool ordered = true);

/// Simplices of dimension <= n.
Complex skeleton(const Complex& c, int n);

/// c|Y for an explicit vertex set.
Complex induced_subcomplex(const Complex& c, std::span<const CoordVertex> vertices);
/// c|(Z x N^n): simplices all of whose vertices have base in `bases`.
Complex induced_on_bases(const Complex& c, std::span<const std::uint32_t> bases);
/// Simplices whose vertices all satisfy `keep`.
Complex induced_by(const Complex& c, const std::function<bool(const CoordVertex&)>& keep);

/// f(C) = { f(s) : s in C }. The result has the given shape.
Complex image_complex(const Complex& c, const std::function<CoordVertex(const CoordVertex&)>& f,
                      std::size_t level, bool staged = false);
/// p_i: drops the last `i` coordinates.
Complex drop_last(const Complex& c, std::size_t i = 1);

/// Product of ordered complexes. A vertex (v, w) is flattened to
/// (v.base; v.coords, w.base, w.coords), so the result lives over C's
/// universe with level C.level + 1 + D.level. Throws PreconditionError if
/// either factor is not ordered or is staged.
Complex product(const Complex& c, const Complex& d);

/// C x N|{lo..hi}, the ray segment appended as a new last coordinate.
Complex product_with_segment(const Complex& c, Coord lo, Coord hi);
/// C x {value}: appends a constant coordinate.
Complex append_coordinate(const Complex& c, Coord value);
/// Pads coordinates with zeros up to `level` (the embeddings i_n).
Complex pad_coordinates(const Complex& c, std::size_t level);

/// N|{a..b} over the universe {"0", ..., "b"}.
Complex ray_segment(Coord a, Coord b);

Complex unite(const Complex& c, const Complex& d);
Complex intersect(const Complex& c, const Complex& d);
/// Every simplex of `sub` is a simplex of `c`.
bool is_subcomplex(const Complex& sub, const Complex& c);

/// Number of 1-simplices containing `v`. Throws PreconditionError if `v` is not a vertex.
std::size_t edge_degree(const Complex& c, const CoordVertex& v);
/// Edge degree of every vertex, indexed by vertex id.
std::vector<std::size_t> edge_degrees(const Complex& c);

/// Euler characteristic from simplex counts.
long long euler_characteristic(const Complex& c);

/// Human-readable simplex, labels resolved through the universe.
std::string describe_simplex(const Complex& c, int d, std::size_t i);

}  // namespace lfc
