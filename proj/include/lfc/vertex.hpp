#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <boost/container/small_vector.hpp>

namespace lfc {

using Coord = std::uint32_t;
using Coords = boost::container::small_vector<Coord, 4>;

/// A vertex of X x N^n (optionally x N for a trailing stage coordinate).
///
/// `base` indexes the universe X in its linear order. The linear order on
/// vertices is lexicographic on (base, coords, stage); the partial order is
/// the product order, see `precedes()`.
struct CoordVertex {
  std::uint32_t base = 0;
  Coords coords;
  std::optional<Coord> stage;

  CoordVertex() = default;
  explicit CoordVertex(std::uint32_t b) : base(b) {}
  CoordVertex(std::uint32_t b, Coords c, std::optional<Coord> s = std::nullopt)
      : base(b), coords(std::move(c)), stage(s) {}

  friend bool operator==(const CoordVertex&, const CoordVertex&) = default;
  friend std::strong_ordering operator<=>(const CoordVertex& a, const CoordVertex& b);
};

/// Product-poset order: v <= w iff base, every coordinate and the stage are <=.
/// Vertices of different shape are incomparable.
bool precedes(const CoordVertex& v, const CoordVertex& w);

/// "(base;c1,c2|stage)" with labels resolved by the caller if wanted.
std::string to_string(const CoordVertex& v);

struct CoordVertexHash {
  std::size_t operator()(const CoordVertex& v) const noexcept;
};

}  // namespace lfc
