#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lfc/complex.hpp"

namespace lfc {

using Color = std::uint32_t;

/// Colors of the m-simplices of a complex, indexed like `Complex::simplex(m, i)`.
struct Coloring {
  int dim = 0;
  std::vector<Color> colors;

  /// -1 when there are no m-simplices.
  long long max_color() const;
};

/// Per-dimension colorings c_m, m >= 1.
using ColoringTable = std::map<int, Coloring>;

/// First-fit coloring of the intersection graph on the m-simplices: in
/// canonical order, each simplex takes the least color not used by an
/// earlier simplex it meets. Throws PreconditionError for m < 1.
Coloring first_fit_coloring(const Complex& c, int m);

/// True iff intersecting distinct m-simplices always carry distinct colors.
bool is_proper_coloring(const Complex& c, const Coloring& coloring);

}  // namespace lfc
