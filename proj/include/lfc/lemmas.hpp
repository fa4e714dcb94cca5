#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lfc/complex.hpp"

namespace lfc {

struct TelescopeLemmaReport {
  bool contains = true;      // (a) T is a subcomplex of tel_n(T)
  bool restriction = true;   // (c) restriction to Z x N^n commutes with tel_n
  bool dimension = true;     // (d) dim tel_n(T) <= dim T + 1
  std::size_t samples = 0;   // Z subsets tried for (c)
  std::uint64_t seed = 0;
  std::vector<std::string> failures;

  bool passed() const { return contains && restriction && dimension; }
};

/// Checks three properties of the telescope on one complex. Each sampled Z
/// keeps every base of T independently with probability 1/2.
/// Throws PreconditionError (via check_telescope_input) when T is not a
/// valid telescope input.
TelescopeLemmaReport check_telescope_lemmas(const Complex& t, std::span<const Coord> ray_bounds, std::size_t samples,
                                            std::uint64_t seed);

}  // namespace lfc
