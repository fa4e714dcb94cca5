#pragma once

#include <span>

#include "lfc/complex.hpp"

namespace lfc {

/// Throws PreconditionError unless, for every simplex and every coordinate
/// position j, the set of j-th coordinates is {i} or {i, i+1} with all values
/// at most `ray_bounds[j]`, i.e. T sits inside p_1(T) x N at every depth.
void check_telescope_input(const Complex& t, std::span<const Coord> ray_bounds);

/// The telescope of a level-n ordered complex:
///   tel_0(T) = T,
///   tel_n(T) = (p_1(T) x N) u (tel_{n-1}(p_1(T)) x {0}),
/// with the ray in coordinate j truncated to {0..ray_bounds[j]}.
/// `ray_bounds.size()` must equal `t.level()`.
Complex telescope(const Complex& t, std::span<const Coord> ray_bounds);

}  // namespace lfc
