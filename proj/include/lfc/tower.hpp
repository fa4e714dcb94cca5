#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lfc/coloring.hpp"
#include "lfc/complex.hpp"
#include "lfc/execution.hpp"
#include "lfc/simplicial_map.hpp"

namespace lfc {

/// How the ray N is truncated at each level. By default level k uses
/// N|{0..R_k} with R_k = (largest color of c_k) + 2, where an empty coloring
/// counts as color 0. `scale` multiplies the default; `fixed` overrides it.
struct RayPolicy {
  std::map<std::size_t, Coord> fixed;
  Coord scale = 1;

  Coord bound_for(std::size_t level, long long max_color) const;
};

struct LevelStats {
  std::vector<std::size_t> counts;  // simplices per dimension
  std::size_t max_degree = 0;
};

/// One stage of the tower: T_k over S_k, plus T_k' for k >= 1.
struct TowerLevel {
  std::size_t k = 0;
  std::shared_ptr<const Complex> skeleton;  // S_k
  std::shared_ptr<const Complex> complex;   // T_k
  std::shared_ptr<const Complex> prime;     // T_k', null for k = 0
  Coloring coloring;                        // c_k on the k-simplices of S
  Coord ray_bound = 0;                      // R_k, unused for k = 0
  LevelStats stats;
};

/// The sequence T_0, ..., T_n with everything needed to audit it.
struct Tower {
  std::shared_ptr<const Complex> input;  // S
  std::vector<TowerLevel> levels;

  std::size_t top_level() const { return levels.size() - 1; }
  const Complex& top() const { return *levels.back().complex; }
  /// R_1, ..., R_k.
  std::vector<Coord> ray_bounds(std::size_t k) const;
  ColoringTable colorings() const;
};

struct LocalizeOptions {
  RayPolicy rays;
  /// Number of tower levels; defaults to dim(S). Must be >= dim(S).
  std::optional<std::size_t> levels;
  Execution execution = Execution::parallel;
};

struct Localization {
  std::shared_ptr<const Complex> complex;  // T = T_n
  SimplicialMap projection;                // p_n : T -> S
  Tower tower;
};

/// T_{n+1}' = (T_n x N) u U_s (tel_n(T_n|(s x N^n)) x {c(s)}) over the
/// (n+1)-simplices s of `s_complex`. `ray_bounds` holds R_1..R_{n+1}.
/// The serial path restricts T_n to each s by a full scan and is kept as the
/// reference for the indexed, OpenMP-parallel path.
/// Throws PreconditionError if R_{n+1} does not exceed every color.
Complex build_prime(const Complex& t_n, const Complex& s_complex, std::size_t n, const Coloring& coloring,
                    std::span<const Coord> ray_bounds, Execution execution = Execution::parallel);

/// T_{n+1} = T_{n+1}' u { s x {0}^n x {c(s)} }. The faces of each attached
/// simplex must already be present; a missing face raises std::logic_error.
Complex build_next(const Complex& t_prime, const Complex& s_complex, std::size_t n, const Coloring& coloring);

/// Runs the whole tower T_0 = S_0, ..., T_n for n = dim(S) (or the requested
/// number of levels). `s` must be a level-0, closed complex.
Localization localize(std::shared_ptr<const Complex> s, const LocalizeOptions& options = {});

LevelStats level_stats(const Complex& c);

}  // namespace lfc
