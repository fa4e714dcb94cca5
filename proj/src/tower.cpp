#include "lfc/tower.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "lfc/detail/groups.hpp"
#include "lfc/errors.hpp"
#include "lfc/telescope.hpp"

namespace lfc {

Coord RayPolicy::bound_for(std::size_t level, long long max_color) const {
  if (auto it = fixed.find(level); it != fixed.end()) return it->second;
  const long long top = std::max<long long>(max_color, 0);
  return static_cast<Coord>(scale * (top + 2));
}

std::vector<Coord> Tower::ray_bounds(std::size_t k) const {
  std::vector<Coord> out;
  for (std::size_t j = 1; j <= k && j < levels.size(); ++j) out.push_back(levels[j].ray_bound);
  return out;
}

ColoringTable Tower::colorings() const {
  ColoringTable table;
  for (std::size_t k = 1; k < levels.size(); ++k) table[static_cast<int>(k)] = levels[k].coloring;
  return table;
}

LevelStats level_stats(const Complex& c) {
  LevelStats st;
  for (int d = 0; d <= c.dim(); ++d) st.counts.push_back(c.count(d));
  auto deg = edge_degrees(c);
  st.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  return st;
}

namespace {

std::vector<std::uint32_t> bases_of(const Complex& s_complex, int d, std::size_t i) {
  std::vector<std::uint32_t> bases;
  for (VertexId v : s_complex.simplex(d, i)) bases.push_back(s_complex.vertex(v).base);
  return bases;
}

}  // namespace

Complex build_prime(const Complex& t_n, const Complex& s_complex, std::size_t n, const Coloring& coloring,
                    std::span<const Coord> ray_bounds, Execution execution) {
  if (t_n.level() != n) throw PreconditionError("build_prime: T_n has the wrong level");
  if (ray_bounds.size() != n + 1) throw PreconditionError("build_prime: need ray bounds R_1..R_{n+1}");
  const int m = static_cast<int>(n) + 1;
  const std::size_t count = s_complex.count(m);
  if (coloring.dim != m || coloring.colors.size() != count)
    throw PreconditionError("build_prime: coloring does not match the (n+1)-simplices");
  const Coord r_next = ray_bounds[n];
  if (static_cast<long long>(r_next) <= coloring.max_color())
    throw PreconditionError("build_prime: ray bound " + std::to_string(r_next) +
                            " does not exceed the largest color " + std::to_string(coloring.max_color()));

  const auto lower_bounds = ray_bounds.first(n);
  std::vector<Complex> attachments(count);

  if (execution == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      auto bases = bases_of(s_complex, m, i);
      Complex fiber = induced_on_bases(t_n, bases);
      attachments[i] = append_coordinate(telescope(fiber, lower_bounds), coloring.colors[i]);
    }
  } else {
    std::vector<std::uint32_t> key(t_n.num_vertices());
    for (VertexId v = 0; v < t_n.num_vertices(); ++v) key[v] = t_n.vertex(v).base;
    const detail::SimplexGroups groups(t_n, std::move(key));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i) {
      try {
        auto bases = bases_of(s_complex, m, i);
        Complex fiber = groups.gather(bases);
        attachments[i] = append_coordinate(telescope(fiber, lower_bounds), coloring.colors[i]);
      } catch (...) {
#pragma omp critical(lfc_build_prime)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  ComplexBuilder builder(t_n.universe(), n + 1);
  builder.add_complex(product_with_segment(t_n, 0, r_next));
  for (const auto& a : attachments) builder.add_complex(a);
  return std::move(builder).build();
}

Complex build_next(const Complex& t_prime, const Complex& s_complex, std::size_t n, const Coloring& coloring) {
  const int m = static_cast<int>(n) + 1;
  if (t_prime.level() != n + 1) throw PreconditionError("build_next: T' has the wrong level");
  if (coloring.dim != m || coloring.colors.size() != s_complex.count(m))
    throw PreconditionError("build_next: coloring does not match the (n+1)-simplices");
  if (s_complex.count(m) == 0) return t_prime;

  ComplexBuilder builder(t_prime.universe(), n + 1);
  builder.add_complex(t_prime);
  std::vector<CoordVertex> attached;
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < s_complex.count(m); ++i) {
    attached.clear();
    for (VertexId v : s_complex.simplex(m, i)) {
      Coords coords(n, 0);
      coords.push_back(coloring.colors[i]);
      attached.emplace_back(s_complex.vertex(v).base, std::move(coords));
    }
    // Every facet must already be in T'; the new simplex then closes up.
    std::vector<CoordVertex> facet;
    for (std::size_t skip = 0; skip < attached.size(); ++skip) {
      facet.clear();
      for (std::size_t k = 0; k < attached.size(); ++k)
        if (k != skip) facet.push_back(attached[k]);
      if (!t_prime.contains_vertices(facet))
        throw std::logic_error("build_next: a face of the attached copy of " + describe_simplex(s_complex, m, i) +
                               " is missing from T'");
    }
    ids.clear();
    for (const auto& v : attached) ids.push_back(builder.vertex(v));
    builder.add_simplex(ids);
  }
  return std::move(builder).build();
}

Localization localize(std::shared_ptr<const Complex> s, const LocalizeOptions& options) {
  if (s->level() != 0 || s->staged()) throw PreconditionError("localize: input must be a plain complex on X");
  if (!validate(*s, false).valid()) throw PreconditionError("localize: input is not a closed simplicial complex");
  const std::size_t dim = s->dim() < 0 ? 0 : static_cast<std::size_t>(s->dim());
  const std::size_t n = options.levels.value_or(dim);
  if (n < dim) throw PreconditionError("localize: fewer levels than the dimension of the input");

  Tower tower;
  tower.input = s;
  {
    TowerLevel base;
    base.k = 0;
    base.skeleton = std::make_shared<const Complex>(skeleton(*s, 0));
    base.complex = base.skeleton;
    base.stats = level_stats(*base.complex);
    tower.levels.push_back(std::move(base));
  }
  std::vector<Coord> rays;
  for (std::size_t k = 1; k <= n; ++k) {
    TowerLevel level;
    level.k = k;
    level.skeleton = std::make_shared<const Complex>(skeleton(*s, static_cast<int>(k)));
    level.coloring = first_fit_coloring(*s, static_cast<int>(k));
    level.ray_bound = options.rays.bound_for(k, level.coloring.max_color());
    rays.push_back(level.ray_bound);
    const Complex& previous = *tower.levels.back().complex;
    auto prime = std::make_shared<const Complex>(
        build_prime(previous, *s, k - 1, level.coloring, rays, options.execution));
    level.prime = prime;
    level.complex = std::make_shared<const Complex>(build_next(*prime, *s, k - 1, level.coloring));
    level.stats = level_stats(*level.complex);
    tower.levels.push_back(std::move(level));
  }
  auto top = tower.levels.back().complex;
  auto projection = projection_map(top, s);
  return Localization{top, std::move(projection), std::move(tower)};
}

}  // namespace lfc
