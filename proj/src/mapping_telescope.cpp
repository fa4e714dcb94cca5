#include "lfc/mapping_telescope.hpp"

#include "lfc/errors.hpp"

namespace lfc {

namespace {

// Turns the last coordinate into the stage. Lexicographic order is unchanged,
// so the simplex records carry over as they are.
Complex last_coordinate_as_stage(const Complex& c) {
  std::vector<CoordVertex> vertices = c.vertices();
  for (auto& v : vertices) {
    v.stage = v.coords.back();
    v.coords.pop_back();
  }
  std::vector<std::vector<VertexId>> cells;
  for (int d = 0; d <= c.dim(); ++d) cells.emplace_back(c.cells(d).begin(), c.cells(d).end());
  return Complex::from_canonical(c.universe(), c.level() - 1, true, std::move(vertices), std::move(cells));
}

}  // namespace

MappingTelescope mapping_telescope(const std::vector<std::shared_ptr<const Complex>>& levels,
                                   std::shared_ptr<const Complex> base) {
  if (levels.empty()) throw PreconditionError("mapping_telescope: empty tower");
  const std::size_t top = levels.size() - 1;
  for (std::size_t k = 0; k <= top; ++k) {
    if (levels[k]->level() != k || levels[k]->staged())
      throw PreconditionError("mapping_telescope: tower entry " + std::to_string(k) + " must have level " +
                              std::to_string(k));
    if (k < top && !is_subcomplex(append_coordinate(*levels[k], 0), *levels[k + 1]))
      throw PreconditionError("mapping_telescope: T_" + std::to_string(k) + " x {0} is not contained in T_" +
                              std::to_string(k + 1));
  }

  ComplexBuilder builder(base->universe(), top, true);
  for (std::size_t k = 0; k < top; ++k) {
    Complex padded = pad_coordinates(*levels[k], top);
    builder.add_complex(last_coordinate_as_stage(product_with_segment(padded, k, k + 1)));
  }
  builder.add_complex(last_coordinate_as_stage(append_coordinate(*levels[top], top)));
  auto complex = std::make_shared<const Complex>(std::move(builder).build());

  std::vector<VertexId> map(complex->num_vertices());
  for (VertexId v = 0; v < complex->num_vertices(); ++v) {
    auto id = base->find_vertex(CoordVertex(complex->vertex(v).base));
    if (!id) throw PreconditionError("mapping_telescope: base complex lacks a projected vertex");
    map[v] = *id;
  }
  SimplicialMap projection(complex, std::move(base), std::move(map));
  return MappingTelescope{std::move(complex), std::move(projection)};
}

MappingTelescope mapping_telescope(const Tower& tower) {
  std::vector<std::shared_ptr<const Complex>> levels;
  for (const auto& level : tower.levels) levels.push_back(level.complex);
  return mapping_telescope(levels, tower.input);
}

}  // namespace lfc
