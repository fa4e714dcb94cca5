#include "lfc/simplicial_map.hpp"

#include <algorithm>

#include "lfc/errors.hpp"

namespace lfc {

SimplicialMap::SimplicialMap(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target,
                             std::vector<VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  if (map_.size() != source_->num_vertices())
    throw PreconditionError("simplicial map: vertex map does not cover the source vertices");
  for (VertexId w : map_)
    if (w >= target_->num_vertices()) throw PreconditionError("simplicial map: vertex image out of range");
  for (int d = 0; d <= source_->dim(); ++d)
    for (std::size_t i = 0; i < source_->count(d); ++i)
      if (!target_->contains(image(source_->simplex(d, i))))
        throw PreconditionError("simplicial map: image of " + describe_simplex(*source_, d, i) +
                                " is not a target simplex");
}

std::vector<VertexId> SimplicialMap::image(std::span<const VertexId> simplex) const {
  std::vector<VertexId> out;
  out.reserve(simplex.size());
  for (VertexId v : simplex) out.push_back(map_[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap SimplicialMap::identity(std::shared_ptr<const Complex> c) {
  std::vector<VertexId> map(c->num_vertices());
  for (VertexId v = 0; v < map.size(); ++v) map[v] = v;
  return SimplicialMap(c, c, std::move(map));
}

SimplicialMap projection_map(std::shared_ptr<const Complex> source, std::shared_ptr<const Complex> target) {
  if (target->level() > source->level() || (target->staged() && !source->staged()))
    throw PreconditionError("projection_map: target has more coordinates than the source");
  const std::size_t keep = target->level();
  const bool keep_stage = target->staged();
  std::vector<VertexId> map(source->num_vertices());
  for (VertexId v = 0; v < source->num_vertices(); ++v) {
    const auto& x = source->vertex(v);
    CoordVertex y(x.base, Coords(x.coords.begin(), x.coords.begin() + keep),
                  keep_stage ? x.stage : std::nullopt);
    auto id = target->find_vertex(y);
    if (!id) throw PreconditionError("projection_map: " + to_string(y) + " is not a target vertex");
    map[v] = *id;
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(map));
}

}  // namespace lfc
