#include "lfc/grow.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "lfc/errors.hpp"

namespace lfc {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

void check_input(const Complex& t, std::size_t bound) {
  if (t.staged()) throw PreconditionError("grow_edges: input must not be staged");
  auto deg = edge_degrees(t);
  for (VertexId v = 0; v < t.num_vertices(); ++v)
    if (deg[v] > bound)
      throw PreconditionError("grow_edges: vertex " + to_string(t.vertex(v)) + " already has " +
                              std::to_string(deg[v]) + " > " + std::to_string(bound) + " edges");
}

}  // namespace

std::uint64_t forecast_grown_vertices(const Complex& t, std::size_t bound, std::size_t rounds, GrowScope scope) {
  check_input(t, bound);
  auto deg = edge_degrees(t);
  // Population by current degree; pendants are tracked separately when they
  // do not grow themselves.
  std::vector<std::uint64_t> growing(bound + 1, 0);
  for (auto d : deg) ++growing[d];
  std::uint64_t leaves = 0;
  for (std::size_t r = 0; r < rounds; ++r) {
    std::uint64_t births = 0;
    for (std::size_t d = bound; d-- > 0;) {
      births = sat_add(births, growing[d]);
      growing[d + 1] = sat_add(growing[d + 1], growing[d]);
      growing[d] = 0;
    }
    if (births == 0) break;
    if (scope == GrowScope::stage)
      growing[std::min<std::size_t>(1, bound)] = sat_add(growing[std::min<std::size_t>(1, bound)], births);
    else
      leaves = sat_add(leaves, births);
  }
  std::uint64_t total = leaves;
  for (auto x : growing) total = sat_add(total, x);
  return total;
}

GrowResult grow_edges(const Complex& t, std::size_t bound, std::size_t rounds, const GrowOptions& options) {
  check_input(t, bound);
  const std::uint64_t forecast = forecast_grown_vertices(t, bound, rounds, options.scope);
  if (forecast > options.max_vertices)
    throw ResourceLimitError("grow_edges: " + std::to_string(forecast) + " vertices exceed the budget of " +
                             std::to_string(options.max_vertices));

  // Working graph: vertex k < t.num_vertices() is input vertex k; pendants
  // follow in creation order.
  struct Node {
    CoordVertex vertex;
    std::optional<std::size_t> parent;
    std::uint32_t born;
    std::size_t initial_degree;
    std::size_t degree;
  };
  std::vector<Node> nodes;
  nodes.reserve(forecast);
  auto deg = edge_degrees(t);
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    CoordVertex x = t.vertex(v);
    x.stage = 0;
    nodes.push_back({std::move(x), std::nullopt, 0, deg[v], deg[v]});
  }
  const std::size_t input_count = nodes.size();
  std::vector<std::pair<std::size_t, std::size_t>> new_edges;
  Coord serial = 0;
  for (std::size_t r = 1; r <= rounds; ++r) {
    const std::size_t scope_end = options.scope == GrowScope::stage ? nodes.size() : input_count;
    bool grew = false;
    for (std::size_t k = 0; k < scope_end; ++k) {
      if (nodes[k].degree >= bound) continue;
      CoordVertex child = nodes[k].vertex;
      child.stage = ++serial;
      ++nodes[k].degree;
      nodes.push_back({std::move(child), k, static_cast<std::uint32_t>(r), 1, 1});
      new_edges.emplace_back(k, nodes.size() - 1);
      grew = true;
    }
    if (!grew) break;
  }

  ComplexBuilder builder(t.universe(), t.level(), true);
  std::vector<VertexId> local(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) local[k] = builder.vertex(nodes[k].vertex);
  for (int d = 0; d <= t.dim(); ++d)
    for (std::size_t i = 0; i < t.count(d); ++i) {
      std::vector<VertexId> ids;
      for (VertexId v : t.simplex(d, i)) ids.push_back(local[v]);
      builder.add_simplex(ids);
    }
  for (std::size_t k = input_count; k < nodes.size(); ++k) {
    VertexId single = local[k];
    builder.add_simplex(std::span(&single, 1));
  }
  for (auto [a, b] : new_edges) {
    std::array<VertexId, 2> e{local[a], local[b]};
    builder.add_simplex(e);
  }

  GrowResult result;
  result.complex = std::move(builder).build();
  result.bound = bound;
  result.rounds = rounds;
  result.scope = options.scope;
  result.provenance.resize(result.complex.num_vertices());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    auto id = *result.complex.find_vertex(nodes[k].vertex);
    auto& p = result.provenance[id];
    p.born = nodes[k].born;
    p.initial_degree = nodes[k].initial_degree;
    if (nodes[k].parent) p.parent = *result.complex.find_vertex(nodes[*nodes[k].parent].vertex);
  }
  return result;
}

std::optional<std::uint64_t> GrowResult::completion_round(VertexId v) const {
  const auto& p = provenance[v];
  if (p.initial_degree >= bound) return p.born;
  const bool grows = scope == GrowScope::stage || !p.parent;
  if (!grows) return std::nullopt;
  return p.born + (bound - p.initial_degree);
}

Complex GrowResult::original_part() const {
  return induced_by(complex, [](const CoordVertex& v) { return *v.stage == 0; });
}

}  // namespace lfc
