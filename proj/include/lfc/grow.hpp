#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lfc/complex.hpp"

namespace lfc {

/// Which vertices receive pendant edges in a growing round.
///  - stage: every vertex of the current stage T_{n,k}, pendants included,
///    so that in the limit every vertex has exactly M edges.
///  - original: only the vertices of the input T_n; pendants stay leaves.
enum class GrowScope { stage, original };

struct GrowOptions {
  GrowScope scope = GrowScope::stage;
  /// Refuse (ResourceLimitError) when the output would have more vertices.
  std::uint64_t max_vertices = 4'000'000;
};

/// Provenance of a vertex of the grown complex.
struct GrownVertex {
  std::optional<VertexId> parent;  // vertex id in the grown complex; none for input vertices
  std::uint32_t born = 0;          // growing round that created it; 0 for input vertices
  std::size_t initial_degree = 0;  // edge degree right after creation
};

/// Result of `grow_edges`. Vertices are staged: input vertices carry stage 0,
/// pendants carry a fresh serial stage >= 1 and copy their parent's base and
/// coordinates, so every new edge is a chain.
struct GrowResult {
  Complex complex;
  std::vector<GrownVertex> provenance;  // indexed by vertex id of `complex`
  std::size_t bound = 0;
  std::size_t rounds = 0;
  GrowScope scope = GrowScope::stage;

  /// Round after which the vertex has exactly `bound` edges, if it ever does.
  std::optional<std::uint64_t> completion_round(VertexId v) const;
  /// Stage-0 copy of the input complex inside `complex`.
  Complex original_part() const;
};

/// Adds, in each of `rounds` rounds, one new pendant vertex and edge at every
/// vertex in scope that has fewer than `bound` edges. Throws
/// PreconditionError if some input vertex already has more than `bound`
/// edges or the input is staged.
GrowResult grow_edges(const Complex& t, std::size_t bound, std::size_t rounds, const GrowOptions& options = {});

/// Number of vertices `grow_edges` would produce, saturating at UINT64_MAX.
std::uint64_t forecast_grown_vertices(const Complex& t, std::size_t bound, std::size_t rounds, GrowScope scope);

}  // namespace lfc
