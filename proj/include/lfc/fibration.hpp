#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lfc/collapse.hpp"
#include "lfc/execution.hpp"
#include "lfc/simplicial_map.hpp"

namespace lfc {

enum class FiberStatus { collapsed, acyclic_only, failed };
std::string to_string(FiberStatus s);

struct FiberEntry {
  int dim = 0;             // target simplex (dimension, index)
  std::size_t index = 0;
  std::size_t vertices = 0;   // size of the fiber
  std::size_t simplices = 0;
  bool acyclic = false;       // reduced integral homology vanishes
  FiberStatus status = FiberStatus::failed;
  std::size_t attempts = 0;   // collapse attempts used
};

struct FiberReport {
  std::vector<FiberEntry> fibers;  // one per target simplex, in target order
  std::vector<std::pair<int, std::size_t>> unhit;  // target simplices not in the image
  std::uint64_t seed = 0;

  std::size_t count(FiberStatus s) const;
  bool all_collapsed() const { return count(FiberStatus::collapsed) == fibers.size(); }
  bool surjective() const { return unhit.empty(); }
};

struct FiberOptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  Execution execution = Execution::parallel;
};

/// For every target simplex t, examines f^-1(t), the simplices whose image
/// lies in t. Homology is always computed: collapsed if it is acyclic and
/// collapses to a point, acyclic_only if only the homology vanishes, failed
/// otherwise (including empty fibers).
/// The collapse seed for fiber i is options.seed + i.
FiberReport check_pseudofibration(const SimplicialMap& f, const FiberOptions& options = {});

bool surjective_on_simplices(const SimplicialMap& f);
/// Target simplices that are not the image of any source simplex.
std::vector<std::pair<int, std::size_t>> unhit_simplices(const SimplicialMap& f);

}  // namespace lfc
