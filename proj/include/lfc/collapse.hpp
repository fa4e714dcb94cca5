#pragma once

#include <cstddef>
#include <cstdint>

#include "lfc/complex.hpp"

namespace lfc {

struct CollapseOptions {
  std::size_t restarts = 32;  // attempts in total; the first one is deterministic
  std::uint64_t seed = 0;
};

struct CollapseResult {
  bool collapsed = false;
  std::size_t attempts = 0;
  std::size_t remaining = 0;  // simplices left by the best attempt
  std::uint64_t seed = 0;
};

/// Elementary collapses: remove a face together with its only proper coface
/// while possible. Succeeds when one vertex is left; failure is
/// inconclusive. Throws PreconditionError on the empty complex.
CollapseResult collapse_to_point(const Complex& c, const CollapseOptions& options = {});

/// Collapses `c` onto the subcomplex `sub`, never removing a simplex of
/// `sub`. Succeeds when exactly `sub` is left. Throws PreconditionError if
/// `sub` is not a subcomplex of `c`.
CollapseResult collapse_onto(const Complex& c, const Complex& sub, const CollapseOptions& options = {});

}  // namespace lfc
