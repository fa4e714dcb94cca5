#pragma once

#include <cstdint>

namespace lfc {

/// Edge bounds for the level-n localization: at most K one-sided neighbours
/// per vertex and at most M = 2(K - 1) edges per vertex.
struct BoundsTable {
  unsigned n = 0;
  std::uint64_t K = 0;
  std::uint64_t M = 0;
};

/// K_1 = 3, K_{n+1} = 2 K_n + (n + 2) 2^n, M_n = 2 (K_n - 1). Also checks the
/// closed form 2 K_n = 2^{n-1} (n^2 + 3n + 2). Throws PreconditionError for
/// n = 0 and std::overflow_error if the values leave 64 bits.
BoundsTable bounds(unsigned n);

/// 2^{n-1} (n^2 + 3n + 2), evaluated directly.
std::uint64_t closed_form_twice_k(unsigned n);

}  // namespace lfc
