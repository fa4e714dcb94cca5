#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "lfc/complex.hpp"

namespace lfc::detail {

using KeySet = boost::container::small_vector<std::uint32_t, 6>;

struct KeySetHash {
  std::size_t operator()(const KeySet& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : k) h = (h ^ x) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

/// Groups the simplices of a complex by the set of keys of their vertices
/// (for example the set of bases, or the image under a vertex map), so that
/// the induced subcomplex on "all vertices whose key lies in K" can be
/// gathered by enumerating the subsets of K.
class SimplexGroups {
 public:
  SimplexGroups(const Complex& c, std::vector<std::uint32_t> vertex_key);

  /// Simplices whose key set is contained in `keys` (sorted, unique).
  Complex gather(std::span<const std::uint32_t> keys) const;
  /// The same simplices as sorted (dimension, index) pairs.
  std::vector<std::pair<int, std::size_t>> members(std::span<const std::uint32_t> keys) const;
  /// Number of simplices whose key set equals `keys` exactly.
  std::size_t exact_count(std::span<const std::uint32_t> keys) const;

 private:
  const Complex* complex_;
  std::vector<std::uint32_t> key_;
  std::unordered_map<KeySet, std::vector<std::pair<int, std::size_t>>, KeySetHash> groups_;
};

/// Subcomplex made of the listed simplices (dimension, index); the list must
/// be downward closed.
Complex subcomplex_from(const Complex& c, std::vector<std::pair<int, std::size_t>> simplices);

}  // namespace lfc::detail
