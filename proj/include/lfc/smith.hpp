#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lfc {

using BigInt = boost::multiprecision::cpp_int;
/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
  IntMatrix diagonal;                    // D, same shape as the input
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ... , all positive
  std::optional<IntMatrix> left;          // U, unimodular, with U A V = D
  std::optional<IntMatrix> right;         // V, unimodular
};

/// Smith normal form over the integers with exact arithmetic. Unimodular
/// transforms are produced when `track_transforms` is set.
SmithResult smith_normal_form(const IntMatrix& a, bool track_transforms = false);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace lfc
