#include "lfc/bounds.hpp"

#include <stdexcept>
#include <string>

#include "lfc/errors.hpp"

namespace lfc {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("edge bound exceeds 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("edge bound exceeds 64 bits");
  return r;
}

std::uint64_t pow2(unsigned e) {
  if (e >= 64) throw std::overflow_error("edge bound exceeds 64 bits");
  return std::uint64_t{1} << e;
}

}  // namespace

std::uint64_t closed_form_twice_k(unsigned n) {
  if (n == 0) throw PreconditionError("bounds: n must be at least 1");
  const std::uint64_t nn = n;
  return checked_mul(pow2(n - 1), checked_add(checked_mul(nn, nn), 3 * nn + 2));
}

BoundsTable bounds(unsigned n) {
  if (n == 0) throw PreconditionError("bounds: n must be at least 1");
  std::uint64_t k = 3;
  for (unsigned level = 1; level < n; ++level)
    k = checked_add(checked_mul(2, k), checked_mul(level + 2, pow2(level)));
  if (checked_mul(2, k) != closed_form_twice_k(n))
    throw std::logic_error("bounds: recurrence disagrees with the closed form at n = " + std::to_string(n));
  return {n, k, 2 * (k - 1)};
}

}  // namespace lfc
