#include "lfc/lemmas.hpp"

#include <algorithm>
#include <random>

#include "lfc/telescope.hpp"

namespace lfc {

TelescopeLemmaReport check_telescope_lemmas(const Complex& t, std::span<const Coord> ray_bounds, std::size_t samples,
                                            std::uint64_t seed) {
  check_telescope_input(t, ray_bounds);
  TelescopeLemmaReport r;
  r.seed = seed;
  const Complex tel = telescope(t, ray_bounds);

  if (!is_subcomplex(t, tel)) {
    r.contains = false;
    r.failures.push_back("(a) T is not contained in its telescope");
  }
  if (tel.dim() > t.dim() + 1) {
    r.dimension = false;
    r.failures.push_back("(d) telescope has dimension " + std::to_string(tel.dim()) + " over a complex of dimension " +
                         std::to_string(t.dim()));
  }

  std::vector<std::uint32_t> bases;
  for (const auto& v : t.vertices()) bases.push_back(v.base);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(0.5);
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<std::uint32_t> z;
    for (auto b : bases)
      if (keep(rng)) z.push_back(b);
    ++r.samples;
    const Complex lhs = induced_on_bases(tel, z);
    const Complex rhs = telescope(induced_on_bases(t, z), ray_bounds);
    if (!(lhs == rhs)) {
      r.restriction = false;
      if (r.failures.size() < 8) r.failures.push_back("(c) fails for Z of size " + std::to_string(z.size()));
    }
  }
  return r;
}

}  // namespace lfc
