#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lfc/complex.hpp"

namespace lfc {

struct GeneratorSpec {
  enum class Kind { shelled_tree, cone, fixture };
  Kind kind = Kind::shelled_tree;
  int dim = 1;
  std::size_t size = 1;  // number of top simplices for shelled trees
  std::uint64_t seed = 0;
  std::string fixture;   // fixture name; for cones, the complex to cone over
};

/// Starts from one n-simplex and glues `size - 1` further n-simplices, each
/// along one (n-1)-face chosen uniformly at random with a fresh apex vertex.
/// Vertices are labelled v0, v1, ... in creation order. Throws
/// PreconditionError for size 0 or n < 1.
Complex shelled_tree(int n, std::size_t size, std::uint64_t seed);

/// Cone with a new apex placed after every vertex of `c` in the order.
/// `c` must be a level-0 complex.
Complex cone(const Complex& c, const std::string& apex_label = "apex");

/// Named fixtures: circle_3, sphere2_4, torus7, rp2_6, klein8, simplex_<n>,
/// path_<k> (k vertices), star_<k> (k leaves). Throws InputError for an
/// unknown name.
Complex fixture(const std::string& name);
std::vector<std::string> fixture_names();

Complex generate(const GeneratorSpec& spec);

/// Maximal simplices of a fixture as vertex-index lists, before closure.
std::vector<std::vector<std::uint32_t>> fixture_facets(const std::string& name);

}  // namespace lfc
