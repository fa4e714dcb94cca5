#include <doctest.h>

#include <algorithm>
#include <set>

#include "lfc/complex.hpp"
#include "lfc/errors.hpp"
#include "lfc/generate.hpp"
#include "lfc/homology.hpp"
#include "support.hpp"

using namespace lfc;
using namespace lfc::test;

TEST_CASE("vertex order is lexicographic, the partial order is the product order") {
  const CoordVertex a0 = at(0, {0}), a1 = at(0, {1}), b0 = at(1, {0});
  CHECK(a0 < a1);
  CHECK(a1 < b0);
  CHECK(precedes(a0, a1));
  CHECK(precedes(a0, b0));
  CHECK_FALSE(precedes(a1, b0));
  CHECK_FALSE(precedes(b0, a1));
  CHECK(to_string(a1) == "(0;1)");
}

TEST_CASE("closure") {
  const Complex tri = make({{"a", "b", "c"}});
  CHECK(tri.size() == 7);
  CHECK(tri.count(0) == 3);
  CHECK(tri.count(1) == 3);
  CHECK(tri.count(2) == 1);
  CHECK(make({{"a"}}).size() == 1);
  const Complex path = make({{"a", "b"}, {"b", "c"}});
  CHECK(path.count(0) == 3);
  CHECK(path.count(1) == 2);
  CHECK_THROWS_AS(make({{"a", "z"}}), InputError);
  CHECK_THROWS_AS(make({{"a", "a"}}), InputError);
}

TEST_CASE("validate") {
  CHECK(validate(make({{"a", "b", "c"}})).valid());

  ComplexBuilder open(abc(), 0);
  const VertexId a = open.vertex(CoordVertex(0)), b = open.vertex(CoordVertex(1)), c = open.vertex(CoordVertex(2));
  const std::vector<VertexId> triangle = {a, b, c};
  open.add_simplex(triangle);
  const auto r = validate(std::move(open).build());
  CHECK_FALSE(r.closed);
  CHECK_FALSE(r.singletons);

  // (a;1) and (b;0) are incomparable in the product order.
  ComplexBuilder crossed(abc(), 1);
  const VertexId x = crossed.vertex(at(0, {1})), y = crossed.vertex(at(1, {0}));
  crossed.add_with_faces(std::vector<VertexId>{x, y});
  const auto chains = validate(std::move(crossed).build());
  CHECK(chains.closed);
  CHECK_FALSE(chains.chains);
  CHECK_FALSE(chains.valid());
}

TEST_CASE("skeleton and induced subcomplexes") {
  const Complex tri = make({{"a", "b", "c"}});
  const Complex boundary = skeleton(tri, 1);
  CHECK(boundary.dim() == 1);
  CHECK(boundary.size() == 6);
  CHECK(skeleton(fixture("torus7"), 0).size() == 7);

  const std::vector<CoordVertex> ab = {CoordVertex(0), CoordVertex(1)};
  CHECK(induced_subcomplex(tri, ab) == make({{"a", "b"}}));
  CHECK(induced_subcomplex(tri, {}).empty());
  const std::vector<std::uint32_t> bases = {0, 2};
  CHECK(induced_on_bases(tri, bases) == make({{"a", "c"}}));
}

TEST_CASE("image and projection") {
  const Complex tri = make({{"a", "b", "c"}});
  const Complex point = image_complex(tri, [](const CoordVertex&) { return CoordVertex(0); }, 0);
  CHECK(point.size() == 1);
  const Complex cyl = product_with_segment(tri, 0, 3);
  CHECK(drop_last(cyl) == tri);
  const Complex e = make({{"a", "b"}});
  CHECK(drop_last(product(e, make({{"a", "b"}}))) == e);
}

namespace {

// Brute force: every set of vertex pairs that is a chain in the product
// order and projects to simplices of both factors.
std::size_t brute_force_product_count(const Complex& c, const Complex& d, std::vector<std::size_t>& by_dim) {
  std::vector<std::pair<CoordVertex, CoordVertex>> grid;
  for (const auto& v : c.vertices())
    for (const auto& w : d.vertices()) grid.emplace_back(v, w);
  std::size_t total = 0;
  by_dim.assign(c.dim() + d.dim() + 2, 0);
  for (std::uint32_t mask = 1; mask < (1u << grid.size()); ++mask) {
    std::vector<std::pair<CoordVertex, CoordVertex>> s;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mask & (1u << i)) s.push_back(grid[i]);
    bool chain = true;
    for (std::size_t i = 0; i < s.size() && chain; ++i)
      for (std::size_t j = i + 1; j < s.size() && chain; ++j) {
        const bool le = precedes(s[i].first, s[j].first) && precedes(s[i].second, s[j].second);
        const bool ge = precedes(s[j].first, s[i].first) && precedes(s[j].second, s[i].second);
        chain = le || ge;
      }
    if (!chain) continue;
    std::set<CoordVertex> left, right;
    for (const auto& [v, w] : s) {
      left.insert(v);
      right.insert(w);
    }
    const std::vector<CoordVertex> l(left.begin(), left.end()), r(right.begin(), right.end());
    if (!c.contains_vertices(l) || !d.contains_vertices(r)) continue;
    ++total;
    ++by_dim[s.size() - 1];
  }
  return total;
}

}  // namespace

TEST_CASE("product matches brute-force chain enumeration") {
  const Complex e = make({{"a", "b"}});
  const Complex p = make({{"a"}});
  const Complex tri = make({{"a", "b", "c"}});
  CHECK(product(e, p).size() == 3);

  const Complex square = product(e, e);
  CHECK(square.count(2) == 2);
  CHECK(square.count(1) == 5);
  // Staircases (00)(10)(11) and (00)(01)(11).
  CHECK(square.contains_vertices(std::vector<CoordVertex>{at(0, {0}), at(1, {0}), at(1, {1})}));
  CHECK(square.contains_vertices(std::vector<CoordVertex>{at(0, {0}), at(0, {1}), at(1, {1})}));
  CHECK_FALSE(square.contains_vertices(std::vector<CoordVertex>{at(0, {1}), at(1, {0})}));

  for (const auto& [c, d] : {std::pair{e, e}, std::pair{tri, e}, std::pair{e, tri}, std::pair{tri, p}}) {
    std::vector<std::size_t> by_dim;
    const std::size_t expected = brute_force_product_count(c, d, by_dim);
    const Complex prod = product(c, d);
    CHECK(prod.size() == expected);
    for (int k = 0; k <= prod.dim(); ++k) CHECK(prod.count(k) == by_dim[k]);
    CHECK(validate(prod).valid());
  }

  // 6 vertices; 12 comparable pairs; 10 three-chains; 3 four-chains.
  const Complex prism = product(tri, e);
  CHECK(prism.count(1) == 12);
  CHECK(prism.count(2) == 10);
  CHECK(prism.count(3) == 3);
  CHECK(is_acyclic(prism));
}

TEST_CASE("ray segments") {
  CHECK(ray_segment(0, 0).size() == 1);
  const Complex r = ray_segment(0, 2);
  CHECK(r.count(0) == 3);
  CHECK(r.count(1) == 2);
  const Complex step = ray_segment(1, 2);
  CHECK(step.count(0) == 2);
  CHECK(step.count(1) == 1);
}

TEST_CASE("edge degrees") {
  const Complex path = make({{"a", "b"}, {"b", "c"}});
  CHECK(edge_degree(path, CoordVertex(1)) == 2);
  CHECK(edge_degree(path, CoordVertex(0)) == 1);
  const Complex circle = skeleton(make({{"a", "b", "c"}}), 1);
  for (const auto& v : circle.vertices()) CHECK(edge_degree(circle, v) == 2);
  CHECK_THROWS_AS(edge_degree(path, CoordVertex(7)), PreconditionError);
}

TEST_CASE("union, intersection, subcomplex") {
  const Complex ab = make({{"a", "b"}}), bc = make({{"b", "c"}});
  const Complex u = unite(ab, bc);
  CHECK(u == make({{"a", "b"}, {"b", "c"}}));
  CHECK(intersect(ab, bc) == make({{"b"}}));
  CHECK(is_subcomplex(ab, u));
  CHECK_FALSE(is_subcomplex(u, ab));
  CHECK(euler_characteristic(fixture("torus7")) == 0);
  CHECK(euler_characteristic(fixture("sphere2_4")) == 2);
}
