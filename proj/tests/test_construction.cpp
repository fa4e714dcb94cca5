#include <doctest.h>

#include <random>

#include "lfc/audit.hpp"
#include "lfc/bounds.hpp"
#include "lfc/coloring.hpp"
#include "lfc/errors.hpp"
#include "lfc/generate.hpp"
#include "lfc/grow.hpp"
#include "lfc/homology.hpp"
#include "lfc/lemmas.hpp"
#include "lfc/mapping_telescope.hpp"
#include "lfc/telescope.hpp"
#include "lfc/tower.hpp"
#include "support.hpp"

using namespace lfc;
using namespace lfc::test;

TEST_CASE("degree bounds") {
  CHECK(bounds(1).K == 3);
  CHECK(bounds(1).M == 4);
  CHECK(bounds(2).K == 12);
  CHECK(bounds(2).M == 22);
  CHECK(bounds(3).K == 40);
  CHECK(bounds(3).M == 78);
  for (unsigned n = 1; n < 30; ++n) CHECK(2 * bounds(n).K == closed_form_twice_k(n));
  CHECK_THROWS_AS(bounds(0), PreconditionError);
}

TEST_CASE("first-fit coloring") {
  const Complex circle = fixture("circle_3");
  CHECK(first_fit_coloring(circle, 1).colors == std::vector<Color>{0, 1, 2});
  Complex two = make({{"a", "b"}, {"c", "d"}}, 4);
  CHECK(first_fit_coloring(two, 1).colors == std::vector<Color>{0, 0});
  CHECK(first_fit_coloring(make({{"a", "b"}, {"b", "c"}}), 1).colors == std::vector<Color>{0, 1});
  CHECK(first_fit_coloring(circle, 2).max_color() == -1);
  CHECK_THROWS_AS(first_fit_coloring(circle, 0), PreconditionError);

  // Independent greedy over the same order.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Complex t = shelled_tree(2, 12, seed);
    for (int m : {1, 2}) {
      const auto c = first_fit_coloring(t, m);
      CHECK(is_proper_coloring(t, c));
      std::vector<Color> expected;
      for (std::size_t i = 0; i < t.count(m); ++i) {
        std::vector<bool> used(t.count(m) + 1, false);
        auto si = t.simplex(m, i);
        for (std::size_t j = 0; j < i; ++j) {
          auto sj = t.simplex(m, j);
          bool meet = false;
          for (VertexId v : si) meet = meet || std::find(sj.begin(), sj.end(), v) != sj.end();
          if (meet) used[expected[j]] = true;
        }
        Color k = 0;
        while (used[k]) ++k;
        expected.push_back(k);
      }
      CHECK(c.colors == expected);
    }
  }
}

TEST_CASE("telescope unfolds by hand") {
  // A single vertex at level 1 gives the truncated ray.
  ComplexBuilder b(abc(1), 1);
  const std::vector<VertexId> only = {b.vertex(at(0, {0}))};
  b.add_simplex(only);
  const Complex v = std::move(b).build();
  const std::vector<Coord> r = {3};
  const Complex ray = telescope(v, r);
  CHECK(ray.count(0) == 4);
  CHECK(ray.count(1) == 3);
  CHECK(ray.contains_vertices(std::vector<CoordVertex>{at(0, {2}), at(0, {3})}));

  const Complex level0 = make({{"a", "b"}});
  CHECK(telescope(level0, {}) == level0);

  // An edge (a;0)-(b;0) at level 1: p_1(T) x N is the ladder, so a square strip.
  const Complex e1 = append_coordinate(level0, 0);
  const std::vector<Coord> r2 = {2};
  const Complex strip = telescope(e1, r2);
  CHECK(strip == product(level0, ray_segment(0, 2)));
  CHECK(strip.dim() == 2);
}

TEST_CASE("telescope rejects bad inputs") {
  ComplexBuilder b(abc(1), 1);
  const VertexId x = b.vertex(at(0, {0})), y = b.vertex(at(0, {2}));
  b.add_with_faces(std::vector<VertexId>{x, y});
  const Complex jump = std::move(b).build();
  const std::vector<Coord> r = {4};
  CHECK_THROWS_AS(telescope(jump, r), PreconditionError);
  CHECK_THROWS_AS(check_telescope_lemmas(jump, r, 4, 0), PreconditionError);
  const std::vector<Coord> low = {1};
  CHECK_THROWS_AS(check_telescope_input(jump, low), PreconditionError);
}

TEST_CASE("single edge tower, unfolded by hand") {
  // c({a,b}) = 0, so R_1 = 2. T_1 = {a,b} x {0..2} rays plus the edge (a;0)(b;0).
  auto s = share(make({{"a", "b"}}));
  const auto loc = localize(s);
  const Complex& t = *loc.complex;
  CHECK(loc.tower.levels[1].ray_bound == 2);
  CHECK(t.count(0) == 6);
  CHECK(t.count(1) == 5);
  CHECK(t.contains_vertices(std::vector<CoordVertex>{at(0, {0}), at(1, {0})}));
  CHECK(t.contains_vertices(std::vector<CoordVertex>{at(0, {1}), at(0, {2})}));
  CHECK(edge_degree(t, at(0, {0})) == 2);
  CHECK(degree_audit(t, bounds(1).M).max_degree == 2);
  const std::vector<std::uint32_t> a = {0};
  const Complex fiber = induced_on_bases(t, a);
  CHECK(fiber == product(make({{"a"}}), ray_segment(0, 2)));
}

TEST_CASE("circle tower, unfolded by hand") {
  // Colors 0, 1, 2 so R_1 = 4: three rays of 5 vertices and one edge per color level.
  const auto loc = localize(share(fixture("circle_3")));
  const Complex& t = *loc.complex;
  CHECK(t.count(0) == 15);
  CHECK(t.count(1) == 15);
  CHECK(homology(t).betti == std::vector<std::size_t>{1, 1});
}

TEST_CASE("tower basics") {
  const auto point = localize(share(make({{"a"}})));
  CHECK(point.tower.top_level() == 0);
  CHECK(*point.complex == make({{"a"}}));

  // With no (n+1)-simplices, T_{n+1} = T_{n+1}' = T_n x N.
  const Complex s = fixture("circle_3");
  LocalizeOptions two;
  two.levels = 2;
  const auto loc = localize(share(s), two);
  CHECK(*loc.tower.levels[2].complex == *loc.tower.levels[2].prime);
  CHECK(*loc.complex == product_with_segment(*loc.tower.levels[1].complex, 0, loc.tower.levels[2].ray_bound));

  LocalizeOptions fewer;
  fewer.levels = 1;
  CHECK_THROWS_AS(localize(share(fixture("sphere2_4")), fewer), PreconditionError);
  LocalizeOptions low;
  low.rays.fixed[1] = 1;
  CHECK_THROWS_AS(localize(share(s), low), PreconditionError);
}

TEST_CASE("serial and parallel tower construction agree") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto s = share(shelled_tree(2, 10, seed));
    LocalizeOptions serial;
    serial.execution = Execution::serial;
    const auto a = localize(s, serial);
    const auto b = localize(s);
    for (std::size_t k = 0; k < a.tower.levels.size(); ++k) CHECK(*a.tower.levels[k].complex == *b.tower.levels[k].complex);
  }
}

TEST_CASE("tower invariants on random trees") {
  for (int n = 1; n <= 2; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto s = share(shelled_tree(n, 3 + seed, seed));
      const auto loc = localize(s);
      const auto b = bounds(static_cast<unsigned>(n));
      const auto audit = degree_audit(*loc.complex, b.M, b.K - 1);
      CHECK(audit.passed());
      CHECK(loc.complex->dim() == n);
      CHECK(homology(*loc.complex) == homology(*s));
      CHECK(validate(*loc.complex).valid());
      for (std::size_t k = 1; k < loc.tower.levels.size(); ++k) {
        const auto& level = loc.tower.levels[k];
        CHECK(is_subcomplex(append_coordinate(*loc.tower.levels[k - 1].complex, 0), *level.complex));
        CHECK(is_subcomplex(*level.prime, *level.complex));
      }
    }
}

TEST_CASE("telescope lemmas") {
  const auto loc = localize(share(make({{"a", "b", "c"}})));
  const Complex& t1 = *loc.tower.levels[1].complex;
  const auto rays = loc.tower.ray_bounds(1);
  const auto rep = check_telescope_lemmas(t1, rays, 16, 3);
  CHECK(rep.passed());
  CHECK(rep.samples == 16);
  const auto trivial = check_telescope_lemmas(make({{"a", "b"}}), {}, 4, 0);
  CHECK(trivial.passed());
}

TEST_CASE("degree audit") {
  const Complex path = make({{"a", "b"}, {"b", "c"}});
  const auto p = degree_audit(path, 2);
  CHECK(p.passed());
  CHECK(p.max_degree == 2);
  const auto star = degree_audit(fixture("star_5"), 4);
  CHECK_FALSE(star.passed());
  REQUIRE(star.violators.size() == 1);
  CHECK(edge_degree(fixture("star_5"), fixture("star_5").vertex(star.violators[0])) == 5);

  // Against a direct count over the edge list.
  const Complex t = *localize(share(fixture("torus7"))).complex;
  const auto a = degree_audit(t, 22, 11, Execution::parallel);
  const auto s = degree_audit(t, 22, 11, Execution::serial);
  CHECK(a.passed());
  std::vector<std::size_t> up(t.num_vertices()), down(t.num_vertices());
  for (std::size_t i = 0; i < t.count(1); ++i) {
    auto e = t.simplex(1, i);
    ++up[e[0]];
    ++down[e[1]];
  }
  std::size_t max_deg = 0, max_up = 0, max_down = 0;
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    max_deg = std::max(max_deg, up[v] + down[v]);
    max_up = std::max(max_up, up[v]);
    max_down = std::max(max_down, down[v]);
  }
  CHECK(a.max_degree == max_deg);
  CHECK(a.max_up == max_up);
  CHECK(a.max_down == max_down);
  CHECK(s.histogram == a.histogram);
  CHECK(s.max_up == a.max_up);
}

TEST_CASE("growing edges") {
  const Complex path = make({{"a", "b"}, {"b", "c"}});
  const auto g = grow_edges(path, 4, 3);
  const auto deg = edge_degrees(g.complex);
  for (VertexId v = 0; v < g.complex.num_vertices(); ++v) {
    CHECK(deg[v] <= 4);
    if (auto done = g.completion_round(v); done && *done <= 3) CHECK(deg[v] == 4);
  }
  CHECK(g.original_part().num_vertices() == 3);

  // Already regular: nothing changes.
  const Complex circle = fixture("circle_3");
  const auto same = grow_edges(circle, 2, 5);
  CHECK(same.complex.num_vertices() == 3);
  CHECK(same.complex.count(1) == 3);
  CHECK_THROWS_AS(grow_edges(fixture("star_5"), 4, 1), PreconditionError);
  CHECK(forecast_grown_vertices(path, 4, 3, GrowScope::stage) == g.complex.num_vertices());
  CHECK(forecast_grown_vertices(path, 4, 3, GrowScope::original) ==
        grow_edges(path, 4, 3, {GrowScope::original}).complex.num_vertices());
}

TEST_CASE("mapping telescope") {
  // A tower of single points is a path.
  auto p0 = share(make({{"a"}}, 1));
  auto p1 = share(pad_coordinates(*p0, 1));
  auto p2 = share(pad_coordinates(*p0, 2));
  const auto path = mapping_telescope({p0, p1, p2}, p0);
  CHECK(path.complex->count(0) == 3);
  CHECK(path.complex->count(1) == 2);

  // A constant two-term tower has the homology of C.
  auto c = share(fixture("circle_3"));
  const auto mt = mapping_telescope({c, share(pad_coordinates(*c, 1))}, c);
  CHECK(isomorphic(homology(*mt.complex), homology(*c)));

  // dim 0: just T_0 x {0}.
  const auto pts = mapping_telescope({p0}, p0);
  CHECK(pts.complex->size() == 1);

  const auto loc = localize(share(fixture("torus7")));
  const auto full = mapping_telescope(loc.tower);
  CHECK(isomorphic(homology(*full.complex), homology(fixture("torus7"))));
  CHECK(degree_audit(*full.complex, bounds(2).M + 2 * bounds(2).K).passed());
  CHECK_THROWS_AS(mapping_telescope({}, c), PreconditionError);
}
