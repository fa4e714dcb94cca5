#include <doctest.h>

#include "lfc/collapse.hpp"
#include "lfc/errors.hpp"
#include "lfc/fibration.hpp"
#include "lfc/generate.hpp"
#include "lfc/homology.hpp"
#include "lfc/tower.hpp"
#include "support.hpp"

using namespace lfc;
using namespace lfc::test;

TEST_CASE("collapse to a point") {
  CHECK(collapse_to_point(make({{"a", "b", "c"}})).collapsed);
  const auto circle = collapse_to_point(fixture("circle_3"), {4, 1});
  CHECK_FALSE(circle.collapsed);
  CHECK(circle.attempts == 4);
  CHECK(circle.remaining == 6);
  CHECK(collapse_to_point(cone(fixture("circle_3"))).collapsed);
  CHECK(collapse_to_point(cone(fixture("torus7"))).collapsed);
  CHECK_FALSE(collapse_to_point(fixture("sphere2_4")).collapsed);
  CHECK_THROWS_AS(collapse_to_point(Complex(abc(), 0)), PreconditionError);
}

TEST_CASE("collapse onto a subcomplex") {
  const Complex tri = make({{"a", "b", "c"}});
  CHECK(collapse_onto(tri, make({{"a", "b"}})).collapsed);
  CHECK_FALSE(collapse_onto(tri, skeleton(tri, 1)).collapsed);
  CHECK_THROWS_AS(collapse_onto(make({{"a", "b"}}), make({{"b", "c"}})), PreconditionError);
}

TEST_CASE("collapsed implies acyclic on generated complexes") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Complex t = shelled_tree(n, 2 + seed, seed);
      CHECK(collapse_to_point(t).collapsed);
      CHECK(is_acyclic(t));
    }
}

TEST_CASE("fibers of simple maps") {
  auto tri = share(make({{"a", "b", "c"}}));
  const auto id = check_pseudofibration(SimplicialMap::identity(tri));
  CHECK(id.all_collapsed());
  // Each fiber is the closed simplex t itself.
  for (const auto& f : id.fibers) CHECK(f.simplices == (std::size_t{1} << (f.dim + 1)) - 1);
  CHECK(id.fibers.size() == 7);

  // Two points over one point: the fiber is disconnected.
  auto two = share(make({{"a"}, {"b"}}));
  auto one = share(make({{"a"}}));
  const auto bad = check_pseudofibration(SimplicialMap(two, one, {0, 0}));
  CHECK(bad.count(FiberStatus::failed) == 1);
  CHECK_FALSE(bad.fibers[0].acyclic);

  // Inclusion of a proper subcomplex misses simplices.
  auto edge = share(make({{"a", "b"}}));
  const SimplicialMap inc(edge, tri, {0, 1});
  CHECK_FALSE(surjective_on_simplices(inc));
  CHECK(unhit_simplices(inc).size() == 4);
  const auto r = check_pseudofibration(inc);
  // Only the fiber over {c} is empty; over {a,c} it is the point a.
  CHECK(r.count(FiberStatus::failed) == 1);
  CHECK_FALSE(r.surjective());
  CHECK(surjective_on_simplices(SimplicialMap::identity(tri)));
}

TEST_CASE("fibers of the single-edge projection") {
  auto s = share(make({{"a", "b"}}));
  const auto loc = localize(s);
  const auto rep = check_pseudofibration(loc.projection);
  REQUIRE(rep.fibers.size() == 3);
  CHECK(rep.all_collapsed());
  // Over {a}: the truncated ray; over {a,b}: everything.
  CHECK(rep.fibers[0].vertices == 3);
  CHECK(rep.fibers[0].simplices == 5);
  CHECK(rep.fibers[2].simplices == loc.complex->size());
}

TEST_CASE("fibers over every tower level") {
  for (const char* name : {"circle_3", "sphere2_4", "rp2_6"}) {
    const auto loc = localize(share(fixture(name)));
    for (std::size_t k = 0; k < loc.tower.levels.size(); ++k) {
      const auto& level = loc.tower.levels[k];
      const auto serial = check_pseudofibration(projection_map(level.complex, level.skeleton),
                                                {32, 5, Execution::serial});
      const auto parallel = check_pseudofibration(projection_map(level.complex, level.skeleton),
                                                  {32, 5, Execution::parallel});
      CHECK(serial.all_collapsed());
      CHECK(serial.surjective());
      REQUIRE(serial.fibers.size() == parallel.fibers.size());
      for (std::size_t i = 0; i < serial.fibers.size(); ++i) {
        CHECK(serial.fibers[i].status == parallel.fibers[i].status);
        CHECK(serial.fibers[i].simplices == parallel.fibers[i].simplices);
      }
      if (k >= 1)
        CHECK(check_pseudofibration(projection_map(level.prime, loc.tower.levels[k - 1].skeleton)).all_collapsed());
    }
  }
}

TEST_CASE("generators") {
  const Complex tree = shelled_tree(1, 6, 3);
  CHECK(tree.count(1) == 6);
  CHECK(tree.count(0) == 7);
  CHECK(shelled_tree(2, 5, 1).count(2) == 5);
  CHECK(shelled_tree(2, 5, 1) == shelled_tree(2, 5, 1));
  const Complex torus = fixture("torus7");
  CHECK(torus.count(0) == 7);
  CHECK(torus.count(1) == 21);
  CHECK(torus.count(2) == 14);
  CHECK(fixture("path_4").count(1) == 3);
  CHECK(fixture("star_5").count(1) == 5);
  CHECK(fixture("simplex_3").count(3) == 1);
  CHECK(is_acyclic(cone(fixture("circle_3"))));
  CHECK_THROWS_AS(fixture("moebius"), InputError);
  CHECK_THROWS_AS(shelled_tree(2, 0, 1), PreconditionError);
  CHECK(fixture_names().size() == 5);
}
