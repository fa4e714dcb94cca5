#include <doctest.h>

#include <numeric>
#include <random>

#include "lfc/chain_complex.hpp"
#include "lfc/errors.hpp"
#include "lfc/generate.hpp"
#include "lfc/homology.hpp"
#include "lfc/smith.hpp"
#include "lfc/tower.hpp"
#include "support.hpp"

using namespace lfc;
using namespace lfc::test;

namespace {

IntMatrix ints(const std::vector<std::vector<long>>& rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (long x : r) m.back().emplace_back(x);
  }
  return m;
}

// gcd of all k x k minors, by cofactor expansion.
BigInt det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      minor.emplace_back();
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor.back().push_back(m[i][c]);
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

BigInt determinantal_divisor(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(a.size(), k, 0, cur, rows);
  subsets(a[0].size(), k, 0, cur, cols);
  BigInt g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      IntMatrix m;
      for (auto i : r) {
        m.emplace_back();
        for (auto j : c) m.back().push_back(a[i][j]);
      }
      g = gcd(g, abs(det(m)));
    }
  return g;
}

// Rank over Z/p of a dense integer matrix.
std::size_t rank_mod(IntMatrix a, unsigned p) {
  std::vector<std::vector<long>> m;
  for (auto& row : a) {
    m.emplace_back();
    for (auto& x : row) m.back().push_back(static_cast<long>(((x % p) + p) % p));
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long inv = 1;
    for (unsigned e = 0; e < p - 2; ++e) inv = inv * m[rank][c] % p;
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c]) {
        const long f = m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

// Betti numbers over Z/p from dense boundary ranks.
std::vector<std::size_t> dense_betti(const Complex& c, unsigned p) {
  const ChainComplex cc = chain_complex(c, false, Execution::serial);
  std::vector<std::size_t> ranks(c.dim() + 2, 0), betti;
  for (int d = 1; d <= c.dim(); ++d) ranks[d] = rank_mod(cc.dense(d), p);
  for (int d = 0; d <= c.dim(); ++d) betti.push_back(c.count(d) - ranks[d] - ranks[d + 1]);
  return betti;
}

}  // namespace

TEST_CASE("Smith normal form") {
  CHECK(smith_normal_form(ints({{0, 0}, {0, 0}})).rank == 0);
  const auto id = smith_normal_form(ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id.invariant_factors == std::vector<BigInt>{1, 1, 1});
  const auto s = smith_normal_form(ints({{2, 4}, {6, 8}}), true);
  CHECK(s.invariant_factors == std::vector<BigInt>{2, 4});
  CHECK(multiply(multiply(*s.left, ints({{2, 4}, {6, 8}})), *s.right) == s.diagonal);
  CHECK_THROWS_AS(smith_normal_form(ints({{1, 2}, {3}})), PreconditionError);
}

TEST_CASE("Smith normal form agrees with determinantal divisors on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6), shape(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a(shape(rng), std::vector<BigInt>(shape(rng)));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    const auto s = smith_normal_form(a, true);
    CHECK(multiply(multiply(*s.left, a), *s.right) == s.diagonal);
    BigInt prefix = 1;
    for (std::size_t k = 1; k <= std::min(a.size(), a[0].size()); ++k) {
      const BigInt dk = determinantal_divisor(a, k);
      if (k <= s.rank) {
        prefix *= s.invariant_factors[k - 1];
        CHECK(dk == prefix);
      } else {
        CHECK(dk == 0);
      }
    }
    for (std::size_t k = 1; k < s.invariant_factors.size(); ++k)
      CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);
  }
}

TEST_CASE("boundary matrices") {
  const auto edge = chain_complex(make({{"a", "b"}}));
  CHECK(edge.dense(1) == ints({{-1}, {1}}));
  const auto point = chain_complex(make({{"a"}}));
  for (const auto& row : point.dense(1)) CHECK(row.empty());
  CHECK(point.columns(0).empty());
  const auto circle = chain_complex(skeleton(make({{"a", "b", "c"}}), 1));
  const auto d1 = circle.dense(1);
  REQUIRE(d1.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(d1[0][j] + d1[1][j] + d1[2][j] == 0);
  CHECK(chain_complex(fixture("klein8"), true).squares_to_zero());
}

TEST_CASE("homology of small complexes") {
  const auto point = homology(make({{"a"}}), true);
  CHECK(point.vanishes());
  const auto circle = homology(fixture("circle_3"));
  CHECK(circle.betti == std::vector<std::size_t>{1, 1});
  CHECK(circle.torsion[1].empty());
  const auto rp2 = homology(fixture("rp2_6"));
  CHECK(rp2.betti == std::vector<std::size_t>{1, 0, 0});
  CHECK(rp2.torsion[1] == std::vector<BigInt>{2});
  CHECK(homology(fixture("rp2_6"), false, Coefficients::mod(2)).betti == std::vector<std::size_t>{1, 1, 1});
  CHECK(homology(fixture("rp2_6"), false, Coefficients::rationals()).betti == std::vector<std::size_t>{1, 0, 0});
  const auto klein = homology(fixture("klein8"));
  CHECK(klein.betti == std::vector<std::size_t>{1, 1, 0});
  CHECK(klein.torsion[1] == std::vector<BigInt>{2});
  CHECK(homology(Complex(abc(), 0), true).betti == std::vector<std::size_t>{1});
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(make({{"a", "b", "c"}})));
  CHECK_FALSE(is_acyclic(fixture("circle_3")));
  CHECK_FALSE(is_acyclic(fixture("rp2_6")));
  CHECK_THROWS_AS(is_acyclic(Complex(abc(), 0)), PreconditionError);
}

TEST_CASE("coefficient parsing") {
  CHECK(Coefficients::parse("Z") == Coefficients::integers());
  CHECK(Coefficients::parse("Q") == Coefficients::rationals());
  CHECK(Coefficients::parse("Z/3") == Coefficients::mod(3));
  CHECK(Coefficients::mod(5).name() == "Z/5");
  CHECK_THROWS_AS(Coefficients::mod(4), PreconditionError);
  CHECK_THROWS(Coefficients::parse("R"));
}

TEST_CASE("sparse homology matches dense ranks and universal coefficients") {
  std::vector<Complex> inputs = {fixture("torus7"), fixture("rp2_6"), fixture("klein8"), cone(fixture("rp2_6"))};
  for (std::uint64_t seed = 0; seed < 6; ++seed) inputs.push_back(shelled_tree(2, 6, seed));
  inputs.push_back(*localize(share(fixture("rp2_6"))).tower.levels[1].complex);
  for (const auto& c : inputs) {
    const auto z = homology(c);
    for (unsigned p : {2u, 3u}) {
      const auto hp = homology(c, false, Coefficients::mod(p));
      CHECK(hp.betti == dense_betti(c, p));
      // dim H_d(Z/p) = b_d + t_d(p) + t_{d-1}(p).
      for (int d = 0; d <= c.dim(); ++d) {
        auto divisible = [&](int k) {
          std::size_t n = 0;
          if (k >= 0 && static_cast<std::size_t>(k) < z.torsion.size())
            for (const auto& t : z.torsion[k]) n += (t % p == 0);
          return n;
        };
        CHECK(hp.betti[d] == z.betti[d] + divisible(d) + divisible(d - 1));
      }
    }
    long long chi = 0;
    for (std::size_t d = 0; d < z.betti.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long long>(z.betti[d]);
    CHECK(chi == euler_characteristic(c));
  }
}

TEST_CASE("serial and parallel chain complexes agree") {
  const Complex t = *localize(share(fixture("torus7"))).complex;
  const auto a = chain_complex(t, true, Execution::serial);
  const auto b = chain_complex(t, true, Execution::parallel);
  CHECK(a.sizes == b.sizes);
  CHECK(a.boundary == b.boundary);
  CHECK(homology(t, false, Coefficients::integers(), Execution::serial) ==
        homology(t, false, Coefficients::integers(), Execution::parallel));
}

TEST_CASE("induced maps") {
  auto circle = share(fixture("circle_3"));
  const auto id = induced_map_homology(SimplicialMap::identity(circle), Coefficients::rationals());
  CHECK(id.isomorphism());
  CHECK(id.matrices_checked);
  REQUIRE(id.degrees.size() >= 2);
  CHECK(id.degrees[1].matrix == FieldMatrix{{Rational(1)}});

  auto point = share(make({{"a"}}));
  const SimplicialMap constant(circle, point, std::vector<VertexId>(3, 0));
  const auto c = induced_map_homology(constant, Coefficients::mod(2));
  CHECK(c.degrees[0].rank == 1);
  CHECK(c.degrees[1].rank == 0);
  CHECK_FALSE(c.isomorphism());

  const auto loc = localize(circle);
  for (auto k : {Coefficients::rationals(), Coefficients::mod(2)}) {
    const auto r = induced_map_homology(loc.projection, k);
    CHECK(r.isomorphism());
    CHECK(r.cone_acyclic);
    CHECK(r.matrices_checked);
  }
  CHECK_THROWS_AS(induced_map_homology(loc.projection, Coefficients::integers()), PreconditionError);
}
