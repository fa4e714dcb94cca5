#include "lfc/coloring.hpp"

#include <algorithm>

#include "lfc/errors.hpp"

namespace lfc {

long long Coloring::max_color() const {
  if (colors.empty()) return -1;
  return *std::max_element(colors.begin(), colors.end());
}

namespace {

// For each vertex, the m-simplices containing it, in increasing index order.
std::vector<std::vector<std::size_t>> incidence(const Complex& c, int m) {
  std::vector<std::vector<std::size_t>> inc(c.num_vertices());
  for (std::size_t i = 0; i < c.count(m); ++i)
    for (VertexId v : c.simplex(m, i)) inc[v].push_back(i);
  return inc;
}

}  // namespace

Coloring first_fit_coloring(const Complex& c, int m) {
  if (m < 1) throw PreconditionError("first_fit_coloring: dimension must be at least 1");
  Coloring out{m, std::vector<Color>(c.count(m), 0)};
  const auto inc = incidence(c, m);
  std::vector<char> taken;
  for (std::size_t i = 0; i < c.count(m); ++i) {
    taken.assign(taken.size(), 0);
    for (VertexId v : c.simplex(m, i))
      for (std::size_t j : inc[v]) {
        if (j >= i) break;
        if (out.colors[j] >= taken.size()) taken.resize(out.colors[j] + 1, 0);
        taken[out.colors[j]] = 1;
      }
    Color color = 0;
    while (color < taken.size() && taken[color]) ++color;
    out.colors[i] = color;
  }
  return out;
}

bool is_proper_coloring(const Complex& c, const Coloring& coloring) {
  if (coloring.colors.size() != c.count(coloring.dim)) return false;
  const auto inc = incidence(c, coloring.dim);
  for (const auto& list : inc)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        if (coloring.colors[list[a]] == coloring.colors[list[b]]) return false;
  return true;
}

}  // namespace lfc
