#include "lfc/smith.hpp"

#include <utility>

#include "lfc/errors.hpp"

namespace lfc {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

struct Work {
  IntMatrix d;
  std::optional<IntMatrix> u, v;  // accumulate row and column operations
  std::size_t rows, cols;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d[a], d[b]);
    if (u) std::swap((*u)[a], (*u)[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : d) std::swap(row[a], row[b]);
    if (v)
      for (auto& row : *v) std::swap(row[a], row[b]);
  }
  // row[a] += k * row[b]
  void add_row(std::size_t a, std::size_t b, const BigInt& k) {
    for (std::size_t j = 0; j < cols; ++j)
      if (d[b][j] != 0) d[a][j] += k * d[b][j];
    if (u)
      for (std::size_t j = 0; j < rows; ++j)
        if ((*u)[b][j] != 0) (*u)[a][j] += k * (*u)[b][j];
  }
  // col[a] += k * col[b]
  void add_col(std::size_t a, std::size_t b, const BigInt& k) {
    for (std::size_t i = 0; i < rows; ++i)
      if (d[i][b] != 0) d[i][a] += k * d[i][b];
    if (v)
      for (std::size_t i = 0; i < cols; ++i)
        if ((*v)[i][b] != 0) (*v)[i][a] += k * (*v)[i][b];
  }
  void negate_row(std::size_t a) {
    for (auto& x : d[a]) x = -x;
    if (u)
      for (auto& x : (*u)[a]) x = -x;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a, bool track_transforms) {
  Work w;
  w.d = a;
  w.rows = a.size();
  w.cols = a.empty() ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != w.cols) throw PreconditionError("smith_normal_form: ragged matrix");
  if (track_transforms) {
    w.u = identity(w.rows);
    w.v = identity(w.cols);
  }

  std::size_t t = 0;
  for (; t < std::min(w.rows, w.cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = w.rows, pj = w.cols;
      for (std::size_t i = t; i < w.rows; ++i)
        for (std::size_t j = t; j < w.cols; ++j)
          if (w.d[i][j] != 0 && (pi == w.rows || abs(w.d[i][j]) < abs(w.d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == w.rows) break;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      const BigInt pivot = w.d[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < w.rows; ++i)
        if (w.d[i][t] != 0) {
          BigInt q = w.d[i][t] / pivot;
          w.add_row(i, t, -q);
          if (w.d[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < w.cols; ++j)
        if (w.d[t][j] != 0) {
          BigInt q = w.d[t][j] / pivot;
          w.add_col(j, t, -q);
          if (w.d[t][j] != 0) clean = false;
        }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < w.rows && divisible; ++i)
        for (std::size_t j = t + 1; j < w.cols; ++j)
          if (w.d[i][j] % pivot != 0) {
            w.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (w.d[t][t] == 0) break;
    if (w.d[t][t] < 0) w.negate_row(t);
  }

  SmithResult r;
  for (std::size_t i = 0; i < std::min(w.rows, w.cols); ++i)
    if (w.d[i][i] != 0) r.invariant_factors.push_back(w.d[i][i]);
  r.rank = r.invariant_factors.size();
  r.diagonal = std::move(w.d);
  r.left = std::move(w.u);
  r.right = std::move(w.v);
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

}  // namespace lfc
