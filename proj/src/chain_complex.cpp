#include "lfc/chain_complex.hpp"

#include <algorithm>
#include <map>

#include "lfc/errors.hpp"

namespace lfc {

std::size_t ChainComplex::size(int degree) const {
  if (degree < bottom || degree > top()) return 0;
  return sizes[degree - bottom];
}

const std::vector<SparseColumn>& ChainComplex::columns(int degree) const {
  static const std::vector<SparseColumn> none;
  if (degree <= bottom || degree > top()) return none;
  return boundary[degree - bottom];
}

IntMatrix ChainComplex::dense(int degree) const {
  IntMatrix m(size(degree - 1), std::vector<BigInt>(size(degree), 0));
  const auto& cols = columns(degree);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [row, value] : cols[j]) m[row][j] = value;
  return m;
}

bool ChainComplex::squares_to_zero() const {
  for (int d = bottom + 2; d <= top(); ++d) {
    const auto& outer = columns(d);
    const auto& inner = columns(d - 1);
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& col : outer) {
      acc.clear();
      for (auto [row, value] : col)
        for (auto [r2, v2] : inner[row]) acc[r2] += value * v2;
      for (auto& [r, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

ChainComplex chain_complex(const Complex& c, bool reduced, Execution execution) {
  ChainComplex cc;
  cc.bottom = reduced ? -1 : 0;
  if (reduced) {
    cc.sizes.push_back(1);
    cc.boundary.emplace_back();
  }
  for (int d = 0; d <= c.dim(); ++d) {
    cc.sizes.push_back(c.count(d));
    std::vector<SparseColumn> cols(c.count(d));
    if (d == 0) {
      if (reduced)
        for (auto& col : cols) col = {{0, 1}};
    } else {
      const auto n = static_cast<std::ptrdiff_t>(c.count(d));
      auto fill = [&](std::ptrdiff_t i) {
        auto s = c.simplex(d, static_cast<std::size_t>(i));
        std::vector<VertexId> face(d);
        auto& col = cols[i];
        col.reserve(d + 1);
        for (int k = 0; k <= d; ++k) {
          std::copy(s.begin(), s.begin() + k, face.begin());
          std::copy(s.begin() + k + 1, s.end(), face.begin() + k);
          auto idx = c.index_of(face);
          if (!idx) throw PreconditionError("chain_complex: complex is not closed under faces");
          col.emplace_back(static_cast<std::uint32_t>(*idx), (k % 2 == 0) ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
      };
      if (execution == Execution::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) fill(i);
      } else {
        std::exception_ptr failure;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
          try {
            fill(i);
          } catch (...) {
#pragma omp critical(lfc_chain_complex)
            if (!failure) failure = std::current_exception();
          }
        }
        if (failure) std::rethrow_exception(failure);
      }
    }
    cc.boundary.push_back(std::move(cols));
  }
  // Keep boundary[0] empty even when degree 0 is the bottom.
  if (!reduced && !cc.boundary.empty()) cc.boundary[0].clear();
  return cc;
}

namespace {

// Sign of the permutation that sorts `v` (distinct entries).
int sort_sign(std::vector<VertexId>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

std::vector<SparseColumn> chain_map(const SimplicialMap& f, int d) {
  const Complex& src = f.source();
  const Complex& tgt = f.target();
  std::vector<SparseColumn> cols(src.count(d));
  std::vector<VertexId> img;
  for (std::size_t i = 0; i < src.count(d); ++i) {
    img.clear();
    for (VertexId v : src.simplex(d, i)) img.push_back(f(v));
    int sign = 1;
    bool degenerate = false;
    for (std::size_t a = 0; a < img.size() && !degenerate; ++a)
      for (std::size_t b = a + 1; b < img.size(); ++b)
        if (img[a] == img[b]) {
          degenerate = true;
          break;
        }
    if (degenerate) continue;
    sign = sort_sign(img);
    auto idx = tgt.index_of(img);
    if (!idx) throw PreconditionError("chain_map: image of a simplex is not in the target");
    cols[i] = {{static_cast<std::uint32_t>(*idx), sign}};
  }
  return cols;
}

ChainComplex mapping_cone(const SimplicialMap& f, Execution execution) {
  const ChainComplex t = chain_complex(f.source(), false, execution);
  const ChainComplex s = chain_complex(f.target(), false, execution);
  const int top = std::max(f.source().dim() + 1, f.target().dim());
  ChainComplex cone;
  cone.bottom = 0;
  for (int d = 0; d <= top; ++d) {
    const std::size_t t_part = t.size(d - 1);
    cone.sizes.push_back(t_part + s.size(d));
    std::vector<SparseColumn> cols;
    if (d > 0) {
      const std::size_t offset = t.size(d - 2);  // rows of Cone_{d-1}: T_{d-2} then S_{d-1}
      const auto& dt = t.columns(d - 1);
      const auto fmap = chain_map(f, d - 1);
      for (std::size_t a = 0; a < t_part; ++a) {
        SparseColumn col;
        if (d - 1 > 0)
          for (auto [row, v] : dt[a]) col.emplace_back(row, -v);
        for (auto [row, v] : fmap[a]) col.emplace_back(static_cast<std::uint32_t>(row + offset), v);
        cols.push_back(std::move(col));
      }
      const auto& ds = s.columns(d);
      for (std::size_t b = 0; b < s.size(d); ++b) {
        SparseColumn col;
        if (d > 0 && b < ds.size())
          for (auto [row, v] : ds[b]) col.emplace_back(static_cast<std::uint32_t>(row + offset), v);
        cols.push_back(std::move(col));
      }
    }
    cone.boundary.push_back(std::move(cols));
  }
  return cone;
}

}  // namespace lfc
