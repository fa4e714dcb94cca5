#include <algorithm>
#include <map>
#include <stdexcept>

#include "lfc/errors.hpp"
#include "lfc/homology.hpp"

namespace lfc {

namespace {

struct PrimeField {
  using T = std::uint64_t;
  std::uint64_t p;

  T from(std::int64_t v) const {
    const auto q = static_cast<std::int64_t>(p);
    v %= q;
    return static_cast<T>(v < 0 ? v + q : v);
  }
  T sub(T a, T b) const { return (a + p - b) % p; }
  T mul(T a, T b) const { return a * b % p; }
  T inv(T a) const {
    T r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  static bool zero(T a) { return a == 0; }
  static Rational export_value(T a) { return Rational(a); }
};

struct RationalField {
  using T = Rational;
  T from(std::int64_t v) const { return T(v); }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return T(1) / a; }
  static bool zero(const T& a) { return a == 0; }
  static Rational export_value(const T& a) { return a; }
};

template <class F>
using Vec = std::vector<std::pair<std::uint32_t, typename F::T>>;

// x - c * y on sorted sparse vectors.
template <class F>
Vec<F> axpy(const F& f, const Vec<F>& x, const typename F::T& c, const Vec<F>& y) {
  Vec<F> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, k = 0;
  while (i < x.size() || k < y.size()) {
    if (k == y.size() || (i < x.size() && x[i].first < y[k].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[k].first < x[i].first) {
      auto v = f.sub(f.from(0), f.mul(c, y[k].second));
      if (!F::zero(v)) out.emplace_back(y[k].first, v);
      ++k;
    } else {
      auto v = f.sub(x[i].second, f.mul(c, y[k].second));
      if (!F::zero(v)) out.emplace_back(x[i].first, v);
      ++i;
      ++k;
    }
  }
  return out;
}

template <class F>
Vec<F> convert(const F& f, const SparseColumn& col) {
  Vec<F> v;
  for (auto [row, value] : col) {
    auto x = f.from(value);
    if (!F::zero(x)) v.emplace_back(row, x);
  }
  return v;
}

// Left-to-right column reduction R = D V of one differential.
template <class F>
struct Reduced {
  std::vector<Vec<F>> r;                   // reduced columns
  std::vector<Vec<F>> v;                   // V columns (only if tracked)
  std::vector<std::int64_t> pivot_of_row;  // column whose lowest entry sits in the row, or -1
};

template <class F>
Reduced<F> reduce(const F& f, const std::vector<SparseColumn>& cols, std::size_t rows, std::size_t n_cols, bool track) {
  Reduced<F> out;
  out.pivot_of_row.assign(rows, -1);
  out.r.resize(n_cols);
  if (track) out.v.resize(n_cols);
  for (std::size_t j = 0; j < n_cols; ++j) {
    Vec<F> col = j < cols.size() ? convert(f, cols[j]) : Vec<F>{};
    Vec<F> v;
    if (track) v.emplace_back(static_cast<std::uint32_t>(j), f.from(1));
    while (!col.empty()) {
      const auto low = col.back().first;
      const auto k = out.pivot_of_row[low];
      if (k < 0) break;
      const auto c = f.mul(col.back().second, f.inv(out.r[k].back().second));
      col = axpy(f, col, c, out.r[k]);
      if (track) v = axpy(f, v, c, out.v[k]);
    }
    if (!col.empty()) out.pivot_of_row[col.back().first] = static_cast<std::int64_t>(j);
    out.r[j] = std::move(col);
    if (track) out.v[j] = std::move(v);
  }
  return out;
}

// Cycle representatives of a homology basis in degree d: columns j with
// R_d[j] = 0 whose index is not the low of any column of R_{d+1}.
template <class F>
std::vector<std::uint32_t> essential(const Reduced<F>& rd, const Reduced<F>& rd1) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < rd.r.size(); ++j)
    if (rd.r[j].empty() && (j >= rd1.pivot_of_row.size() || rd1.pivot_of_row[j] < 0)) out.push_back(j);
  return out;
}

template <class F>
std::size_t matrix_rank(const F& f, std::vector<std::vector<typename F::T>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && F::zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const auto inv = f.inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && !F::zero(m[r][c])) {
        const auto factor = f.mul(m[r][c], inv);
        for (std::size_t k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
      }
    ++rank;
  }
  return rank;
}

template <class F>
void explicit_matrices(const F& f, const SimplicialMap& map, Execution execution, InducedMapReport& report) {
  const ChainComplex t = chain_complex(map.source(), false, execution);
  const ChainComplex s = chain_complex(map.target(), false, execution);
  const int top = std::max(map.source().dim(), map.target().dim());
  auto reduce_degree = [&](const ChainComplex& c, int d, bool track) {
    return reduce(f, c.columns(d), c.size(d - 1), c.size(d), track);
  };
  for (int d = 0; d <= top; ++d) {
    const auto rt = reduce_degree(t, d, true);
    const auto rt1 = reduce_degree(t, d + 1, false);
    const auto rs = reduce_degree(s, d, true);
    const auto rs1 = reduce_degree(s, d + 1, false);
    const auto src = essential(rt, rt1);
    const auto tgt = essential(rs, rs1);
    std::map<std::uint32_t, std::size_t> tgt_pos;
    for (std::size_t k = 0; k < tgt.size(); ++k) tgt_pos[tgt[k]] = k;

    const auto fmap = chain_map(map, d);
    std::vector<std::vector<typename F::T>> m(tgt.size(), std::vector<typename F::T>(src.size(), f.from(0)));
    for (std::size_t c = 0; c < src.size(); ++c) {
      // Push the cycle forward.
      Vec<F> x;
      for (const auto& [cell, coeff] : rt.v[src[c]])
        for (auto [row, value] : fmap[cell]) x = axpy(f, x, f.sub(f.from(0), coeff), Vec<F>{{row, f.from(value)}});
      // Express it in the target basis: boundaries plus essential cycles.
      while (!x.empty()) {
        const auto low = x.back().first;
        if (low < rs1.pivot_of_row.size() && rs1.pivot_of_row[low] >= 0) {
          const auto& b = rs1.r[rs1.pivot_of_row[low]];
          x = axpy(f, x, f.mul(x.back().second, f.inv(b.back().second)), b);
        } else if (auto it = tgt_pos.find(low); it != tgt_pos.end()) {
          const auto coeff = x.back().second;
          m[it->second][c] = coeff;
          x = axpy(f, x, coeff, rs.v[low]);
        } else {
          throw std::logic_error("induced_map_homology: image of a cycle is not a cycle");
        }
      }
    }

    InducedDegree deg;
    deg.degree = d;
    deg.source_rank = src.size();
    deg.target_rank = tgt.size();
    deg.rank = matrix_rank(f, m);
    FieldMatrix exported(tgt.size(), std::vector<Rational>(src.size()));
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) exported[r][c] = F::export_value(m[r][c]);
    deg.matrix = std::move(exported);
    report.degrees.push_back(std::move(deg));
  }
}

}  // namespace

bool InducedMapReport::isomorphism() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const InducedDegree& d) { return d.isomorphism(); });
}

InducedMapReport induced_map_homology(const SimplicialMap& f, Coefficients field, Execution execution,
                                      std::size_t dense_limit) {
  if (!field.is_field()) throw PreconditionError("induced_map_homology: needs field coefficients");
  InducedMapReport report;
  report.coefficients = field;

  const HomologyGroups hs = homology(f.source(), false, field, execution);
  const HomologyGroups ht = homology(f.target(), false, field, execution);
  const HomologyGroups hc = homology(mapping_cone(f, execution), field);
  report.cone_acyclic = hc.vanishes();

  // Long exact sequence: h_d(cone) = (b_d(S) - r_d) + (b_{d-1}(T) - r_{d-1}).
  const int top = std::max(f.source().dim(), f.target().dim());
  std::vector<std::size_t> cone_ranks;
  long long previous = 0;
  for (int d = 0; d <= top; ++d) {
    const long long r = static_cast<long long>(ht.rank(d)) + static_cast<long long>(hs.rank(d - 1)) - previous -
                        static_cast<long long>(hc.rank(d));
    if (r < 0) throw std::logic_error("induced_map_homology: inconsistent cone ranks");
    cone_ranks.push_back(static_cast<std::size_t>(r));
    previous = r;
  }

  if (f.source().size() + f.target().size() <= dense_limit) {
    if (field.kind == Coefficients::Kind::prime)
      explicit_matrices(PrimeField{field.p}, f, execution, report);
    else
      explicit_matrices(RationalField{}, f, execution, report);
    for (const auto& deg : report.degrees)
      if (deg.rank != cone_ranks[deg.degree] || deg.source_rank != hs.rank(deg.degree) ||
          deg.target_rank != ht.rank(deg.degree))
        throw std::logic_error("induced_map_homology: explicit matrices disagree with the mapping cone in degree " +
                               std::to_string(deg.degree));
    report.matrices_checked = true;
  } else {
    for (int d = 0; d <= top; ++d) {
      InducedDegree deg;
      deg.degree = d;
      deg.source_rank = hs.rank(d);
      deg.target_rank = ht.rank(d);
      deg.rank = cone_ranks[d];
      report.degrees.push_back(std::move(deg));
    }
  }
  return report;
}

}  // namespace lfc
