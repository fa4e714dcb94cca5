#include "lfc/homology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include <boost/container/small_vector.hpp>

#include "lfc/errors.hpp"

namespace lfc {

namespace {

template <class C, class P>
void erase_where(C& c, P pred) {
  c.erase(std::remove_if(c.begin(), c.end(), pred), c.end());
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Pairs off cells joined by an invertible coefficient. Over Z only +-1 is
// used as a pivot and arithmetic stays in int64 (a pivot whose update would
// overflow is skipped); over Z/p every nonzero entry is a pivot.
class Reducer {
 public:
  Reducer(const ChainComplex& c, Coefficients k) : prime_(k.kind == Coefficients::Kind::prime), p_(k.p) {
    levels_ = c.sizes.size();
    alive_.resize(levels_);
    cols_.resize(levels_);
    rows_.resize(levels_);
    for (std::size_t g = 0; g < levels_; ++g) {
      alive_[g].assign(c.sizes[g], 1);
      if (g == 0) continue;
      cols_[g].resize(c.boundary[g].size());
      for (std::size_t j = 0; j < c.boundary[g].size(); ++j)
        cols_[g][j].assign(c.boundary[g][j].begin(), c.boundary[g][j].end());
      rows_[g].resize(c.sizes[g - 1]);
      for (std::uint32_t j = 0; j < cols_[g].size(); ++j) {
        auto& col = cols_[g][j];
        if (prime_)
          for (auto& e : col) e.second = normalize(e.second);
        erase_where(col, [](const auto& e) { return e.second == 0; });
        for (auto& e : col) rows_[g][e.first].push_back(j);
        col_queue_.emplace_back(g, j);
      }
      for (std::uint32_t i = 0; i < rows_[g].size(); ++i) row_queue_.emplace_back(g, i);
    }
  }

  void run() {
    drain();
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t g = levels_; g-- > 1;) {
        for (std::uint32_t j = 0; j < cols_[g].size(); ++j) {
          if (!alive_[g][j] || cols_[g][j].empty()) continue;
          std::uint32_t best_row = 0;
          std::size_t best = std::numeric_limits<std::size_t>::max();
          for (auto [row, value] : cols_[g][j]) {
            if (!is_unit(value) || forbidden_.count({g, row, j})) continue;
            const std::size_t n = live_row(g, row).size();
            if (n < best) {
              best = n;
              best_row = row;
            }
          }
          if (best == std::numeric_limits<std::size_t>::max()) continue;
          if (eliminate(g, best_row, j)) {
            progress = true;
            drain();
          } else {
            forbidden_.insert({g, best_row, j});
          }
        }
      }
    }
  }

  std::size_t alive_count(std::size_t g) const {
    return static_cast<std::size_t>(std::count(alive_[g].begin(), alive_[g].end(), 1));
  }

  // The surviving part of the differential out of level g.
  IntMatrix residual(std::size_t g) const {
    if (g == 0 || g >= levels_) return {};
    std::vector<std::uint32_t> row_index(alive_[g - 1].size(), 0);
    std::uint32_t n_rows = 0;
    for (std::size_t i = 0; i < alive_[g - 1].size(); ++i)
      if (alive_[g - 1][i]) row_index[i] = n_rows++;
    std::vector<std::uint32_t> live_cols;
    for (std::uint32_t j = 0; j < cols_[g].size(); ++j)
      if (alive_[g][j] && !cols_[g][j].empty()) live_cols.push_back(j);
    if (live_cols.empty()) return {};
    IntMatrix m(n_rows, std::vector<BigInt>(live_cols.size(), 0));
    for (std::size_t c = 0; c < live_cols.size(); ++c)
      for (auto [row, value] : cols_[g][live_cols[c]]) m[row_index[row]][c] = value;
    return m;
  }

 private:
  using Column = boost::container::small_vector<std::pair<std::uint32_t, std::int64_t>, 4>;
  using RowList = boost::container::small_vector<std::uint32_t, 6>;

  std::int64_t normalize(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    v %= p;
    return v < 0 ? v + p : v;
  }

  bool is_unit(std::int64_t v) const { return prime_ ? v != 0 : (v == 1 || v == -1); }

  static std::int64_t coefficient(const Column& col, std::uint32_t row) {
    auto it = std::lower_bound(col.begin(), col.end(), row, [](const auto& e, std::uint32_t r) { return e.first < r; });
    return it != col.end() && it->first == row ? it->second : 0;
  }

  // Columns of level g that still have a nonzero entry in `row`.
  RowList& live_row(std::size_t g, std::uint32_t row) {
    auto& list = rows_[g][row];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    erase_where(list, [&](std::uint32_t j) { return !alive_[g][j] || coefficient(cols_[g][j], row) == 0; });
    return list;
  }

  // out = a - f * b, or false on int64 overflow.
  bool combine(const Column& a, std::int64_t f, const Column& b, Column& out, std::vector<std::uint32_t>& added) const {
    out.clear();
    added.clear();
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      std::uint32_t row;
      std::int64_t va = 0, vb = 0;
      bool from_a = false;
      if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
        row = a[i].first;
        va = a[i++].second;
        from_a = true;
      } else if (i == a.size() || b[k].first < a[i].first) {
        row = b[k].first;
        vb = b[k++].second;
      } else {
        row = a[i].first;
        va = a[i++].second;
        vb = b[k++].second;
        from_a = true;
      }
      std::int64_t v;
      if (prime_) {
        const auto p = static_cast<std::uint64_t>(p_);
        const std::uint64_t prod = static_cast<std::uint64_t>(f) * static_cast<std::uint64_t>(vb) % p;
        v = static_cast<std::int64_t>((static_cast<std::uint64_t>(va) + p - prod) % p);
      } else {
        std::int64_t prod;
        if (__builtin_mul_overflow(f, vb, &prod) || __builtin_sub_overflow(va, prod, &v)) return false;
      }
      if (v != 0) {
        out.emplace_back(row, v);
        if (!from_a) added.push_back(row);
      }
    }
    return true;
  }

  bool eliminate(std::size_t g, std::uint32_t i, std::uint32_t j) {
    const Column pivot = cols_[g][j];
    const std::int64_t e = coefficient(pivot, i);
    const std::int64_t e_inv = prime_ ? static_cast<std::int64_t>(pow_mod(e, p_ - 2, p_)) : e;
    std::vector<std::uint32_t> others;
    for (std::uint32_t other : live_row(g, i))
      if (other != j) others.push_back(other);

    std::vector<Column> updated(others.size());
    std::vector<std::vector<std::uint32_t>> added(others.size());
    for (std::size_t t = 0; t < others.size(); ++t) {
      const std::int64_t a = coefficient(cols_[g][others[t]], i);
      std::int64_t f;
      if (prime_)
        f = static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(e_inv) % p_);
      else
        f = a * e_inv;
      if (!combine(cols_[g][others[t]], f, pivot, updated[t], added[t])) return false;
    }
    for (std::size_t t = 0; t < others.size(); ++t) {
      cols_[g][others[t]] = std::move(updated[t]);
      for (std::uint32_t r : added[t]) rows_[g][r].push_back(others[t]);
      col_queue_.emplace_back(g, others[t]);
    }
    for (auto [row, value] : pivot) row_queue_.emplace_back(g, row);

    // Drop the cell j of level g, also as a row of the next differential.
    alive_[g][j] = 0;
    cols_[g][j].clear();
    if (g + 1 < levels_) {
      for (std::uint32_t k : live_row(g + 1, j)) {
        auto& col = cols_[g + 1][k];
        erase_where(col, [&](const auto& en) { return en.first == j; });
        col_queue_.emplace_back(g + 1, k);
      }
      rows_[g + 1][j].clear();
    }
    // Drop the cell i of level g - 1, also as a column of the previous one.
    alive_[g - 1][i] = 0;
    rows_[g][i].clear();
    if (g - 1 >= 1) {
      for (auto [row, value] : cols_[g - 1][i]) row_queue_.emplace_back(g - 1, row);
      cols_[g - 1][i].clear();
    }
    return true;
  }

  // Eliminations that create no fill: a column with one entry, or a row
  // met by one column.
  void drain() {
    while (!col_queue_.empty() || !row_queue_.empty()) {
      while (!col_queue_.empty()) {
        auto [g, j] = col_queue_.front();
        col_queue_.pop_front();
        if (!alive_[g][j] || cols_[g][j].size() != 1) continue;
        auto [row, value] = cols_[g][j][0];
        if (is_unit(value) && !forbidden_.count({g, row, j})) eliminate(g, row, j);
      }
      while (!row_queue_.empty() && col_queue_.empty()) {
        auto [g, i] = row_queue_.front();
        row_queue_.pop_front();
        if (!alive_[g - 1][i]) continue;
        auto& live = live_row(g, i);
        if (live.size() != 1) continue;
        const std::uint32_t j = live[0];
        if (is_unit(coefficient(cols_[g][j], i)) && !forbidden_.count({g, i, j})) eliminate(g, i, j);
      }
    }
  }

  bool prime_;
  std::uint32_t p_;
  std::size_t levels_ = 0;
  std::vector<std::vector<char>> alive_;
  std::vector<std::vector<Column>> cols_;
  std::vector<std::vector<RowList>> rows_;
  std::deque<std::pair<std::size_t, std::uint32_t>> col_queue_, row_queue_;
  std::set<std::tuple<std::size_t, std::uint32_t, std::uint32_t>> forbidden_;
};

// Rank of a residual matrix over the coefficients.
std::size_t residual_rank(const IntMatrix& m, Coefficients k, std::vector<BigInt>* torsion) {
  if (m.empty() || m[0].empty()) return 0;
  if (k.kind == Coefficients::Kind::prime) {
    // The reducer leaves no nonzero entries behind over a field.
    for (const auto& row : m)
      for (const auto& x : row)
        if (x != 0) throw std::logic_error("homology: field reduction left a nonzero entry");
    return 0;
  }
  SmithResult snf = smith_normal_form(m);
  if (torsion)
    for (const auto& f : snf.invariant_factors)
      if (f > 1) torsion->push_back(f);
  return snf.rank;
}

}  // namespace

Coefficients Coefficients::mod(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("coefficients: " + std::to_string(p) + " is not prime");
  return {Kind::prime, p};
}

std::string Coefficients::name() const {
  switch (kind) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::prime: return "Z/" + std::to_string(p);
  }
  return "?";
}

Coefficients Coefficients::parse(const std::string& text) {
  if (text == "Z" || text == "integers") return integers();
  if (text == "Q" || text == "rationals") return rationals();
  std::string digits;
  if (text.rfind("Z/", 0) == 0)
    digits = text.substr(2);
  else if (text.rfind("mod", 0) == 0)
    digits = text.substr(3);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
      digits.size() < 10)
    return mod(static_cast<std::uint32_t>(std::stoul(digits)));
  throw InputError("unknown coefficients '" + text + "' (expected Z, Q or Z/p)");
}

std::size_t HomologyGroups::rank(int degree) const {
  const int g = degree - bottom;
  return g < 0 || g >= static_cast<int>(betti.size()) ? 0 : betti[g];
}

bool HomologyGroups::vanishes() const {
  for (std::size_t g = 0; g < betti.size(); ++g)
    if (betti[g] != 0 || !torsion[g].empty()) return false;
  return true;
}

bool isomorphic(const HomologyGroups& a, const HomologyGroups& b) {
  if (a.coefficients != b.coefficients || a.reduced != b.reduced) return false;
  auto torsion = [](const HomologyGroups& h, int d) {
    const int g = d - h.bottom;
    return g >= 0 && g < static_cast<int>(h.torsion.size()) ? h.torsion[g] : std::vector<BigInt>{};
  };
  const int lo = std::min(a.bottom, b.bottom);
  const int hi = std::max(a.bottom + static_cast<int>(a.betti.size()), b.bottom + static_cast<int>(b.betti.size()));
  for (int d = lo; d < hi; ++d)
    if (a.rank(d) != b.rank(d) || torsion(a, d) != torsion(b, d)) return false;
  return true;
}

std::string HomologyGroups::to_string() const {
  std::ostringstream out;
  for (std::size_t g = 0; g < betti.size(); ++g) {
    if (g) out << ", ";
    out << (reduced ? "H~" : "H") << bottom + static_cast<int>(g) << " = ";
    bool first = true;
    if (betti[g] != 0 || torsion[g].empty()) {
      out << (betti[g] == 0 ? std::string("0")
                            : coefficients.name() + (betti[g] > 1 ? "^" + std::to_string(betti[g]) : ""));
      first = false;
    }
    for (const auto& t : torsion[g]) {
      out << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
  }
  return out.str();
}

HomologyGroups homology(const ChainComplex& c, Coefficients coefficients) {
  if (c.boundary.size() != c.sizes.size()) throw PreconditionError("homology: malformed chain complex");
  const Coefficients working = coefficients.kind == Coefficients::Kind::rationals ? Coefficients::integers() : coefficients;
  Reducer reducer(c, working);
  reducer.run();

  const std::size_t levels = c.sizes.size();
  std::vector<std::size_t> ranks(levels + 1, 0);
  std::vector<std::vector<BigInt>> torsion(levels + 1);
  for (std::size_t g = 1; g < levels; ++g)
    ranks[g] = residual_rank(reducer.residual(g), working, &torsion[g - 1]);

  HomologyGroups h;
  h.coefficients = coefficients;
  h.bottom = c.bottom;
  for (std::size_t g = 0; g < levels; ++g) {
    h.betti.push_back(reducer.alive_count(g) - ranks[g] - ranks[g + 1]);
    std::sort(torsion[g].begin(), torsion[g].end());
    h.torsion.push_back(coefficients.kind == Coefficients::Kind::integers ? torsion[g] : std::vector<BigInt>{});
  }
  return h;
}

HomologyGroups homology(const Complex& c, bool reduced, Coefficients coefficients, Execution execution) {
  HomologyGroups h = homology(chain_complex(c, reduced, execution), coefficients);
  h.reduced = reduced;
  return h;
}

bool is_acyclic(const Complex& c, Execution execution) {
  if (c.empty()) throw PreconditionError("is_acyclic: the empty complex");
  return homology(c, true, Coefficients::integers(), execution).vanishes();
}

}  // namespace lfc
