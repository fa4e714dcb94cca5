#include "lfc/complex.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "lfc/errors.hpp"

namespace lfc {

namespace {

// Sorts fixed-stride records lexicographically and removes duplicates.
void sort_unique_records(std::vector<VertexId>& flat, std::size_t stride) {
  if (flat.empty()) return;
  if (stride == 1) {
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    return;
  }
  const std::size_t n = flat.size() / stride;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  const VertexId* base = flat.data();
  auto less = [base, stride](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(base + a * stride, base + (a + 1) * stride,
                                        base + b * stride, base + (b + 1) * stride);
  };
  std::sort(perm.begin(), perm.end(), less);
  std::vector<VertexId> out;
  out.reserve(flat.size());
  for (std::size_t k = 0; k < n; ++k) {
    const VertexId* rec = base + perm[k] * stride;
    if (k > 0 && std::equal(rec, rec + stride, out.end() - stride)) continue;
    out.insert(out.end(), rec, rec + stride);
  }
  flat = std::move(out);
}

void trim(std::vector<std::vector<VertexId>>& cells) {
  while (!cells.empty() && cells.back().empty()) cells.pop_back();
}

std::string shape_of(std::size_t level, bool staged) {
  return "level " + std::to_string(level) + (staged ? " (staged)" : "");
}

void require_same_shape(const Complex& c, const Complex& d, const char* op) {
  if (c.level() != d.level() || c.staged() != d.staged())
    throw PreconditionError(std::string(op) + ": mismatched shapes " + shape_of(c.level(), c.staged()) +
                            " vs " + shape_of(d.level(), d.staged()));
}

bool is_ordered(const Complex& c) {
  for (int d = 1; d <= c.dim(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) {
      auto s = c.simplex(d, i);
      for (std::size_t k = 0; k + 1 < s.size(); ++k)
        if (!precedes(c.vertex(s[k]), c.vertex(s[k + 1]))) return false;
    }
  return true;
}

// Keeps the simplices whose vertices are all flagged; vertex order is
// preserved, so records stay sorted after renumbering.
Complex filter_vertices(const Complex& c, const std::vector<char>& keep) {
  std::vector<VertexId> remap(c.num_vertices(), 0);
  std::vector<CoordVertex> vertices;
  std::vector<std::vector<VertexId>> cells(std::max(c.dim() + 1, 0));
  std::vector<char> used(c.num_vertices(), 0);
  for (int d = 0; d <= c.dim(); ++d) {
    auto flat = c.cells(d);
    const std::size_t stride = d + 1;
    for (std::size_t i = 0; i < c.count(d); ++i) {
      bool ok = true;
      for (std::size_t k = 0; k < stride && ok; ++k) ok = keep[flat[i * stride + k]];
      if (!ok) continue;
      for (std::size_t k = 0; k < stride; ++k) used[flat[i * stride + k]] = 1;
      cells[d].insert(cells[d].end(), flat.begin() + i * stride, flat.begin() + (i + 1) * stride);
    }
  }
  for (VertexId v = 0; v < c.num_vertices(); ++v)
    if (used[v]) {
      remap[v] = static_cast<VertexId>(vertices.size());
      vertices.push_back(c.vertex(v));
    }
  for (auto& flat : cells)
    for (auto& id : flat) id = remap[id];
  trim(cells);
  return Complex::from_canonical(c.universe(), c.level(), c.staged(), std::move(vertices), std::move(cells));
}

// Maps every vertex through `f` without changing the relative order of
// vertices; the records are reused verbatim.
Complex relabel_monotone(const Complex& c, std::size_t level, bool staged,
                         const std::function<void(CoordVertex&)>& f) {
  std::vector<CoordVertex> vertices = c.vertices();
  for (auto& v : vertices) f(v);
  std::vector<std::vector<VertexId>> cells;
  for (int d = 0; d <= c.dim(); ++d) cells.emplace_back(c.cells(d).begin(), c.cells(d).end());
  return Complex::from_canonical(c.universe(), level, staged, std::move(vertices), std::move(cells));
}

}  // namespace

// ---------------------------------------------------------------------------
// Universe

Universe::Universe(std::vector<std::string> labels) {
  auto index = std::make_shared<std::unordered_map<std::string, std::uint32_t>>();
  for (std::uint32_t i = 0; i < labels.size(); ++i) {
    if (!index->emplace(labels[i], i).second) throw InputError("duplicate vertex label '" + labels[i] + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  index_ = std::move(index);
}

Universe Universe::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return Universe(std::move(labels));
}

std::optional<std::uint32_t> Universe::index_of(std::string_view label) const {
  if (!index_) return std::nullopt;
  auto it = index_->find(std::string(label));
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Complex

Complex Complex::from_canonical(Universe universe, std::size_t level, bool staged,
                                std::vector<CoordVertex> vertices,
                                std::vector<std::vector<VertexId>> cells) {
  Complex c(std::move(universe), level, staged);
  c.vertices_ = std::move(vertices);
  c.cells_ = std::move(cells);
  return c;
}

std::optional<VertexId> Complex::find_vertex(const CoordVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::size_t Complex::size() const {
  std::size_t total = 0;
  for (int d = 0; d <= dim(); ++d) total += count(d);
  return total;
}

std::optional<std::size_t> Complex::index_of(std::span<const VertexId> ids) const {
  if (ids.empty()) return std::nullopt;
  const int d = static_cast<int>(ids.size()) - 1;
  if (d > dim()) return std::nullopt;
  const std::size_t stride = d + 1;
  const VertexId* base = cells_[d].data();
  std::size_t lo = 0, hi = count(d);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (std::lexicographical_compare(base + mid * stride, base + (mid + 1) * stride, ids.begin(), ids.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(d) && std::equal(ids.begin(), ids.end(), base + lo * stride)) return lo;
  return std::nullopt;
}

bool Complex::contains_vertices(std::span<const CoordVertex> vs) const {
  std::vector<VertexId> ids;
  ids.reserve(vs.size());
  for (const auto& v : vs) {
    auto id = find_vertex(v);
    if (!id) return false;
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  return contains(ids);
}

std::vector<CoordVertex> Complex::simplex_vertices(int d, std::size_t i) const {
  std::vector<CoordVertex> out;
  for (VertexId id : simplex(d, i)) out.push_back(vertices_[id]);
  return out;
}

std::vector<std::pair<int, std::size_t>> Complex::maximal_simplices() const {
  std::vector<std::vector<char>> covered(cells_.size());
  for (int d = 0; d <= dim(); ++d) covered[d].assign(count(d), 0);
  std::vector<VertexId> facet;
  for (int d = 1; d <= dim(); ++d) {
    for (std::size_t i = 0; i < count(d); ++i) {
      auto s = simplex(d, i);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        facet.clear();
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != skip) facet.push_back(s[k]);
        if (auto idx = index_of(facet)) covered[d - 1][*idx] = 1;
      }
    }
  }
  std::vector<std::pair<int, std::size_t>> out;
  for (int d = dim(); d >= 0; --d)
    for (std::size_t i = 0; i < count(d); ++i)
      if (!covered[d][i]) out.emplace_back(d, i);
  return out;
}

bool operator==(const Complex& a, const Complex& b) {
  return a.level_ == b.level_ && a.staged_ == b.staged_ && a.universe_ == b.universe_ &&
         a.vertices_ == b.vertices_ && a.cells_ == b.cells_;
}

// ---------------------------------------------------------------------------
// ComplexBuilder

ComplexBuilder::ComplexBuilder(Universe universe, std::size_t level, bool staged)
    : universe_(std::move(universe)), level_(level), staged_(staged) {}

void ComplexBuilder::check_shape(const CoordVertex& v) const {
  if (v.coords.size() != level_ || v.stage.has_value() != staged_)
    throw PreconditionError("vertex " + to_string(v) + " does not have shape " + shape_of(level_, staged_));
  if (v.base >= universe_.size())
    throw InputError("vertex " + to_string(v) + " has base outside the universe");
}

VertexId ComplexBuilder::vertex(const CoordVertex& v) {
  auto it = ids_.find(v);
  if (it != ids_.end()) return it->second;
  check_shape(v);
  const auto id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(v);
  ids_.emplace(v, id);
  return id;
}

void ComplexBuilder::add_simplex(std::span<const VertexId> ids) {
  if (ids.empty()) throw InputError("empty simplex");
  scratch_.assign(ids.begin(), ids.end());
  std::sort(scratch_.begin(), scratch_.end());
  if (std::adjacent_find(scratch_.begin(), scratch_.end()) != scratch_.end())
    throw InputError("simplex repeats a vertex");
  const std::size_t d = ids.size() - 1;
  if (cells_.size() <= d) cells_.resize(d + 1);
  cells_[d].insert(cells_[d].end(), scratch_.begin(), scratch_.end());
}

void ComplexBuilder::add_with_faces(std::span<const VertexId> ids) {
  if (ids.empty()) throw InputError("empty simplex");
  if (ids.size() > 20) throw PreconditionError("simplex too large to enumerate faces");
  std::vector<VertexId> s(ids.begin(), ids.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("simplex repeats a vertex");
  const std::size_t k = s.size();
  if (cells_.size() < k) cells_.resize(k);
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const int bits = __builtin_popcount(mask);
    auto& flat = cells_[bits - 1];
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) flat.push_back(s[j]);
  }
}

void ComplexBuilder::add_complex(const Complex& c) {
  if (c.empty()) return;
  if (c.level() != level_ || c.staged() != staged_)
    throw PreconditionError("add_complex: mismatched shapes " + shape_of(c.level(), c.staged()) + " vs " +
                            shape_of(level_, staged_));
  std::vector<VertexId> local(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) local[v] = vertex(c.vertex(v));
  if (cells_.size() < static_cast<std::size_t>(c.dim() + 1)) cells_.resize(c.dim() + 1);
  for (int d = 0; d <= c.dim(); ++d) {
    auto& flat = cells_[d];
    for (VertexId id : c.cells(d)) flat.push_back(local[id]);
  }
}

Complex ComplexBuilder::build() && {
  std::vector<char> used(vertices_.size(), 0);
  for (const auto& flat : cells_)
    for (VertexId id : flat) used[id] = 1;
  std::vector<VertexId> order;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (used[v]) order.push_back(v);
  std::sort(order.begin(), order.end(), [this](VertexId a, VertexId b) { return vertices_[a] < vertices_[b]; });
  std::vector<VertexId> remap(vertices_.size(), 0);
  std::vector<CoordVertex> sorted;
  sorted.reserve(order.size());
  for (VertexId v : order) {
    remap[v] = static_cast<VertexId>(sorted.size());
    sorted.push_back(std::move(vertices_[v]));
  }
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    auto& flat = cells_[d];
    const std::size_t stride = d + 1;
    for (auto& id : flat) id = remap[id];
    for (std::size_t i = 0; i < flat.size(); i += stride) std::sort(flat.begin() + i, flat.begin() + i + stride);
    sort_unique_records(flat, stride);
  }
  trim(cells_);
  return Complex::from_canonical(std::move(universe_), level_, staged_, std::move(sorted), std::move(cells_));
}

// ---------------------------------------------------------------------------
// Operations

Complex closure(const std::vector<std::vector<std::string>>& maximal, const Universe& universe) {
  std::vector<std::vector<std::uint32_t>> indexed;
  indexed.reserve(maximal.size());
  for (const auto& s : maximal) {
    auto& out = indexed.emplace_back();
    for (const auto& label : s) {
      auto idx = universe.index_of(label);
      if (!idx) throw InputError("unknown vertex label '" + label + "'");
      out.push_back(*idx);
    }
  }
  return closure(indexed, universe);
}

Complex closure(const std::vector<std::vector<std::uint32_t>>& maximal, const Universe& universe) {
  ComplexBuilder b(universe, 0);
  std::vector<VertexId> ids;
  for (const auto& s : maximal) {
    if (s.empty()) throw InputError("empty simplex");
    ids.clear();
    for (auto x : s) {
      if (x >= universe.size()) throw InputError("vertex index " + std::to_string(x) + " out of range");
      ids.push_back(b.vertex(CoordVertex(x)));
    }
    b.add_with_faces(ids);
  }
  return std::move(b).build();
}

ValidationReport validate(const Complex& c, bool ordered) {
  ValidationReport r;
  auto note = [&r](std::string msg) {
    ++r.violation_count;
    if (r.violations.size() < 16) r.violations.push_back(std::move(msg));
  };
  std::vector<char> singleton(c.num_vertices(), 0);
  for (VertexId v : c.cells(0)) singleton[v] = 1;
  for (VertexId v = 0; v < c.num_vertices(); ++v)
    if (!singleton[v]) {
      r.singletons = false;
      note("missing singleton " + to_string(c.vertex(v)));
    }
  std::vector<VertexId> facet;
  for (int d = 1; d <= c.dim(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) {
      auto s = c.simplex(d, i);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        facet.clear();
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != skip) facet.push_back(s[k]);
        if (facet.size() > 1 && !c.contains(facet)) {
          r.closed = false;
          note("face of " + describe_simplex(c, d, i) + " missing");
        }
      }
      if (ordered)
        for (std::size_t k = 0; k + 1 < s.size(); ++k)
          if (!precedes(c.vertex(s[k]), c.vertex(s[k + 1]))) {
            r.chains = false;
            note("simplex " + describe_simplex(c, d, i) + " is not a chain");
            break;
          }
    }
  return r;
}

Complex skeleton(const Complex& c, int n) {
  if (n < 0) return Complex(c.universe(), c.level(), c.staged());
  if (n >= c.dim()) return c;
  std::vector<std::vector<VertexId>> cells;
  for (int d = 0; d <= n; ++d) cells.emplace_back(c.cells(d).begin(), c.cells(d).end());
  std::vector<char> keep(c.num_vertices(), 1);
  return filter_vertices(
      Complex::from_canonical(c.universe(), c.level(), c.staged(), c.vertices(), std::move(cells)), keep);
}

Complex induced_subcomplex(const Complex& c, std::span<const CoordVertex> vertices) {
  std::vector<char> keep(c.num_vertices(), 0);
  for (const auto& v : vertices)
    if (auto id = c.find_vertex(v)) keep[*id] = 1;
  return filter_vertices(c, keep);
}

Complex induced_on_bases(const Complex& c, std::span<const std::uint32_t> bases) {
  std::vector<char> keep(c.num_vertices(), 0);
  for (VertexId v = 0; v < c.num_vertices(); ++v)
    keep[v] = std::find(bases.begin(), bases.end(), c.vertex(v).base) != bases.end();
  return filter_vertices(c, keep);
}

Complex induced_by(const Complex& c, const std::function<bool(const CoordVertex&)>& pred) {
  std::vector<char> keep(c.num_vertices(), 0);
  for (VertexId v = 0; v < c.num_vertices(); ++v) keep[v] = pred(c.vertex(v));
  return filter_vertices(c, keep);
}

Complex image_complex(const Complex& c, const std::function<CoordVertex(const CoordVertex&)>& f,
                      std::size_t level, bool staged) {
  ComplexBuilder b(c.universe(), level, staged);
  std::vector<VertexId> local(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) local[v] = b.vertex(f(c.vertex(v)));
  std::vector<VertexId> img;
  for (int d = 0; d <= c.dim(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) {
      img.clear();
      for (VertexId v : c.simplex(d, i)) img.push_back(local[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      b.add_simplex(img);
    }
  return std::move(b).build();
}

Complex drop_last(const Complex& c, std::size_t i) {
  if (i > c.level()) throw PreconditionError("drop_last: cannot drop more coordinates than the level");
  const std::size_t keep = c.level() - i;
  return image_complex(
      c,
      [keep](const CoordVertex& v) {
        CoordVertex w(v.base, Coords(v.coords.begin(), v.coords.begin() + keep), v.stage);
        return w;
      },
      keep, c.staged());
}

namespace {

// Visits every monotone lattice path through a (p+1) x (q+1) grid, passing
// the visited (i, j) cells.
void for_each_staircase(std::size_t p, std::size_t q,
                        const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> path{{0, 0}};
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    if (i == p && j == q) {
      visit(path);
      return;
    }
    if (i < p) {
      path.emplace_back(i + 1, j);
      walk(i + 1, j);
      path.pop_back();
    }
    if (j < q) {
      path.emplace_back(i, j + 1);
      walk(i, j + 1);
      path.pop_back();
    }
  };
  walk(0, 0);
}

}  // namespace

Complex product(const Complex& c, const Complex& d) {
  if (c.staged() || d.staged()) throw PreconditionError("product: staged complexes are not supported");
  if (!is_ordered(c) || !is_ordered(d)) throw PreconditionError("product: factors must be ordered complexes");
  const std::size_t level = c.level() + 1 + d.level();
  ComplexBuilder b(c.universe(), level);
  if (c.empty() || d.empty()) return std::move(b).build();
  auto combine = [](const CoordVertex& v, const CoordVertex& w) {
    CoordVertex out(v.base, v.coords);
    out.coords.push_back(w.base);
    out.coords.insert(out.coords.end(), w.coords.begin(), w.coords.end());
    return out;
  };
  auto cmax = c.maximal_simplices();
  auto dmax = d.maximal_simplices();
  std::vector<VertexId> chain;
  for (auto [cd, ci] : cmax) {
    auto s = c.simplex(cd, ci);
    for (auto [dd, di] : dmax) {
      auto t = d.simplex(dd, di);
      for_each_staircase(s.size() - 1, t.size() - 1, [&](const auto& path) {
        chain.clear();
        for (auto [i, j] : path) chain.push_back(b.vertex(combine(c.vertex(s[i]), d.vertex(t[j]))));
        b.add_with_faces(chain);
      });
    }
  }
  return std::move(b).build();
}

Complex product_with_segment(const Complex& c, Coord lo, Coord hi) {
  if (lo > hi) throw PreconditionError("product_with_segment: empty segment");
  if (lo == hi) return append_coordinate(c, lo);
  ComplexBuilder b(c.universe(), c.level() + 1, c.staged());
  if (c.empty()) return std::move(b).build();
  const std::size_t span = hi - lo + 1;
  std::vector<VertexId> ids(c.num_vertices() * span, VertexId(-1));
  auto id_of = [&](VertexId v, Coord i) {
    auto& slot = ids[v * span + (i - lo)];
    if (slot == VertexId(-1)) {
      CoordVertex w = c.vertex(v);
      w.coords.push_back(i);
      slot = b.vertex(w);
    }
    return slot;
  };
  std::vector<VertexId> chain;
  for (auto [d, idx] : c.maximal_simplices()) {
    auto s = c.simplex(d, idx);
    for (Coord i = lo; i < hi; ++i)
      for (std::size_t turn = 0; turn < s.size(); ++turn) {
        chain.clear();
        for (std::size_t k = 0; k <= turn; ++k) chain.push_back(id_of(s[k], i));
        for (std::size_t k = turn; k < s.size(); ++k) chain.push_back(id_of(s[k], i + 1));
        b.add_with_faces(chain);
      }
  }
  return std::move(b).build();
}

Complex append_coordinate(const Complex& c, Coord value) {
  return relabel_monotone(c, c.level() + 1, c.staged(), [value](CoordVertex& v) { v.coords.push_back(value); });
}

Complex pad_coordinates(const Complex& c, std::size_t level) {
  if (level < c.level()) throw PreconditionError("pad_coordinates: target level below current level");
  return relabel_monotone(c, level, c.staged(), [level](CoordVertex& v) { v.coords.resize(level, 0); });
}

Complex ray_segment(Coord a, Coord b) {
  if (a > b) throw PreconditionError("ray_segment: a > b");
  ComplexBuilder builder(Universe::numbered(b + 1), 0);
  VertexId prev = builder.vertex(CoordVertex(a));
  builder.add_simplex(std::span(&prev, 1));
  for (Coord i = a + 1; i <= b; ++i) {
    VertexId cur = builder.vertex(CoordVertex(i));
    std::array<VertexId, 2> edge{prev, cur};
    builder.add_with_faces(edge);
    prev = cur;
  }
  return std::move(builder).build();
}

Complex unite(const Complex& c, const Complex& d) {
  require_same_shape(c, d, "unite");
  if (d.empty()) return c;
  if (c.empty()) return d;
  ComplexBuilder b(c.universe(), c.level(), c.staged());
  b.add_complex(c);
  b.add_complex(d);
  return std::move(b).build();
}

Complex intersect(const Complex& c, const Complex& d) {
  require_same_shape(c, d, "intersect");
  ComplexBuilder b(c.universe(), c.level(), c.staged());
  std::vector<std::optional<VertexId>> in_d(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) in_d[v] = d.find_vertex(c.vertex(v));
  std::vector<VertexId> mapped, local;
  for (int k = 0; k <= c.dim(); ++k)
    for (std::size_t i = 0; i < c.count(k); ++i) {
      auto s = c.simplex(k, i);
      mapped.clear();
      bool ok = true;
      for (VertexId v : s) {
        if (!in_d[v]) {
          ok = false;
          break;
        }
        mapped.push_back(*in_d[v]);
      }
      if (!ok || !d.contains(mapped)) continue;
      local.clear();
      for (VertexId v : s) local.push_back(b.vertex(c.vertex(v)));
      b.add_simplex(local);
    }
  return std::move(b).build();
}

bool is_subcomplex(const Complex& sub, const Complex& c) {
  if (sub.empty()) return true;
  if (sub.level() != c.level() || sub.staged() != c.staged()) return false;
  std::vector<std::optional<VertexId>> in_c(sub.num_vertices());
  for (VertexId v = 0; v < sub.num_vertices(); ++v) {
    in_c[v] = c.find_vertex(sub.vertex(v));
    if (!in_c[v]) return false;
  }
  std::vector<VertexId> mapped;
  for (int k = 0; k <= sub.dim(); ++k)
    for (std::size_t i = 0; i < sub.count(k); ++i) {
      mapped.clear();
      for (VertexId v : sub.simplex(k, i)) mapped.push_back(*in_c[v]);
      if (!c.contains(mapped)) return false;
    }
  return true;
}

std::vector<std::size_t> edge_degrees(const Complex& c) {
  std::vector<std::size_t> deg(c.num_vertices(), 0);
  for (VertexId v : c.cells(1)) ++deg[v];
  return deg;
}

std::size_t edge_degree(const Complex& c, const CoordVertex& v) {
  auto id = c.find_vertex(v);
  if (!id) throw PreconditionError("edge_degree: " + to_string(v) + " is not a vertex");
  std::size_t n = 0;
  for (VertexId w : c.cells(1)) n += (w == *id);
  return n;
}

long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  for (int d = 0; d <= c.dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.count(d));
  return chi;
}

std::string describe_simplex(const Complex& c, int d, std::size_t i) {
  std::string out = "{";
  bool first = true;
  for (VertexId id : c.simplex(d, i)) {
    if (!first) out += ", ";
    first = false;
    const auto& v = c.vertex(id);
    std::string label = v.base < c.universe().size() ? c.universe().label(v.base) : std::to_string(v.base);
    if (v.coords.empty() && !v.stage) {
      out += label;
      continue;
    }
    out += "(" + label;
    for (std::size_t k = 0; k < v.coords.size(); ++k) out += (k == 0 ? ";" : ",") + std::to_string(v.coords[k]);
    if (v.stage) out += "|" + std::to_string(*v.stage);
    out += ")";
  }
  return out + "}";
}

}  // namespace lfc
