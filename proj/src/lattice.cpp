#include "lfc/detail/lattice.hpp"

#include <algorithm>
#include <exception>

#include "lfc/errors.hpp"

namespace lfc::detail {

FaceLattice::FaceLattice(const Complex& c) {
  std::size_t total = 0;
  for (int d = 0; d <= c.dim(); ++d) {
    offset_.push_back(total);
    total += c.count(d);
  }
  offset_.push_back(total);
  dim_of_.resize(total);
  facet_start_.assign(total + 1, 0);
  for (int d = 0; d <= c.dim(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) {
      dim_of_[offset_[d] + i] = static_cast<std::int8_t>(d);
      facet_start_[offset_[d] + i + 1] = d == 0 ? 0 : static_cast<std::size_t>(d + 1);
    }
  for (std::size_t k = 0; k < total; ++k) facet_start_[k + 1] += facet_start_[k];
  facets_.resize(facet_start_[total]);

  std::exception_ptr failure;
  for (int d = 1; d <= c.dim(); ++d) {
    const auto n = static_cast<std::ptrdiff_t>(c.count(d));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      std::vector<VertexId> face(d);
      auto s = c.simplex(d, static_cast<std::size_t>(i));
      std::uint32_t* out = facets_.data() + facet_start_[offset_[d] + i];
      for (int k = 0; k <= d; ++k) {
        std::copy(s.begin(), s.begin() + k, face.begin());
        std::copy(s.begin() + k + 1, s.end(), face.begin() + k);
        auto idx = c.index_of(face);
        if (!idx) {
#pragma omp critical(lfc_lattice)
          if (!failure) failure = std::make_exception_ptr(PreconditionError("complex is not closed under faces"));
          break;
        }
        out[k] = static_cast<std::uint32_t>(offset_[d - 1] + *idx);
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  coface_start_.assign(total + 1, 0);
  for (auto f : facets_) ++coface_start_[f + 1];
  for (std::size_t k = 0; k < total; ++k) coface_start_[k + 1] += coface_start_[k];
  cofaces_.resize(facets_.size());
  std::vector<std::size_t> fill(coface_start_.begin(), coface_start_.end() - 1);
  for (std::uint32_t id = 0; id < total; ++id)
    for (auto f : facets(id)) cofaces_[fill[f]++] = id;
}

namespace {

// Position of each member, -1 elsewhere.
std::vector<std::int32_t> local_index(const FaceLattice& lat, std::span<const std::uint32_t> members) {
  std::vector<std::int32_t> index(lat.size(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = static_cast<std::int32_t>(k);
  return index;
}

std::size_t attempt(const FaceLattice& lat, std::span<const std::uint32_t> members, const std::vector<char>& protect,
                    std::size_t keep, std::mt19937_64* rng) {
  const std::size_t n = members.size();
  const std::vector<std::int32_t> index = local_index(lat, members);
  auto local = [&](std::uint32_t id) -> std::int64_t { return index[id]; };
  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> live_cofaces(n, 0);
  std::vector<std::uint32_t> pool;
  for (std::size_t k = 0; k < n; ++k) {
    for (auto c : lat.cofaces(members[k]))
      if (local(c) >= 0) ++live_cofaces[k];
    if (live_cofaces[k] == 1 && (protect.empty() || !protect[k])) pool.push_back(static_cast<std::uint32_t>(k));
  }
  auto is_protected = [&](std::size_t k) { return !protect.empty() && protect[k]; };
  std::size_t remaining = n, head = 0;
  while (remaining > keep) {
    std::uint32_t sigma;
    if (rng) {
      if (pool.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const std::size_t at = pick(*rng);
      sigma = pool[at];
      pool[at] = pool.back();
      pool.pop_back();
    } else {
      if (head == pool.size()) break;
      sigma = pool[head++];
    }
    if (!alive[sigma] || live_cofaces[sigma] != 1) continue;
    std::int64_t tau = -1;
    for (auto c : lat.cofaces(members[sigma])) {
      auto l = local(c);
      if (l >= 0 && alive[l]) tau = l;
    }
    alive[sigma] = alive[tau] = 0;
    remaining -= 2;
    for (std::uint32_t x : {members[tau], members[sigma]})
      for (auto f : lat.facets(x)) {
        auto l = local(f);
        if (alive[l] && --live_cofaces[l] == 1 && !is_protected(l)) pool.push_back(static_cast<std::uint32_t>(l));
      }
  }
  return remaining;
}

}  // namespace

CollapseResult collapse_members(const FaceLattice& lat, std::span<const std::uint32_t> members,
                                const std::vector<char>& protect, std::size_t keep, const CollapseOptions& options) {
  CollapseResult result;
  result.seed = options.seed;
  result.remaining = members.size();
  const std::size_t tries = std::max<std::size_t>(options.restarts, 1);
  for (std::size_t k = 0; k < tries; ++k) {
    std::mt19937_64 rng(options.seed + k);
    const std::size_t left = attempt(lat, members, protect, keep, k == 0 ? nullptr : &rng);
    result.attempts = k + 1;
    result.remaining = std::min(result.remaining, left);
    if (left == keep) {
      result.collapsed = true;
      break;
    }
  }
  return result;
}

ChainComplex member_chain_complex(const FaceLattice& lat, std::span<const std::uint32_t> members, bool reduced) {
  ChainComplex cc;
  cc.bottom = reduced ? -1 : 0;
  if (reduced) {
    cc.sizes.push_back(1);
    cc.boundary.emplace_back();
  }
  // Position of each member within its dimension.
  std::vector<std::uint32_t> position(members.size());
  std::vector<std::size_t> per_dim;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto d = static_cast<std::size_t>(lat.dim(members[k]));
    if (per_dim.size() <= d) per_dim.resize(d + 1, 0);
    position[k] = static_cast<std::uint32_t>(per_dim[d]++);
  }
  const std::vector<std::int32_t> index = local_index(lat, members);
  const std::size_t first = cc.sizes.size();
  for (std::size_t d = 0; d < per_dim.size(); ++d) {
    cc.sizes.push_back(per_dim[d]);
    cc.boundary.emplace_back(per_dim[d]);
  }
  for (std::size_t k = 0; k < members.size(); ++k) {
    const int d = lat.dim(members[k]);
    auto& col = cc.boundary[first + d][position[k]];
    if (d == 0) {
      if (reduced) col = {{0, 1}};
      continue;
    }
    auto facets = lat.facets(members[k]);
    col.reserve(facets.size());
    for (std::size_t j = 0; j < facets.size(); ++j) {
      const std::int32_t at = index[facets[j]];
      if (at < 0) throw PreconditionError("member set is not closed under faces");
      col.emplace_back(position[at], j % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  if (!reduced && !cc.boundary.empty()) cc.boundary[0].clear();
  return cc;
}

}  // namespace lfc::detail
