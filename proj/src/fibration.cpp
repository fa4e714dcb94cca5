#include "lfc/fibration.hpp"

#include <algorithm>
#include <exception>

#include "lfc/detail/groups.hpp"
#include "lfc/detail/lattice.hpp"
#include "lfc/homology.hpp"

namespace lfc {

std::string to_string(FiberStatus s) {
  switch (s) {
    case FiberStatus::collapsed: return "collapsed";
    case FiberStatus::acyclic_only: return "acyclic_only";
    case FiberStatus::failed: return "failed";
  }
  return "?";
}

std::size_t FiberReport::count(FiberStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(fibers.begin(), fibers.end(), [s](const FiberEntry& e) { return e.status == s; }));
}

std::vector<std::pair<int, std::size_t>> unhit_simplices(const SimplicialMap& f) {
  const Complex& src = f.source();
  const Complex& tgt = f.target();
  std::vector<std::vector<char>> hit(tgt.dim() + 1);
  for (int d = 0; d <= tgt.dim(); ++d) hit[d].assign(tgt.count(d), 0);
  for (int d = 0; d <= src.dim(); ++d)
    for (std::size_t i = 0; i < src.count(d); ++i) {
      auto img = f.image(src.simplex(d, i));
      const int e = static_cast<int>(img.size()) - 1;
      hit[e][*tgt.index_of(img)] = 1;
    }
  std::vector<std::pair<int, std::size_t>> out;
  for (int d = 0; d <= tgt.dim(); ++d)
    for (std::size_t i = 0; i < tgt.count(d); ++i)
      if (!hit[d][i]) out.emplace_back(d, i);
  return out;
}

bool surjective_on_simplices(const SimplicialMap& f) { return unhit_simplices(f).empty(); }

FiberReport check_pseudofibration(const SimplicialMap& f, const FiberOptions& options) {
  const Complex& tgt = f.target();
  FiberReport report;
  report.seed = options.seed;
  report.unhit = unhit_simplices(f);

  std::vector<std::pair<int, std::size_t>> targets;
  for (int d = 0; d <= tgt.dim(); ++d)
    for (std::size_t i = 0; i < tgt.count(d); ++i) targets.emplace_back(d, i);
  report.fibers.resize(targets.size());

  const detail::SimplexGroups groups(f.source(), f.vertex_map());
  const detail::FaceLattice lattice(f.source());
  auto examine = [&](std::size_t k) {
    auto [d, i] = targets[k];
    std::vector<std::uint32_t> fiber;
    for (auto [fd, fi] : groups.members(tgt.simplex(d, i))) fiber.push_back(lattice.id(fd, fi));
    FiberEntry& e = report.fibers[k];
    e.dim = d;
    e.index = i;
    e.simplices = fiber.size();
    e.vertices = static_cast<std::size_t>(
        std::count_if(fiber.begin(), fiber.end(), [&](std::uint32_t id) { return lattice.dim(id) == 0; }));
    if (fiber.empty()) {
      e.status = FiberStatus::failed;
      return;
    }
    e.acyclic = homology(detail::member_chain_complex(lattice, fiber, true)).vanishes();
    const auto collapse = detail::collapse_members(lattice, fiber, {}, 1, {options.restarts, options.seed + k});
    e.attempts = collapse.attempts;
    if (!e.acyclic)
      e.status = FiberStatus::failed;
    else
      e.status = collapse.collapsed ? FiberStatus::collapsed : FiberStatus::acyclic_only;
  };

  const auto n = static_cast<std::ptrdiff_t>(targets.size());
  if (options.execution == Execution::serial) {
    for (std::ptrdiff_t k = 0; k < n; ++k) examine(static_cast<std::size_t>(k));
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      try {
        examine(static_cast<std::size_t>(k));
      } catch (...) {
#pragma omp critical(lfc_fibration)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return report;
}

}  // namespace lfc
