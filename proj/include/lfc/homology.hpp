#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfc/chain_complex.hpp"
#include "lfc/complex.hpp"
#include "lfc/execution.hpp"
#include "lfc/simplicial_map.hpp"
#include "lfc/smith.hpp"

namespace lfc {

using Rational = boost::multiprecision::cpp_rational;

struct Coefficients {
  enum class Kind { integers, rationals, prime };
  Kind kind = Kind::integers;
  std::uint32_t p = 0;

  static Coefficients integers() { return {}; }
  static Coefficients rationals() { return {Kind::rationals, 0}; }
  /// Z/p; throws PreconditionError unless p is prime.
  static Coefficients mod(std::uint32_t p);
  /// "Z", "Q" or "Z/p"; parse() accepts the same spellings.
  std::string name() const;
  static Coefficients parse(const std::string& text);
  bool is_field() const { return kind != Kind::integers; }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

struct HomologyGroups {
  Coefficients coefficients;
  bool reduced = false;
  int bottom = 0;                           // degree of betti[0]
  std::vector<std::size_t> betti;           // free rank (dimension over a field)
  std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1, integers only

  std::size_t rank(int degree) const;
  bool vanishes() const;
  std::string to_string() const;
  friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;
};

/// Same groups in every degree, where degrees outside either range count as
/// zero. Unlike ==, ignores how far each side's degree range extends.
bool isomorphic(const HomologyGroups& a, const HomologyGroups& b);

/// Homology of a chain complex. Sparse elimination removes pairs of cells
/// joined by an invertible coefficient; over Z what is left goes through
/// Smith normal form.
HomologyGroups homology(const ChainComplex& c, Coefficients coefficients = Coefficients::integers());

/// Simplicial homology, reduced or not. Degrees run from 0 to dim(c) (from -1
/// when reduced, so the empty complex reports H~_{-1} = Z).
HomologyGroups homology(const Complex& c, bool reduced = false,
                        Coefficients coefficients = Coefficients::integers(),
                        Execution execution = Execution::parallel);

/// Reduced integral homology vanishes. Throws PreconditionError on the empty complex.
bool is_acyclic(const Complex& c, Execution execution = Execution::parallel);

/// Matrix of H_d(f) in chosen homology bases, rows for the target.
using FieldMatrix = std::vector<std::vector<Rational>>;

struct InducedDegree {
  int degree = 0;
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::size_t rank = 0;  // rank of H_d(f)
  std::optional<FieldMatrix> matrix;

  bool isomorphism() const { return source_rank == target_rank && rank == source_rank; }
};

struct InducedMapReport {
  Coefficients coefficients;
  std::vector<InducedDegree> degrees;
  bool cone_acyclic = false;  // the mapping cone has zero homology
  bool matrices_checked = false;  // explicit matrices were computed and agreed on ranks

  bool isomorphism() const;
};

/// H_*(f) with field coefficients. Ranks come from the mapping cone; when
/// both complexes have at most `dense_limit` simplices the matrices are also
/// computed explicitly and their ranks cross-checked (std::logic_error on
/// disagreement). Throws PreconditionError for integer coefficients.
InducedMapReport induced_map_homology(const SimplicialMap& f, Coefficients field,
                                      Execution execution = Execution::parallel,
                                      std::size_t dense_limit = 1500);

}  // namespace lfc
