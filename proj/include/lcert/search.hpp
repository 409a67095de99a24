// Bounded search for congruences P A P* = target built from elementary moves.
//
// Moves act on a form by P A P* where P is the move's matrix:
//   Transvection(i, j, p)  P = I + p E_ij      (row i += p row j, then the
//                                                conjugate column operation)
//   UnitScale(i, s, k)     P = diag(.., s t^k at i, ..)
//   Swap(i, j)             P = permutation swapping i and j
// Indices are 0-based. Every move matrix has determinant +-t^k.

#ifndef LCERT_SEARCH_HPP
#define LCERT_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcert/forms.hpp"
#include "lcert/laurent.hpp"
#include "lcert/matrix.hpp"

namespace lcert {

enum class MoveKind { Transvection, UnitScale, Swap };

struct MoveSpec {
  MoveKind kind = MoveKind::Swap;
  std::size_t i = 0;
  std::size_t j = 0;
  LaurentPoly p;     // Transvection
  int sign = 1;      // UnitScale
  Exponent k = 0;    // UnitScale

  static MoveSpec transvection(std::size_t i, std::size_t j, LaurentPoly p);
  static MoveSpec unit_scale(std::size_t i, int sign, Exponent k);
  static MoveSpec swap(std::size_t i, std::size_t j);

  MoveSpec inverse() const;
  /// The n x n matrix P of this move. Throws std::invalid_argument if an
  /// index is out of range or i == j where distinct indices are required.
  PolyMatrix matrix(std::size_t n) const;
  std::string to_string() const;

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

struct SearchBounds {
  std::size_t max_depth = 2;
  /// Transvection polynomials have exponents in [-degree, degree] ...
  std::size_t degree = 1;
  /// ... and coefficients in [-coeff, coeff].
  std::size_t coeff = 1;
  /// UnitScale exponents lie in [-unit_exp, unit_exp].
  std::size_t unit_exp = 1;
};

enum class SearchStatus { Found, Exhausted, ObstructionMismatch };

const char* to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<MoveSpec> moves;
  std::optional<BaseChange> base_change;
  std::string reason;
  std::size_t states_visited = 0;
};

/// P A P* for the move's P, by direct row and column operations.
PolyMatrix apply_move(const PolyMatrix& a, const MoveSpec& m);

/// Applies moves in order.
PolyMatrix replay_moves(const PolyMatrix& a, const std::vector<MoveSpec>& moves);

/// P = P_k ... P_1 so that replay_moves(A, moves) = P A P*.
PolyMatrix compose_moves(std::size_t n, const std::vector<MoveSpec>& moves);

/// Nonzero polynomials inside the bounds, ordered simplest first.
std::vector<LaurentPoly> transvection_polynomials(const SearchBounds& bounds);

/// The full move alphabet for rank n, in the fixed expansion order.
std::vector<MoveSpec> enumerate_moves(std::size_t n, const SearchBounds& bounds);

/// Exact row-major encoding used to deduplicate search states.
std::string state_key(const PolyMatrix& m);

/// Reason string when det A is not associate to (1 - t)^g (1 - t^-1)^g.
std::optional<std::string> det_obstruction(const HermitianForm& a, std::size_t g);

/// Breadth-first search (run from both ends) for a move sequence of length
/// at most bounds.max_depth taking a to target. Throws std::invalid_argument
/// if the ranks differ.
SearchOutcome bounded_isometry_search(const HermitianForm& a, const HermitianForm& target,
                                      const SearchBounds& bounds);

/// a (+) H2^k.
HermitianForm stabilize(const HermitianForm& a, std::size_t k);

struct ProbeReport {
  std::size_t genus = 0;
  SearchOutcome stable;  // stabilize(a, 1) against H2^(g+1)
  SearchOutcome direct;  // a against H2^g
  /// Stable reduction found but direct search exhausted: worth deeper bounds.
  bool candidate = false;
};

/// Throws std::invalid_argument unless rank(a) is 2 or 4.
ProbeReport conjecture_probe(const HermitianForm& a, const SearchBounds& bounds);

}  // namespace lcert

#endif  // LCERT_SEARCH_HPP
