// Chain complexes of free Z[t, t^-1]-modules: Betti numbers over the fraction
// field Q(t), torsion orders of square presentations, Euler characteristic.

#ifndef LCERT_HOMOLOGY_HPP
#define LCERT_HOMOLOGY_HPP

#include <cstddef>
#include <vector>

#include "lcert/laurent.hpp"
#include "lcert/matrix.hpp"

namespace lcert {

/// Element of the fraction field of Z[t, t^-1]. Only the monomial factor and
/// integer content are cancelled; equality is by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(iota(1)) {}
  RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(iota(1)) {}  // NOLINT
  /// Throws std::domain_error if den = 0.
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws std::domain_error on division by zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// d_i : C_i -> C_{i-1}, acting on column vectors, so d_i has rank(C_{i-1})
/// rows and rank(C_i) columns.
class ChainComplex {
 public:
  /// ranks[i] = rank of C_i; differentials[i-1] = d_i for i = 1..n. Throws
  /// std::invalid_argument on incompatible shapes or d_{i-1} d_i != 0.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials);

  std::size_t top_degree() const { return ranks_.size() - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// d_i for 1 <= i <= top_degree().
  const PolyMatrix& differential(std::size_t i) const { return diffs_.at(i - 1); }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> diffs_;
};

std::size_t rank_qt(const PolyMatrix& m);

/// Betti numbers over Q(t), indexed by degree 0..top_degree().
std::vector<std::size_t> betti_qt(const ChainComplex& c);

/// Canonical associate of det(M), the order of coker(M). Throws
/// std::invalid_argument unless M is square of full rank over Q(t).
LaurentPoly torsion_order(const PolyMatrix& m);

bool euler_check(const ChainComplex& c);

}  // namespace lcert

#endif  // LCERT_HOMOLOGY_HPP
