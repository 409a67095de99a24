// Exact arithmetic in the Laurent polynomial ring Z[t, t^-1] with the
// involution t -> t^-1.
//
// A LaurentPoly is stored as a vector of (exponent, coefficient) terms
// sorted by strictly increasing exponent with no zero coefficients, so the
// zero polynomial is the empty vector and equality is plain term equality.

#ifndef LCERT_LAURENT_HPP
#define LCERT_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lcert {

using Integer = mpz_class;
using Exponent = std::int64_t;

struct Term {
  Exponent exp = 0;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

/// The unit sign * t^exponent of Z[t, t^-1].
struct UnitWitness {
  int sign = 1;
  Exponent exponent = 0;

  UnitWitness inverse() const { return {sign, -exponent}; }
  UnitWitness conjugate() const { return {sign, -exponent}; }

  friend UnitWitness operator*(const UnitWitness& a, const UnitWitness& b) {
    return {a.sign * b.sign, a.exponent + b.exponent};
  }
  friend bool operator==(const UnitWitness&, const UnitWitness&) = default;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
  LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent k);
  static LaurentPoly from_unit(const UnitWitness& u);
  /// Takes ownership of arbitrary terms, sorting, merging and pruning zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Lowest and highest exponent. Undefined on zero.
  Exponent min_exp() const { return terms_.front().exp; }
  Exponent max_exp() const { return terms_.back().exp; }

  Integer coeff(Exponent k) const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(LaurentPoly p);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplies by the monomial t^k.
  LaurentPoly shifted(Exponent k) const;
  /// Multiplies every coefficient by an integer.
  LaurentPoly scaled(const Integer& c) const;

  /// Human-readable form such as "2 - t - t^-1".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// The ring involution t -> t^-1.
LaurentPoly involve(const LaurentPoly& p);

/// Returns the witness iff p = +-t^k.
std::optional<UnitWitness> is_unit(const LaurentPoly& p);

struct Associate {
  LaurentPoly canonical;
  UnitWitness unit;
};

/// Splits p = unit * canonical where canonical has lowest exponent 0 and a
/// positive coefficient there. Zero maps to (0, +t^0).
Associate normalize_associate(const LaurentPoly& p);

/// Equality up to multiplication by a unit +-t^k.
bool assoc_eq(const LaurentPoly& p, const LaurentPoly& q);

/// Evaluation at t = 1.
Integer augment(const LaurentPoly& p);

/// The ring map Z -> Z[t, t^-1].
LaurentPoly iota(const Integer& n);

/// Returns r with p = q * r when it exists. Throws std::domain_error if q = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q);

/// p^n for n >= 0.
LaurentPoly power(const LaurentPoly& p, unsigned n);

/// Commonly used constants.
LaurentPoly one_minus_t();
LaurentPoly one_minus_tinv();

}  // namespace lcert

#endif  // LCERT_LAURENT_HPP
