// Wall self-intersection calculus.
//
// mu(S) lives in the quotient of Z[t, t^-1] (as an abelian group) by t^r ~ t^-r,
// which is free on the classes [t^r], r >= 0. The self-intersection pairing is
// lambda(S, S) = mu(S) + conj(mu(S)) + e(S).

#ifndef LCERT_WALLCALC_HPP
#define LCERT_WALLCALC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcert/laurent.hpp"

namespace lcert {

class WallClass {
 public:
  WallClass() = default;
  WallClass(std::initializer_list<std::pair<Exponent, long>> classes);

  /// Coefficient of [t^r] for r >= 0.
  const std::map<Exponent, Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_class(Exponent r, const Integer& c);

  WallClass& operator+=(const WallClass& w);
  friend WallClass operator+(WallClass a, const WallClass& b) { return a += b; }
  friend WallClass operator*(const Integer& c, const WallClass& w);
  friend bool operator==(const WallClass&, const WallClass&) = default;

 private:
  std::map<Exponent, Integer> coeffs_;
};

enum class EventKind { GenericDoublePoint, TorusPiercing, DiscSelfIntersection };

const char* to_string(EventKind kind);
/// Throws std::invalid_argument for unknown names.
EventKind parse_event_kind(const std::string& name);

struct IntersectionEvent {
  EventKind kind = EventKind::GenericDoublePoint;
  int sign = 1;
  Exponent k = 0;

  friend bool operator==(const IntersectionEvent&, const IntersectionEvent&) = default;
};

struct SurfaceModel {
  std::string label;
  std::vector<IntersectionEvent> events;
  Integer euler = 0;
};

WallClass project(const LaurentPoly& p);

/// Lifts w to sum a_r t^r (r >= 0) and adds the conjugate.
LaurentPoly hermitize(const WallClass& w);

/// The net contribution a single event makes to mu, as an element of Z[t, t^-1].
LaurentPoly event_contribution(const IntersectionEvent& e);

WallClass mu(const SurfaceModel& s);

LaurentPoly lambda_self(const SurfaceModel& s);

/// Finds c with lambda_self(S) = c (1 - t) + conj(c) (1 - t^-1). Requires
/// euler = 0 and no GenericDoublePoint events; throws std::invalid_argument
/// otherwise.
LaurentPoly pairing_shape_check(const SurfaceModel& s);

/// True when pairing_shape_check's precondition holds.
bool pairing_shape_applicable(const SurfaceModel& s);

/// Applies the event permutation `perm` (events[i] -> position perm[i]) and
/// reports whether mu and lambda_self are unchanged. Throws
/// std::invalid_argument unless perm is a permutation of the right size.
bool relabel_invariance(const SurfaceModel& s, const std::vector<std::size_t>& perm);

}  // namespace lcert

#endif  // LCERT_WALLCALC_HPP
