#include "lcert/wallcalc.hpp"

#include <stdexcept>

#include "lcert/forms.hpp"

namespace lcert {

WallClass::WallClass(std::initializer_list<std::pair<Exponent, long>> classes) {
  for (const auto& [r, c] : classes) add_class(r, Integer(c));
}

void WallClass::add_class(Exponent r, const Integer& c) {
  if (r < 0) r = -r;
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

WallClass& WallClass::operator+=(const WallClass& w) {
  for (const auto& [r, c] : w.coeffs_) add_class(r, c);
  return *this;
}

WallClass operator*(const Integer& c, const WallClass& w) {
  WallClass out;
  for (const auto& [r, a] : w.coeffs_) out.add_class(r, c * a);
  return out;
}

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::GenericDoublePoint:
      return "GenericDoublePoint";
    case EventKind::TorusPiercing:
      return "TorusPiercing";
    case EventKind::DiscSelfIntersection:
      return "DiscSelfIntersection";
  }
  return "?";
}

EventKind parse_event_kind(const std::string& name) {
  if (name == "GenericDoublePoint") return EventKind::GenericDoublePoint;
  if (name == "TorusPiercing") return EventKind::TorusPiercing;
  if (name == "DiscSelfIntersection") return EventKind::DiscSelfIntersection;
  throw std::invalid_argument("unknown event kind '" + name + "'");
}

WallClass project(const LaurentPoly& p) {
  WallClass w;
  for (const auto& t : p.terms()) w.add_class(t.exp, t.coeff);
  return w;
}

LaurentPoly hermitize(const WallClass& w) {
  std::vector<Term> terms;
  for (const auto& [r, a] : w.coefficients()) {
    if (r == 0) {
      terms.push_back({0, 2 * a});
    } else {
      terms.push_back({r, a});
      terms.push_back({-r, a});
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly event_contribution(const IntersectionEvent& e) {
  LaurentPoly base = LaurentPoly::monomial(e.sign, e.k);
  switch (e.kind) {
    case EventKind::GenericDoublePoint:
      return base;
    case EventKind::TorusPiercing:
      return base * one_minus_t();
    case EventKind::DiscSelfIntersection:
      return base * one_minus_t() * one_minus_tinv();
  }
  return base;
}

WallClass mu(const SurfaceModel& s) {
  WallClass w;
  for (const auto& e : s.events) w += project(event_contribution(e));
  return w;
}

LaurentPoly lambda_self(const SurfaceModel& s) { return hermitize(mu(s)) + iota(s.euler); }

bool pairing_shape_applicable(const SurfaceModel& s) {
  if (s.euler != 0) return false;
  for (const auto& e : s.events)
    if (e.kind == EventKind::GenericDoublePoint) return false;
  return true;
}

LaurentPoly pairing_shape_check(const SurfaceModel& s) {
  if (!pairing_shape_applicable(s))
    throw std::invalid_argument(
        "pairing_shape_check: needs euler number 0 and no generic double points");
  auto c = solve_hermitian_zero_aug(lambda_self(s));
  // Every allowed event contributes a multiple of 1 - t, so augment is zero.
  if (!c) throw std::logic_error("pairing_shape_check: nonzero augmentation");
  return *c;
}

bool relabel_invariance(const SurfaceModel& s, const std::vector<std::size_t>& perm) {
  if (perm.size() != s.events.size())
    throw std::invalid_argument("relabel_invariance: permutation has the wrong size");
  SurfaceModel t = s;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]])
      throw std::invalid_argument("relabel_invariance: not a permutation");
    seen[perm[i]] = true;
    t.events[perm[i]] = s.events[i];
  }
  return mu(t) == mu(s) && lambda_self(t) == lambda_self(s);
}

}  // namespace lcert
