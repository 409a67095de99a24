#include "lcert/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcert {

namespace {

void prune(std::vector<Term>& terms) {
  std::erase_if(terms, [](const Term& t) { return t.coeff == 0; });
}

// Merge-add of two sorted term lists, with sign applied to the second.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, negate_b ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [e, c] : terms) raw.push_back({e, Integer(c)});
  *this = from_terms(std::move(raw));
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent k) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({k, c});
  return p;
}

LaurentPoly LaurentPoly::from_unit(const UnitWitness& u) { return monomial(u.sign, u.exponent); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  prune(p.terms_);
  return p;
}

Integer LaurentPoly::coeff(Exponent k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Exponent e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == k) return it->coeff;
  return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  if (q.is_zero()) return *this;
  if (is_zero()) return *this = q;
  terms_ = merge(terms_, q.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  if (q.is_zero()) return *this;
  terms_ = merge(terms_, q.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) { return *this = *this * q; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (p.term_count() == 1) return q.scaled(p.terms_[0].coeff).shifted(p.terms_[0].exp);
  if (q.term_count() == 1) return p.scaled(q.terms_[0].coeff).shifted(q.terms_[0].exp);

  const Exponent lo = p.min_exp() + q.min_exp();
  const auto span = static_cast<std::size_t>(p.max_exp() + q.max_exp() - lo + 1);
  // Dense accumulation is fine while supports stay narrow; fall back to a
  // sort-merge when they do not.
  if (span <= 4 * (p.term_count() * q.term_count()) + 16) {
    std::vector<Integer> acc(span);
    for (const auto& a : p.terms_) {
      for (const auto& b : q.terms_) {
        mpz_addmul(acc[static_cast<std::size_t>(a.exp + b.exp - lo)].get_mpz_t(),
                   a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
      }
    }
    LaurentPoly r;
    for (std::size_t i = 0; i < span; ++i) {
      if (acc[i] != 0) r.terms_.push_back({lo + static_cast<Exponent>(i), std::move(acc[i])});
    }
    return r;
  }
  std::vector<Term> raw;
  raw.reserve(p.term_count() * q.term_count());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) raw.push_back({a.exp + b.exp, a.coeff * b.coeff});
  return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly operator-(LaurentPoly p) {
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Constant first, then positive powers ascending, then negative powers
  // descending in magnitude: "2 - t - t^-1".
  std::vector<const Term*> order;
  for (const auto& t : terms_)
    if (t.exp >= 0) order.push_back(&t);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    if (it->exp < 0) order.push_back(&*it);
  for (const Term* t : order) {
    Integer mag = abs(t->coeff);
    const bool neg = t->coeff < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t->exp == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "t";
    if (t->exp != 1) os << "^" << t->exp;
  }
  return os.str();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly involve(const LaurentPoly& p) {
  std::vector<Term> out(p.terms().rbegin(), p.terms().rend());
  for (auto& t : out) t.exp = -t.exp;
  return LaurentPoly::from_terms(std::move(out));
}

std::optional<UnitWitness> is_unit(const LaurentPoly& p) {
  if (p.term_count() != 1) return std::nullopt;
  const Term& t = p.terms().front();
  if (t.coeff == 1) return UnitWitness{1, t.exp};
  if (t.coeff == -1) return UnitWitness{-1, t.exp};
  return std::nullopt;
}

Associate normalize_associate(const LaurentPoly& p) {
  if (p.is_zero()) return {LaurentPoly{}, UnitWitness{}};
  const Exponent lo = p.min_exp();
  const int sign = p.terms().front().coeff > 0 ? 1 : -1;
  LaurentPoly canonical = p.shifted(-lo);
  if (sign < 0) canonical = -std::move(canonical);
  return {std::move(canonical), UnitWitness{sign, lo}};
}

bool assoc_eq(const LaurentPoly& p, const LaurentPoly& q) {
  return normalize_associate(p).canonical == normalize_associate(q).canonical;
}

Integer augment(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& t : p.terms()) s += t.coeff;
  return s;
}

LaurentPoly iota(const Integer& n) { return LaurentPoly::constant(n); }

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (p.is_zero()) return LaurentPoly{};
  if (p.max_exp() - p.min_exp() < q.max_exp() - q.min_exp()) return std::nullopt;

  // Since t is a unit, divisibility in Z[t, t^-1] reduces to divisibility of
  // the shifted ordinary polynomials, which long division from the top
  // decides: every quotient coefficient must be an integer.
  const Exponent q_lo = q.min_exp();
  const Exponent q_hi = q.max_exp();
  const Integer& lead = q.terms().back().coeff;

  std::vector<Term> rem = p.terms();
  std::vector<Term> quot;
  while (!rem.empty()) {
    const Term& top = rem.back();
    if (top.exp - q_hi < p.min_exp() - q_lo) return std::nullopt;
    if (!mpz_divisible_p(top.coeff.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer c = top.coeff / lead;
    const Exponent k = top.exp - q_hi;
    LaurentPoly step = q.scaled(c).shifted(k);
    rem = merge(rem, step.terms(), true);
    quot.push_back({k, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly power(const LaurentPoly& p, unsigned n) {
  LaurentPoly r = iota(1);
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

LaurentPoly one_minus_t() { return LaurentPoly{{0, 1}, {1, -1}}; }
LaurentPoly one_minus_tinv() { return LaurentPoly{{0, 1}, {-1, -1}}; }

}  // namespace lcert
