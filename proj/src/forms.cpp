#include "lcert/forms.hpp"

#include <utility>

namespace lcert {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

HermitianForm::HermitianForm(PolyMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw NotHermitian("form matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i; j < m_.cols(); ++j) {
      if (m_(i, j) != involve(m_(j, i)))
        throw NotHermitian("entry " + entry_name(i, j) + " = " + m_(i, j).to_string() +
                           " is not the conjugate of entry " + entry_name(j, i) + " = " +
                           m_(j, i).to_string());
    }
  }
}

std::optional<BaseChange> BaseChange::certify(PolyMatrix p) {
  if (!p.is_square()) return std::nullopt;
  auto w = is_unit(determinant(p));
  if (!w) return std::nullopt;
  return BaseChange{std::move(p), *w};
}

HermitianForm h2_sum(std::size_t g) {
  PolyMatrix m(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    m(2 * k, 2 * k + 1) = one_minus_t();
    m(2 * k + 1, 2 * k) = one_minus_tinv();
  }
  return HermitianForm(std::move(m));
}

LaurentPoly surface_order(std::size_t g) {
  return power(one_minus_t() * one_minus_tinv(), static_cast<unsigned>(g));
}

HermitianForm congruence(const PolyMatrix& p, const HermitianForm& a) {
  if (!p.is_square() || p.rows() != a.rank())
    throw std::invalid_argument("congruence: base change is " + std::to_string(p.rows()) + "x" +
                                std::to_string(p.cols()) + ", form has rank " +
                                std::to_string(a.rank()));
  return HermitianForm(p * a.matrix() * conjugate_transpose(p));
}

LaurentPoly determinant(const HermitianForm& a) { return determinant(a.matrix()); }

std::optional<LaurentPoly> solve_hermitian_zero_aug(const LaurentPoly& d) {
  if (d != involve(d))
    throw std::invalid_argument("solve_hermitian_zero_aug: " + d.to_string() +
                                " is not involution-fixed");
  if (augment(d) != 0) return std::nullopt;
  if (d.is_zero()) return LaurentPoly{};

  // d = m_0 * 2 + sum_{r>=1} m_r (t^r + t^-r); c = sum_r M_r t^r with
  // M_r the partial sums of m. The top partial sum is augment(d)/2 = 0.
  const Integer a0 = d.coeff(0);
  std::vector<Term> c_terms;
  Integer partial = a0 / 2;
  for (Exponent r = 0; r <= d.max_exp(); ++r) {
    if (r > 0) partial += d.coeff(r);
    if (partial != 0) c_terms.push_back({r, partial});
  }
  return LaurentPoly::from_terms(std::move(c_terms));
}

PolyMatrix prenormalize_units(const HermitianForm& a) {
  PolyMatrix d = PolyMatrix::identity(a.rank());
  if (a.rank() % 2 != 0) return d;
  const LaurentPoly target = one_minus_t();
  for (std::size_t k = 0; k < a.rank() / 2; ++k) {
    const LaurentPoly& e = a(2 * k, 2 * k + 1);
    if (e == target || e.is_zero()) continue;
    auto q = divide_exact(e, target);
    if (!q) continue;
    if (auto u = is_unit(*q)) {
      // Scaling basis vector 2k+1 by u multiplies this entry by conj(u) = u^-1.
      d(2 * k + 1, 2 * k + 1) = LaurentPoly::from_unit(*u);
    }
  }
  return d;
}

Recognition recognize_a_form_detailed(const HermitianForm& a) {
  const std::size_t n = a.rank();
  if (n % 2 != 0) return {std::nullopt, "rank " + std::to_string(n) + " is odd"};
  const LaurentPoly off = one_minus_t();
  std::vector<LaurentPoly> cs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i / 2 != j / 2 && !a(i, j).is_zero())
        return {std::nullopt, "cross-block entry " + entry_name(i, j) + " = " +
                                  a(i, j).to_string() + " is not zero"};
    }
  }
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t i = 2 * k;
    if (!a(i, i).is_zero())
      return {std::nullopt, "diagonal entry " + entry_name(i, i) + " = " + a(i, i).to_string() +
                                " is not zero"};
    if (a(i, i + 1) != off)
      return {std::nullopt, "entry " + entry_name(i, i + 1) + " = " + a(i, i + 1).to_string() +
                                " is not 1 - t"};
    auto c = solve_hermitian_zero_aug(a(i + 1, i + 1));
    if (!c)
      return {std::nullopt, "diagonal entry " + entry_name(i + 1, i + 1) + " = " +
                                a(i + 1, i + 1).to_string() + " has nonzero augmentation"};
    cs.push_back(std::move(*c));
  }
  return {std::move(cs), {}};
}

std::optional<std::vector<LaurentPoly>> recognize_a_form(const HermitianForm& a) {
  return recognize_a_form_detailed(a).c_list;
}

std::optional<MainStrategyCertificate> reduce_to_standard(const HermitianForm& a,
                                                          bool prenormalize) {
  const PolyMatrix scale = prenormalize ? prenormalize_units(a) : PolyMatrix::identity(a.rank());
  const HermitianForm normalized = prenormalize ? congruence(scale, a) : a;
  auto cs = recognize_a_form(normalized);
  if (!cs) return std::nullopt;

  const std::size_t g = cs->size();
  PolyMatrix r = PolyMatrix::identity(2 * g);
  for (std::size_t k = 0; k < g; ++k) r(2 * k + 1, 2 * k) = -(*cs)[k];
  PolyMatrix p = r * scale;

  if (congruence(p, a) != h2_sum(g))
    throw CertificateDefect("reduce_to_standard: P A P* differs from H2^" + std::to_string(g));
  auto bc = BaseChange::certify(std::move(p));
  if (!bc) throw CertificateDefect("reduce_to_standard: base change determinant is not a unit");

  const LaurentPoly det_a = determinant(a);
  const LaurentPoly target = surface_order(g);
  if (!assoc_eq(det_a, target))
    throw CertificateDefect("reduce_to_standard: det A = " + det_a.to_string() +
                            " is not associate to (1 - t)^g (1 - t^-1)^g");

  return MainStrategyCertificate{a,
                                 g,
                                 std::move(*cs),
                                 std::move(*bc),
                                 normalize_associate(det_a).canonical,
                                 normalize_associate(target).canonical};
}

bool det_chain_check(const PolyMatrix& b, const HermitianForm& a) {
  if (!b.is_square() || b.rows() != a.rank())
    throw std::invalid_argument("det_chain_check: rank mismatch");
  const LaurentPoly lhs = determinant(b * a.matrix() * conjugate_transpose(b));
  const LaurentPoly det_b = determinant(b);
  const LaurentPoly rhs = det_b * determinant(a) * involve(det_b);
  return lhs == rhs;
}

Verdict verify_main_strategy(const HermitianForm& a, bool prenormalize) {
  Verdict v;
  v.label = kUnknottedLabel;
  v.determinant = determinant(a);

  GateResult det_gate{"determinant", false, {}};
  if (a.rank() % 2 == 0) {
    det_gate.passed = assoc_eq(v.determinant, surface_order(a.rank() / 2));
    det_gate.detail = "det A = " + v.determinant.to_string() +
                      (det_gate.passed ? " is" : " is not") +
                      " associate to (1 - t)^g (1 - t^-1)^g with g = " +
                      std::to_string(a.rank() / 2);
  } else {
    det_gate.detail = "odd rank";
  }

  const HermitianForm normalized =
      prenormalize ? congruence(prenormalize_units(a), a) : a;
  Recognition rec = recognize_a_form_detailed(normalized);
  GateResult rec_gate{"recognition", rec.c_list.has_value(),
                      rec.c_list ? "A-form with g = " + std::to_string(rec.c_list->size())
                                 : "recognition failed: " + rec.failure};

  GateResult red_gate{"reduction", false, "not attempted"};
  if (rec_gate.passed) {
    v.certificate = reduce_to_standard(a, prenormalize);
    if (!v.certificate) throw CertificateDefect("verify_main_strategy: recognition not stable");
    red_gate.passed = true;
    red_gate.detail = "P A P* = H2^" + std::to_string(v.certificate->genus);
  }

  v.gates = {rec_gate, red_gate, det_gate};
  for (const auto& g : v.gates) {
    if (!g.passed) {
      v.failed_gate = g.name;
      break;
    }
  }
  v.accepted = v.failed_gate.empty();
  return v;
}

}  // namespace lcert
