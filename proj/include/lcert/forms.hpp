// Hermitian forms over Z[t, t^-1] and the certificate pipeline that reduces a
// block matrix
//
//   A = (+)_k [[0, 1 - t], [1 - t^-1, c_k (1 - t) + conj(c_k) (1 - t^-1)]]
//
// to the standard surface form H2^g by an explicit base change.

#ifndef LCERT_FORMS_HPP
#define LCERT_FORMS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcert/laurent.hpp"
#include "lcert/matrix.hpp"

namespace lcert {

/// Raised when an input matrix is not equal to its conjugate transpose.
class NotHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed after a successful recognition.
/// This is a bug, never an answer about the input.
class CertificateDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class HermitianForm {
 public:
  HermitianForm() = default;
  /// Throws NotHermitian unless m is square with m = m*.
  explicit HermitianForm(PolyMatrix m);

  std::size_t rank() const { return m_.rows(); }
  const PolyMatrix& matrix() const { return m_; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

 private:
  PolyMatrix m_;
};

/// An invertible base change, with det(P) certified to be a unit.
struct BaseChange {
  PolyMatrix matrix;
  UnitWitness determinant_witness;

  /// Returns nullopt unless det(P) = +-t^k.
  static std::optional<BaseChange> certify(PolyMatrix p);
};

struct MainStrategyCertificate {
  HermitianForm input;
  std::size_t genus = 0;
  std::vector<LaurentPoly> c_list;
  BaseChange reduction;
  LaurentPoly det_canonical;
  LaurentPoly target_canonical;
};

/// g copies of H2 = [[0, 1 - t], [1 - t^-1, 0]] on the diagonal.
HermitianForm h2_sum(std::size_t g);

/// (1 - t)^g (1 - t^-1)^g.
LaurentPoly surface_order(std::size_t g);

/// P A P*. Throws std::invalid_argument on shape mismatch.
HermitianForm congruence(const PolyMatrix& p, const HermitianForm& a);

LaurentPoly determinant(const HermitianForm& a);

/// Finds c with c (1 - t) + conj(c) (1 - t^-1) = d. Returns nullopt when
/// augment(d) != 0; throws std::invalid_argument unless d = conj(d).
std::optional<LaurentPoly> solve_hermitian_zero_aug(const LaurentPoly& d);

/// Diagonal unit matrix D making every block's (0,1) entry of D A D* equal to
/// exactly 1 - t where that entry is already a unit multiple of 1 - t.
PolyMatrix prenormalize_units(const HermitianForm& a);

struct Recognition {
  std::optional<std::vector<LaurentPoly>> c_list;
  std::string failure;  // empty on success
};

Recognition recognize_a_form_detailed(const HermitianForm& a);

/// Recovers c_1..c_g from an exact A-form, or nullopt.
std::optional<std::vector<LaurentPoly>> recognize_a_form(const HermitianForm& a);

/// Builds and self-checks the reduction to H2^g. Returns nullopt when the
/// form is not recognised; throws CertificateDefect if a check fails.
std::optional<MainStrategyCertificate> reduce_to_standard(const HermitianForm& a,
                                                          bool prenormalize = false);

/// det(B A B*) == det(B) det(A) conj(det(B)), exactly.
bool det_chain_check(const PolyMatrix& b, const HermitianForm& a);

struct GateResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Verdict {
  bool accepted = false;
  std::string label;
  std::string failed_gate;  // empty when accepted
  std::vector<GateResult> gates;
  LaurentPoly determinant;
  std::optional<MainStrategyCertificate> certificate;
};

inline constexpr const char* kUnknottedLabel =
    "isometric to H2^g => topologically unknotted (intersection form criterion)";

Verdict verify_main_strategy(const HermitianForm& a, bool prenormalize = false);

}  // namespace lcert

#endif  // LCERT_FORMS_HPP
