#include "lcert/serialize.hpp"

#include <limits>

namespace lcert {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

bool valid_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_decimal(const std::string& s, const std::string& path) {
  if (!valid_decimal(s)) fail(path, "'" + s + "' is not a decimal integer");
  Integer n;
  n.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return n;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  Integer n = integer_from_json(j, path);
  if (n < 0 || !n.fits_ulong_p()) fail(path, "expected a nonnegative size");
  return n.get_ui();
}

Exponent exponent_from_string(const std::string& s, const std::string& path) {
  Integer n = parse_decimal(s, path);
  if (!n.fits_slong_p()) fail(path, "exponent out of range");
  const long v = n.get_si();
  // Leave headroom so products of polynomials cannot overflow exponents.
  if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
    fail(path, "exponent out of range");
  return v;
}

int sign_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
  } else if (j.is_number_integer()) {
    if (j.get<long long>() == 1) return 1;
    if (j.get<long long>() == -1) return -1;
  }
  fail(path, "sign must be +1 or -1");
}

Json entries_json(const PolyMatrix& m) {
  Json e = Json::array();
  for (const auto& p : m.row_major()) e.push_back(to_json(p));
  return e;
}

std::vector<LaurentPoly> entries_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of polynomials");
  std::vector<LaurentPoly> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(poly_from_json(j[i], index(path, i)));
  return out;
}

}  // namespace

Json to_json(const Integer& n) { return n.get_str(); }

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& t : p.terms()) j[std::to_string(t.exp)] = t.coeff.get_str();
  return j;
}

Json to_json(const UnitWitness& u) {
  return {{"sign", u.sign > 0 ? "+1" : "-1"}, {"exponent", std::to_string(u.exponent)}};
}

Json to_json(const PolyMatrix& m) {
  return {{"rows", std::to_string(m.rows())},
          {"cols", std::to_string(m.cols())},
          {"entries", entries_json(m)}};
}

Json to_json(const HermitianForm& a) {
  return {{"rank", std::to_string(a.rank())}, {"entries", entries_json(a.matrix())}};
}

Json to_json(const MainStrategyCertificate& c) {
  Json cs = Json::array();
  for (const auto& p : c.c_list) cs.push_back(to_json(p));
  return {{"g", std::to_string(c.genus)},
          {"c_list", cs},
          {"P", {{"rank", std::to_string(c.reduction.matrix.rows())},
                 {"entries", entries_json(c.reduction.matrix)}}},
          {"det_canonical", to_json(c.det_canonical)},
          {"target_canonical", to_json(c.target_canonical)},
          {"det_P_witness", to_json(c.reduction.determinant_witness)}};
}

Json to_json(const Verdict& v) {
  Json gates = Json::array();
  for (const auto& g : v.gates)
    gates.push_back({{"name", g.name}, {"passed", g.passed}, {"detail", g.detail}});
  return {{"verdict", v.accepted ? "accept" : "reject"},
          {"label", v.label},
          {"failed_gate", v.failed_gate.empty() ? Json(nullptr) : Json(v.failed_gate)},
          {"gates", gates},
          {"det", to_json(v.determinant)},
          {"det_canonical", to_json(normalize_associate(v.determinant).canonical)},
          {"certificate", v.certificate ? to_json(*v.certificate) : Json(nullptr)}};
}

Json to_json(const WallClass& w) {
  Json j = Json::object();
  for (const auto& [r, c] : w.coefficients()) j[std::to_string(r)] = c.get_str();
  return j;
}

Json to_json(const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::Transvection:
      return {{"kind", "Transvection"},
              {"i", std::to_string(m.i)},
              {"j", std::to_string(m.j)},
              {"p", to_json(m.p)}};
    case MoveKind::UnitScale:
      return {{"kind", "UnitScale"},
              {"i", std::to_string(m.i)},
              {"sign", m.sign > 0 ? "+1" : "-1"},
              {"k", std::to_string(m.k)}};
    case MoveKind::Swap:
      return {{"kind", "Swap"}, {"i", std::to_string(m.i)}, {"j", std::to_string(m.j)}};
  }
  return nullptr;
}

Json to_json(const SearchBounds& b) {
  return {{"max_depth", std::to_string(b.max_depth)},
          {"degree", std::to_string(b.degree)},
          {"coeff", std::to_string(b.coeff)},
          {"unit_exp", std::to_string(b.unit_exp)}};
}

Json to_json(const SearchOutcome& o) {
  Json moves = Json::array();
  for (const auto& m : o.moves) moves.push_back(to_json(m));
  Json j = {{"status", to_string(o.status)},
            {"reason", o.reason},
            {"moves", moves},
            {"states_visited", std::to_string(o.states_visited)}};
  if (o.base_change) {
    j["P"] = {{"rank", std::to_string(o.base_change->matrix.rows())},
              {"entries", entries_json(o.base_change->matrix)}};
    j["det_P_witness"] = to_json(o.base_change->determinant_witness);
  } else {
    j["P"] = nullptr;
    j["det_P_witness"] = nullptr;
  }
  return j;
}

Json to_json(const ProbeReport& r) {
  return {{"g", std::to_string(r.genus)},
          {"stable", to_json(r.stable)},
          {"direct", to_json(r.direct)},
          {"candidate", r.candidate}};
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return parse_decimal(j.get_ref<const std::string&>(), path);
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return parse_decimal(std::to_string(j.get<unsigned long long>()), path);
    return parse_decimal(std::to_string(j.get<long long>()), path);
  }
  fail(path, "expected a decimal integer string");
}

LaurentPoly poly_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a polynomial object {exponent: coefficient}");
  std::vector<Term> terms;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string p = join(path, it.key());
    terms.push_back({exponent_from_string(it.key(), p), integer_from_json(it.value(), p)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

PolyMatrix matrix_from_json(const Json& j, const std::string& path) {
  const std::size_t rows = size_from_json(field(j, "rows", path), join(path, "rows"));
  const std::size_t cols = size_from_json(field(j, "cols", path), join(path, "cols"));
  auto entries = entries_from_json(field(j, "entries", path), join(path, "entries"));
  if (entries.size() != rows * cols)
    fail(join(path, "entries"), "expected " + std::to_string(rows * cols) + " entries, got " +
                                    std::to_string(entries.size()));
  return PolyMatrix::from_row_major(rows, cols, std::move(entries));
}

HermitianForm form_from_json(const Json& j, const std::string& path) {
  const std::size_t rank = size_from_json(field(j, "rank", path), join(path, "rank"));
  auto entries = entries_from_json(field(j, "entries", path), join(path, "entries"));
  if (entries.size() != rank * rank)
    fail(join(path, "entries"), "expected " + std::to_string(rank * rank) + " entries, got " +
                                    std::to_string(entries.size()));
  try {
    return HermitianForm(PolyMatrix::from_row_major(rank, rank, std::move(entries)));
  } catch (const NotHermitian& e) {
    fail(path, std::string("not Hermitian: ") + e.what());
  }
}

CertificateRecord certificate_from_json(const Json& j) {
  CertificateRecord r;
  r.genus = size_from_json(field(j, "g", ""), "g");
  const Json& cs = field(j, "c_list", "");
  if (!cs.is_array()) fail("c_list", "expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) r.c_list.push_back(poly_from_json(cs[i], index("c_list", i)));
  const Json& p = field(j, "P", "");
  const std::size_t rank = size_from_json(field(p, "rank", "P"), "P.rank");
  auto entries = entries_from_json(field(p, "entries", "P"), "P.entries");
  if (entries.size() != rank * rank)
    fail("P.entries", "expected " + std::to_string(rank * rank) + " entries");
  r.p = PolyMatrix::from_row_major(rank, rank, std::move(entries));
  r.det_canonical = poly_from_json(field(j, "det_canonical", ""), "det_canonical");
  return r;
}

SurfaceModel surface_from_json(const Json& j) {
  SurfaceModel s;
  if (!j.is_object()) fail("", "expected a surface object");
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) fail("label", "expected a string");
    s.label = it->get<std::string>();
  }
  s.euler = integer_from_json(field(j, "euler", ""), "euler");
  const Json& events = field(j, "events", "");
  if (!events.is_array()) fail("events", "expected an array");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string p = index("events", i);
    const Json& kind = field(events[i], "kind", p);
    if (!kind.is_string()) fail(join(p, "kind"), "expected a string");
    IntersectionEvent e;
    try {
      e.kind = parse_event_kind(kind.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      fail(join(p, "kind"), ex.what());
    }
    e.sign = sign_from_json(field(events[i], "sign", p), join(p, "sign"));
    e.k = exponent_from_string(integer_from_json(field(events[i], "k", p), join(p, "k")).get_str(),
                               join(p, "k"));
    s.events.push_back(e);
  }
  return s;
}

ChainComplex complex_from_json(const Json& j) {
  const Json& ranks = field(j, "ranks", "");
  const Json& diffs = field(j, "differentials", "");
  if (!ranks.is_array() || ranks.empty()) fail("ranks", "expected a nonempty array");
  if (!diffs.is_array()) fail("differentials", "expected an array");
  std::vector<std::size_t> r(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i)
    r[ranks.size() - 1 - i] = size_from_json(ranks[i], index("ranks", i));
  std::vector<PolyMatrix> d(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i)
    d[diffs.size() - 1 - i] = matrix_from_json(diffs[i], index("differentials", i));
  try {
    return ChainComplex(std::move(r), std::move(d));
  } catch (const std::invalid_argument& e) {
    fail("", e.what());
  }
}

MoveSpec move_from_json(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(join(path, "kind"), "expected a string");
  const std::string k = kind.get<std::string>();
  const std::size_t i = size_from_json(field(j, "i", path), join(path, "i"));
  if (k == "Transvection")
    return MoveSpec::transvection(i, size_from_json(field(j, "j", path), join(path, "j")),
                                  poly_from_json(field(j, "p", path), join(path, "p")));
  if (k == "UnitScale")
    return MoveSpec::unit_scale(
        i, sign_from_json(field(j, "sign", path), join(path, "sign")),
        exponent_from_string(integer_from_json(field(j, "k", path), join(path, "k")).get_str(),
                             join(path, "k")));
  if (k == "Swap") return MoveSpec::swap(i, size_from_json(field(j, "j", path), join(path, "j")));
  fail(join(path, "kind"), "unknown move kind '" + k + "'");
}

SearchBounds bounds_from_json(const Json& j, SearchBounds b) {
  if (!j.is_object()) fail("", "expected a bounds object");
  if (j.contains("max_depth")) b.max_depth = size_from_json(j["max_depth"], "max_depth");
  if (j.contains("degree")) b.degree = size_from_json(j["degree"], "degree");
  if (j.contains("coeff")) b.coeff = size_from_json(j["coeff"], "coeff");
  if (j.contains("unit_exp")) b.unit_exp = size_from_json(j["unit_exp"], "unit_exp");
  return b;
}

}  // namespace lcert
