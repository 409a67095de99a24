#include "lcert/search.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace lcert {

namespace {

constexpr std::size_t kMaxTransvectionPolys = 2'000'000;

void check_index(std::size_t idx, std::size_t n) {
  if (idx >= n)
    throw std::invalid_argument("move index " + std::to_string(idx) + " out of range for rank " +
                                std::to_string(n));
}

void append_int(std::string& out, long long v) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
}

struct Parent {
  std::string key;
  int move = -1;  // -1 marks the root
};

struct Side {
  std::unordered_map<std::string, Parent> visited;
  std::vector<std::pair<std::string, PolyMatrix>> frontier;
  std::size_t depth = 0;
  LaurentPoly root_det;
};

std::vector<MoveSpec> path_to(const Side& side, std::string key, const std::vector<MoveSpec>& alphabet) {
  std::vector<MoveSpec> rev;
  for (;;) {
    const Parent& p = side.visited.at(key);
    if (p.move < 0) break;
    rev.push_back(alphabet[static_cast<std::size_t>(p.move)]);
    key = p.key;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

MoveSpec MoveSpec::transvection(std::size_t i, std::size_t j, LaurentPoly p) {
  MoveSpec m;
  m.kind = MoveKind::Transvection;
  m.i = i;
  m.j = j;
  m.p = std::move(p);
  return m;
}

MoveSpec MoveSpec::unit_scale(std::size_t i, int sign, Exponent k) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("unit scale sign must be +1 or -1");
  MoveSpec m;
  m.kind = MoveKind::UnitScale;
  m.i = i;
  m.sign = sign;
  m.k = k;
  return m;
}

MoveSpec MoveSpec::swap(std::size_t i, std::size_t j) {
  MoveSpec m;
  m.kind = MoveKind::Swap;
  m.i = i;
  m.j = j;
  return m;
}

MoveSpec MoveSpec::inverse() const {
  switch (kind) {
    case MoveKind::Transvection:
      return transvection(i, j, -p);
    case MoveKind::UnitScale:
      return unit_scale(i, sign, -k);
    case MoveKind::Swap:
      return *this;
  }
  return *this;
}

PolyMatrix MoveSpec::matrix(std::size_t n) const {
  check_index(i, n);
  if (kind != MoveKind::UnitScale) {
    check_index(j, n);
    if (i == j) throw std::invalid_argument("move needs distinct indices: " + to_string());
  }
  PolyMatrix m = PolyMatrix::identity(n);
  switch (kind) {
    case MoveKind::Transvection:
      m(i, j) = p;
      break;
    case MoveKind::UnitScale:
      m(i, i) = LaurentPoly::monomial(sign, k);
      break;
    case MoveKind::Swap:
      m(i, i) = LaurentPoly{};
      m(j, j) = LaurentPoly{};
      m(i, j) = iota(1);
      m(j, i) = iota(1);
      break;
  }
  return m;
}

std::string MoveSpec::to_string() const {
  switch (kind) {
    case MoveKind::Transvection:
      return "Transvection(" + std::to_string(i) + ", " + std::to_string(j) + ", " + p.to_string() + ")";
    case MoveKind::UnitScale:
      return "UnitScale(" + std::to_string(i) + ", " + (sign > 0 ? "+" : "-") + ", " +
             std::to_string(k) + ")";
    case MoveKind::Swap:
      return "Swap(" + std::to_string(i) + ", " + std::to_string(j) + ")";
  }
  return "?";
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "Found";
    case SearchStatus::Exhausted:
      return "Exhausted";
    case SearchStatus::ObstructionMismatch:
      return "ObstructionMismatch";
  }
  return "?";
}

PolyMatrix apply_move(const PolyMatrix& a, const MoveSpec& m) {
  const std::size_t n = a.rows();
  check_index(m.i, n);
  if (m.kind != MoveKind::UnitScale) {
    check_index(m.j, n);
    if (m.i == m.j) throw std::invalid_argument("move needs distinct indices: " + m.to_string());
  }
  PolyMatrix r = a;
  switch (m.kind) {
    case MoveKind::Transvection: {
      if (m.p.is_zero()) break;
      for (std::size_t c = 0; c < n; ++c)
        if (!r(m.j, c).is_zero()) r(m.i, c) += m.p * r(m.j, c);
      const LaurentPoly pbar = involve(m.p);
      for (std::size_t row = 0; row < n; ++row)
        if (!r(row, m.j).is_zero()) r(row, m.i) += r(row, m.j) * pbar;
      break;
    }
    case MoveKind::UnitScale: {
      const LaurentPoly u = LaurentPoly::monomial(m.sign, m.k);
      const LaurentPoly ubar = LaurentPoly::monomial(m.sign, -m.k);
      for (std::size_t c = 0; c < n; ++c) r(m.i, c) = u * r(m.i, c);
      for (std::size_t row = 0; row < n; ++row) r(row, m.i) = r(row, m.i) * ubar;
      break;
    }
    case MoveKind::Swap:
      for (std::size_t c = 0; c < n; ++c) std::swap(r(m.i, c), r(m.j, c));
      for (std::size_t row = 0; row < n; ++row) std::swap(r(row, m.i), r(row, m.j));
      break;
  }
  return r;
}

PolyMatrix replay_moves(const PolyMatrix& a, const std::vector<MoveSpec>& moves) {
  PolyMatrix r = a;
  for (const auto& m : moves) r = apply_move(r, m);
  return r;
}

PolyMatrix compose_moves(std::size_t n, const std::vector<MoveSpec>& moves) {
  PolyMatrix p = PolyMatrix::identity(n);
  for (const auto& m : moves) p = m.matrix(n) * p;
  return p;
}

std::vector<LaurentPoly> transvection_polynomials(const SearchBounds& bounds) {
  const std::size_t slots = 2 * bounds.degree + 1;
  const std::size_t base = 2 * bounds.coeff + 1;
  std::size_t total = 1;
  for (std::size_t s = 0; s < slots; ++s) {
    total *= base;
    if (total > kMaxTransvectionPolys)
      throw std::invalid_argument("search bounds admit too many transvection polynomials");
  }
  const auto deg = static_cast<Exponent>(bounds.degree);
  const auto cmax = static_cast<long>(bounds.coeff);

  struct Keyed {
    std::tuple<std::size_t, Exponent, long> key;
    std::vector<long> digits;
    LaurentPoly p;
  };
  std::vector<Keyed> all;
  all.reserve(total);
  std::vector<long> digits(slots, -cmax);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<Term> terms;
    Exponent reach = 0;
    long weight = 0;
    for (std::size_t s = 0; s < slots; ++s) {
      if (digits[s] == 0) continue;
      const Exponent e = static_cast<Exponent>(s) - deg;
      terms.push_back({e, digits[s]});
      reach = std::max(reach, e < 0 ? -e : e);
      weight += digits[s] < 0 ? -digits[s] : digits[s];
    }
    if (!terms.empty()) {
      const std::size_t count = terms.size();
      all.push_back({{count, reach, weight}, digits, LaurentPoly::from_terms(std::move(terms))});
    }
    for (std::size_t s = 0; s < slots; ++s) {
      if (++digits[s] <= cmax) break;
      digits[s] = -cmax;
    }
  }
  // Fewest terms, then narrowest support, then smallest coefficients; ties by
  // the digit vector, which starts at the most negative coefficients, so a
  // leading -1 sorts before +1.
  std::sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.key, a.digits) < std::tie(b.key, b.digits);
  });
  std::vector<LaurentPoly> out;
  out.reserve(all.size());
  for (auto& k : all) out.push_back(std::move(k.p));
  return out;
}

std::vector<MoveSpec> enumerate_moves(std::size_t n, const SearchBounds& bounds) {
  std::vector<MoveSpec> moves;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) moves.push_back(MoveSpec::swap(i, j));
  const auto ke = static_cast<Exponent>(bounds.unit_exp);
  for (std::size_t i = 0; i < n; ++i)
    for (int sign : {1, -1})
      for (Exponent k = -ke; k <= ke; ++k)
        if (!(sign == 1 && k == 0)) moves.push_back(MoveSpec::unit_scale(i, sign, k));
  const auto polys = transvection_polynomials(bounds);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        for (const auto& p : polys) moves.push_back(MoveSpec::transvection(i, j, p));
  return moves;
}

std::string state_key(const PolyMatrix& m) {
  std::string key;
  key.reserve(m.rows() * m.cols() * 12);
  for (const auto& e : m.row_major()) {
    for (const auto& t : e.terms()) {
      append_int(key, t.exp);
      key.push_back(':');
      if (t.coeff.fits_slong_p()) {
        append_int(key, t.coeff.get_si());
      } else {
        key += t.coeff.get_str();
      }
      key.push_back(',');
    }
    key.push_back(';');
  }
  return key;
}

std::optional<std::string> det_obstruction(const HermitianForm& a, std::size_t g) {
  if (a.rank() != 2 * g)
    throw std::invalid_argument("det_obstruction: rank " + std::to_string(a.rank()) +
                                " is not 2g for g = " + std::to_string(g));
  const LaurentPoly det = determinant(a);
  const LaurentPoly target = surface_order(g);
  if (assoc_eq(det, target)) return std::nullopt;
  return "determinant not associate: canonical det A = " +
         normalize_associate(det).canonical.to_string() + ", expected " +
         normalize_associate(target).canonical.to_string();
}

SearchOutcome bounded_isometry_search(const HermitianForm& a, const HermitianForm& target,
                                      const SearchBounds& bounds) {
  if (a.rank() != target.rank())
    throw std::invalid_argument("search: ranks differ (" + std::to_string(a.rank()) + " vs " +
                                std::to_string(target.rank()) + ")");
  SearchOutcome out;
  const std::size_t n = a.rank();

  Side fwd;
  Side bwd;
  fwd.root_det = determinant(a);
  bwd.root_det = determinant(target);
  if (!assoc_eq(fwd.root_det, bwd.root_det)) {
    out.status = SearchStatus::ObstructionMismatch;
    out.reason = "determinant not associate: canonical det A = " +
                 normalize_associate(fwd.root_det).canonical.to_string() +
                 ", canonical det target = " + normalize_associate(bwd.root_det).canonical.to_string();
    return out;
  }

  auto finish = [&](std::vector<MoveSpec> moves) {
    const PolyMatrix replayed = replay_moves(a.matrix(), moves);
    PolyMatrix p = compose_moves(n, moves);
    if (replayed != target.matrix() || congruence(p, a).matrix() != target.matrix())
      throw CertificateDefect("search: found move list does not replay to the target");
    auto bc = BaseChange::certify(std::move(p));
    if (!bc) throw CertificateDefect("search: composed base change is not invertible");
    out.status = SearchStatus::Found;
    out.moves = std::move(moves);
    out.base_change = std::move(bc);
    out.states_visited = fwd.visited.size() + bwd.visited.size();
    return out;
  };

  const std::string a_key = state_key(a.matrix());
  const std::string t_key = state_key(target.matrix());
  fwd.visited.emplace(a_key, Parent{});
  bwd.visited.emplace(t_key, Parent{});
  if (a_key == t_key) return finish({});
  fwd.frontier.emplace_back(a_key, a.matrix());
  bwd.frontier.emplace_back(t_key, target.matrix());

  const std::vector<MoveSpec> alphabet = enumerate_moves(n, bounds);

  while (fwd.depth + bwd.depth < bounds.max_depth) {
    const bool forward = fwd.depth <= bwd.depth;
    Side& side = forward ? fwd : bwd;
    Side& other = forward ? bwd : fwd;
    if (side.frontier.empty()) break;

    std::vector<std::pair<std::string, PolyMatrix>> next;
    for (const auto& [key, state] : side.frontier) {
      if (determinant(state) != side.root_det)
        throw CertificateDefect("search: congruence changed the determinant");
      for (std::size_t mi = 0; mi < alphabet.size(); ++mi) {
        PolyMatrix child = apply_move(state, alphabet[mi]);
        std::string child_key = state_key(child);
        auto [it, inserted] = side.visited.try_emplace(child_key, Parent{key, static_cast<int>(mi)});
        if (!inserted) continue;
        if (other.visited.contains(child_key)) {
          std::vector<MoveSpec> to_meet_fwd = path_to(fwd, child_key, alphabet);
          std::vector<MoveSpec> to_meet_bwd = path_to(bwd, child_key, alphabet);
          for (auto m = to_meet_bwd.rbegin(); m != to_meet_bwd.rend(); ++m)
            to_meet_fwd.push_back(m->inverse());
          return finish(std::move(to_meet_fwd));
        }
        next.emplace_back(std::move(child_key), std::move(child));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    side.frontier = std::move(next);
    ++side.depth;
  }

  out.status = SearchStatus::Exhausted;
  out.reason = "no move sequence of length <= " + std::to_string(bounds.max_depth) +
               " within the bounds";
  out.states_visited = fwd.visited.size() + bwd.visited.size();
  return out;
}

HermitianForm stabilize(const HermitianForm& a, std::size_t k) {
  if (k == 0) return a;
  return HermitianForm(block_diagonal(a.matrix(), h2_sum(k).matrix()));
}

ProbeReport conjecture_probe(const HermitianForm& a, const SearchBounds& bounds) {
  if (a.rank() != 2 && a.rank() != 4)
    throw std::invalid_argument("conjecture_probe: rank must be 2 or 4, got " +
                                std::to_string(a.rank()));
  ProbeReport r;
  r.genus = a.rank() / 2;
  r.direct = bounded_isometry_search(a, h2_sum(r.genus), bounds);
  r.stable = bounded_isometry_search(stabilize(a, 1), h2_sum(r.genus + 1), bounds);
  r.candidate = r.stable.status == SearchStatus::Found && r.direct.status == SearchStatus::Exhausted;
  return r;
}

}  // namespace lcert
