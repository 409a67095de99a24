#include <doctest.h>

#include <algorithm>
#include <random>

#include "lcert/forms.hpp"
#include "lcert/wallcalc.hpp"
#include "oracles.hpp"

using namespace lcert;

namespace {

SurfaceModel model(std::vector<IntersectionEvent> events, long euler = 0) {
  return {"test", std::move(events), euler};
}

constexpr auto kDouble = EventKind::GenericDoublePoint;
constexpr auto kPierce = EventKind::TorusPiercing;
constexpr auto kDisc = EventKind::DiscSelfIntersection;

// Folding by hand: class r collects the coefficients of t^r and t^-r.
std::map<long, long long> fold(const oracle::Poly& p) {
  std::map<long, long long> w;
  for (const auto& [e, c] : p) w[e < 0 ? -e : e] += c;
  for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
  return w;
}

std::map<long, long long> as_map(const WallClass& w) {
  std::map<long, long long> m;
  for (const auto& [r, c] : w.coefficients()) m[r] = c.get_si();
  return m;
}

SurfaceModel random_model(std::mt19937_64& rng, bool allow_double_points, long euler) {
  SurfaceModel s{"random", {}, euler};
  const int count = static_cast<int>(rng() % 7);
  for (int i = 0; i < count; ++i) {
    const int kind = static_cast<int>(rng() % (allow_double_points ? 3 : 2));
    IntersectionEvent e;
    e.kind = kind == 0 ? kPierce : kind == 1 ? kDisc : kDouble;
    e.sign = rng() % 2 ? 1 : -1;
    e.k = static_cast<Exponent>(rng() % 9) - 4;
    s.events.push_back(e);
  }
  return s;
}

}  // namespace

TEST_CASE("project") {
  CHECK(project(one_minus_t()) == WallClass{{0, 1}, {1, -1}});
  CHECK(project(one_minus_tinv()) == WallClass{{0, 1}, {1, -1}});
  const auto two_minus = oracle::mul(oracle::from(one_minus_t()), oracle::from(one_minus_tinv()));
  CHECK(fold(two_minus) == std::map<long, long long>{{0, 2}, {1, -2}});
  CHECK(project(oracle::to(two_minus)) == WallClass{{0, 2}, {1, -2}});
}

TEST_CASE("hermitize") {
  CHECK(hermitize(WallClass{{0, 1}, {1, -1}}) == LaurentPoly{{0, 2}, {1, -1}, {-1, -1}});
  CHECK(hermitize(WallClass{}).is_zero());
  CHECK(hermitize(WallClass{{2, 3}}) == LaurentPoly{{2, 3}, {-2, 3}});
}

TEST_CASE("mu") {
  CHECK(mu(model({{kPierce, 1, 0}})) == WallClass{{0, 1}, {1, -1}});
  CHECK(mu(model({{kDouble, 1, 1}, {kDouble, -1, 1}})).is_zero());
  CHECK(mu(model({{kDisc, 1, 0}})) == WallClass{{0, 2}, {1, -2}});
  // t^k and t^-k are the same class.
  CHECK(mu(model({{kDouble, 1, 3}, {kDouble, -1, -3}})).is_zero());
}

TEST_CASE("lambda_self") {
  CHECK(lambda_self(model({{kPierce, 1, 0}})) == LaurentPoly{{0, 2}, {1, -1}, {-1, -1}});
  CHECK(lambda_self(model({})).is_zero());
  CHECK(lambda_self(model({}, 4)) == iota(4));
}

TEST_CASE("pairing_shape_check") {
  CHECK(pairing_shape_check(model({{kPierce, 1, 0}})) == iota(1));
  CHECK(pairing_shape_check(model({})).is_zero());

  // -t (1 - t)(1 - t^-1) = 1 - 2t + t^2, folded and doubled.
  const SurfaceModel disc = model({{kDisc, -1, 1}});
  const auto contribution = oracle::mul(oracle::Poly{{1, -1}},
                                        oracle::mul(oracle::from(one_minus_t()), oracle::from(one_minus_tinv())));
  CHECK(fold(contribution) == std::map<long, long long>{{0, 1}, {1, -2}, {2, 1}});
  const LaurentPoly lambda = lambda_self(disc);
  CHECK(lambda == LaurentPoly{{0, 2}, {1, -2}, {-1, -2}, {2, 1}, {-2, 1}});
  const LaurentPoly c = pairing_shape_check(disc);
  CHECK(c == LaurentPoly{{0, 1}, {1, -1}});
  CHECK(c * one_minus_t() + involve(c) * one_minus_tinv() == lambda);

  CHECK_THROWS_AS(pairing_shape_check(model({}, 4)), std::invalid_argument);
  CHECK_THROWS_AS(pairing_shape_check(model({{kDouble, 1, 0}})), std::invalid_argument);
  CHECK_FALSE(pairing_shape_applicable(model({{kDouble, 1, 0}})));
}

TEST_CASE("relabel_invariance") {
  const SurfaceModel s = model({{kPierce, 1, 2}, {kDisc, -1, -1}, {kDouble, 1, 5}});
  CHECK(relabel_invariance(s, {0, 1, 2}));
  CHECK(relabel_invariance(s, {1, 0, 2}));
  CHECK_THROWS_AS(relabel_invariance(s, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(relabel_invariance(s, {0, 1}), std::invalid_argument);

  std::mt19937_64 rng(41);
  for (int n = 0; n < 200; ++n) {
    const SurfaceModel r = random_model(rng, true, static_cast<long>(rng() % 5) - 2);
    std::vector<std::size_t> perm(r.events.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(relabel_invariance(r, perm));
  }
}

TEST_CASE("project is an additive surjection identifying t^k with t^-k") {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 200; ++n) {
    const auto p = oracle::random_laurent(rng, -4, 4, 5);
    const auto q = oracle::random_laurent(rng, -4, 4, 5);
    CHECK(project(p + q) == project(p) + project(q));
    CHECK(as_map(project(p)) == fold(oracle::from(p)));
    const Exponent k = static_cast<Exponent>(n % 11) - 5;
    CHECK(project(LaurentPoly{{k, 1}}) == project(LaurentPoly{{-k, 1}}));
  }
}

TEST_CASE("hermitize is independent of the lift") {
  std::mt19937_64 rng(47);
  for (int n = 0; n < 200; ++n) {
    const auto p = oracle::random_laurent(rng, -4, 4, 5);
    // Any termwise negation of exponents lifts the same class.
    std::vector<Term> lifted;
    for (const auto& t : p.terms()) lifted.push_back({rng() % 2 ? t.exp : -t.exp, t.coeff});
    const LaurentPoly r = LaurentPoly::from_terms(lifted);
    CHECK(project(r) == project(p));
    CHECK(r + involve(r) == hermitize(project(p)));
    CHECK(hermitize(project(p)) == involve(hermitize(project(p))));
  }
}

TEST_CASE("lambda_self is Hermitian and has the cocycle shape when applicable") {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 300; ++n) {
    const SurfaceModel any = random_model(rng, true, static_cast<long>(rng() % 7) - 3);
    CHECK(lambda_self(any) == involve(lambda_self(any)));

    const SurfaceModel s = random_model(rng, false, 0);
    const LaurentPoly lambda = lambda_self(s);
    CHECK(augment(lambda) == 0);
    const LaurentPoly c = pairing_shape_check(s);
    CHECK(c * one_minus_t() + involve(c) * one_minus_tinv() == lambda);
  }
}
