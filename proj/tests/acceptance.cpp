// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <unistd.h>

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcert/cli.hpp"
#include "lcert/forms.hpp"
#include "lcert/homology.hpp"
#include "lcert/search.hpp"
#include "lcert/serialize.hpp"
#include "lcert/wallcalc.hpp"
#include "oracles.hpp"

using namespace lcert;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::string fixture(const std::string& name) { return std::string(LCERT_FIXTURES_DIR) + "/" + name; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / ("lcert_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

const fs::path& scratch() {
  static const fs::path dir = scratch_dir();
  return dir;
}

void write_json(const fs::path& p, const Json& j) { std::ofstream(p) << j.dump(2); }

struct CliRun {
  int status;
  Json json;
};

CliRun call(const std::function<int(std::ostream&, std::ostream&)>& f) {
  std::ostringstream out, err;
  const int status = f(out, err);
  Json j;
  if (!out.str().empty()) j = Json::parse(out.str());
  return {status, j};
}

LaurentPoly cocycle(const LaurentPoly& c) { return c * one_minus_t() + involve(c) * one_minus_tinv(); }

HermitianForm a_form(const std::vector<LaurentPoly>& cs) {
  PolyMatrix m;
  for (const auto& c : cs)
    m = block_diagonal(m, PolyMatrix{{LaurentPoly{}, one_minus_t()}, {one_minus_tinv(), cocycle(c)}});
  return HermitianForm(m);
}

// P A P* = H2^g recomputed with the map-based oracle arithmetic.
bool oracle_congruent(const PolyMatrix& p, const HermitianForm& a, std::size_t g) {
  const oracle::Mat op = oracle::from(p);
  return oracle::matmul(oracle::matmul(op, oracle::from(a.matrix())), oracle::star(op)) ==
         oracle::from(h2_sum(g).matrix());
}

// Adds 1 to one serialized polynomial entry.
void bump(Json& entry) { entry = to_json(poly_from_json(entry) + iota(1)); }

// Replay must pass on the file as written and fail after a one-entry change
// to P.
void replay_round_trip(Checker& ck, const Json& record, const fs::path& form_file, const std::string& tag) {
  const fs::path file = scratch() / "record.json";
  write_json(file, record);
  const auto pass = call([&](auto& o, auto& e) { return cli::run_replay(file.string(), form_file.string(), o, e); });
  ck.expect(pass.status == cli::kExitOk, tag + ": replay exit " + std::to_string(pass.status));

  Json mutated = record;
  Json& p = mutated.contains("certificate") ? mutated["certificate"]["P"] : mutated["P"];
  bump(p["entries"][0]);
  write_json(file, mutated);
  const auto fail = call([&](auto& o, auto& e) { return cli::run_replay(file.string(), form_file.string(), o, e); });
  ck.expect(fail.status == cli::kExitReject, tag + ": mutated replay exit " + std::to_string(fail.status));
}

// Criterion 9 accumulates over the forms accepted in 1, 2 and 8.
Checker replay_checks;
std::size_t replayed = 0;

using Result = std::pair<bool, std::string>;

Result criterion_1() {
  Checker ck;
  const auto start = Clock::now();
  const auto run = call([](auto& o, auto& e) { return cli::run_check(fixture("rank2_fixture.json"), false, o, e); });
  const double elapsed = seconds_since(start);
  ck.expect(run.status == cli::kExitOk, "check exit " + std::to_string(run.status));
  if (run.status == cli::kExitOk) {
    const Json& cert = run.json["certificate"];
    ck.expect(cert["g"] == "1", "g = " + cert["g"].dump());
    ck.expect(cert["c_list"].size() == 1 && poly_from_json(cert["c_list"][0]) == iota(1),
              "c_list = " + cert["c_list"].dump());
    const PolyMatrix p = matrix_from_json(Json{{"rows", cert["P"]["rank"]},
                                               {"cols", cert["P"]["rank"]},
                                               {"entries", cert["P"]["entries"]}});
    const HermitianForm a = form_from_json(Json::parse(std::ifstream(fixture("rank2_fixture.json"))));
    ck.expect(oracle_congruent(p, a, 1), "P A P* != H2");
    ck.expect(congruence(p, a) == h2_sum(1), "congruence(P, A) != H2");
    replay_round_trip(replay_checks, run.json, fixture("rank2_fixture.json"), "rank-2 fixture");
    ++replayed;
  }
  ck.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream note;
  note << "accept, g = 1, c = [1], P A P* = H2 exactly; " << elapsed << " s";
  return {ck.failures.empty(), ck.failures.empty() ? note.str() : ck.failures.front()};
}

Result criterion_2() {
  Checker ck;
  const std::vector<LaurentPoly> cs = {LaurentPoly{}, iota(1), iota(-1), LaurentPoly{{0, 1}, {1, 1}},
                                       LaurentPoly{{-2, 1}, {0, -3}}};
  const LaurentPoly expected = normalize_associate(one_minus_t() * one_minus_tinv()).canonical;
  const auto start = Clock::now();
  for (std::size_t n = 0; n < cs.size(); ++n) {
    const HermitianForm a = a_form({cs[n]});
    const fs::path form_file = scratch() / ("sec7_" + std::to_string(n) + ".json");
    write_json(form_file, to_json(a));
    const auto run = call([&](auto& o, auto& e) { return cli::run_check(form_file.string(), false, o, e); });
    const std::string tag = "c = " + cs[n].to_string();
    ck.expect(run.status == cli::kExitOk, tag + ": check exit " + std::to_string(run.status));
    if (run.status != cli::kExitOk) continue;
    ck.expect(poly_from_json(run.json["det_canonical"]) == expected, tag + ": det canonical");
    ck.expect(poly_from_json(run.json["certificate"]["det_canonical"]) == expected, tag + ": certificate det");
    const LaurentPoly c = poly_from_json(run.json["certificate"]["c_list"][0]);
    ck.expect(cocycle(c) == a(1, 1), tag + ": recovered c does not rebuild the entry");
    replay_round_trip(replay_checks, run.json, form_file, "sec7 " + tag);
    ++replayed;
  }
  const double elapsed = seconds_since(start);
  ck.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream out;
  out << cs.size() << " instances accepted with det canonical " << expected.to_string() << "; " << elapsed
      << " s";
  return {ck.failures.empty(), ck.failures.empty() ? out.str() : ck.failures.front()};
}

Result criterion_3() {
  Checker ck;
  const SurfaceModel s1 = surface_from_json(Json::parse(std::ifstream(fixture("surface_s1.json"))));
  ck.expect(mu(s1) == WallClass{{0, 1}, {1, -1}}, "mu(S1) = " + to_json(mu(s1)).dump());
  ck.expect(lambda_self(s1) == LaurentPoly{{0, 2}, {1, -1}, {-1, -1}},
            "lambda(S1) = " + lambda_self(s1).to_string());
  // The hand computation mu + conj(mu) on the lift 1 - t.
  ck.expect(lambda_self(s1) == one_minus_t() + involve(one_minus_t()), "lambda(S1) != mu + conj(mu)");
  const SurfaceModel sphere =
      surface_from_json(Json::parse(std::ifstream(fixture("surface_embedded_sphere.json"))));
  ck.expect(lambda_self(sphere).is_zero(), "embedded sphere lambda = " + lambda_self(sphere).to_string());
  return {ck.failures.empty(),
          ck.failures.empty() ? "mu(S1) = {0:1, 1:-1}, lambda(S1) = 2 - t - t^-1, embedded sphere lambda = 0"
                              : ck.failures.front()};
}

Result criterion_4() {
  Checker ck;
  std::mt19937_64 rng(20261017);
  const auto start = Clock::now();
  for (int n = 0; n < 1000; ++n) {
    const long lo = static_cast<long>(rng() % 9) - 4;
    const long span = static_cast<long>(rng() % 6);
    const LaurentPoly c = oracle::random_laurent(rng, lo, lo + span, 9);
    const LaurentPoly d = cocycle(c);
    const auto solved = solve_hermitian_zero_aug(d);
    ck.expect(solved.has_value(), "no solution for c = " + c.to_string());
    if (solved) ck.expect(cocycle(*solved) == d, "reconstruction differs for c = " + c.to_string());
  }
  int rejected = 0;
  for (int n = 0; n < 100; ++n) {
    LaurentPoly r = oracle::random_laurent(rng, -3, 3, 9);
    if (augment(r) == 0) r = r + iota(1);
    const LaurentPoly d = r + involve(r);
    const auto solved = solve_hermitian_zero_aug(d);
    ck.expect(!solved, "solution returned for augment " + augment(d).get_str());
    if (!solved) ++rejected;
  }
  const double elapsed = seconds_since(start);
  ck.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream out;
  out << "1000 round trips exact, " << rejected << "/100 nonzero-augmentation inputs rejected; " << elapsed
      << " s";
  return {ck.failures.empty(), ck.failures.empty() ? out.str() : ck.failures.front()};
}

Result criterion_5() {
  Checker ck;
  std::mt19937_64 rng(5);
  const HermitianForm rank2_fixture = a_form({iota(1)});
  const std::vector<HermitianForm> forms = {h2_sum(1), h2_sum(2), rank2_fixture};
  const auto start = Clock::now();
  for (int n = 0; n < 500; ++n) {
    const HermitianForm& a = forms[n % 3];
    const PolyMatrix b = oracle::random_matrix(rng, a.rank(), -2, 2, 2);
    ck.expect(det_chain_check(b, a), "det_chain_check failed at instance " + std::to_string(n));
    // Independent recomputation by permutation expansion.
    const oracle::Mat ob = oracle::from(b);
    const oracle::Poly db = oracle::det(ob);
    const oracle::Poly lhs = oracle::det(oracle::matmul(oracle::matmul(ob, oracle::from(a.matrix())), oracle::star(ob)));
    const oracle::Poly rhs = oracle::mul(oracle::mul(db, oracle::det(oracle::from(a.matrix()))), oracle::conj(db));
    ck.expect(lhs == rhs, "oracle determinant chain failed at instance " + std::to_string(n));
    ck.expect(oracle::to(db) == determinant(b), "determinant disagrees with oracle at instance " + std::to_string(n));
  }
  const double elapsed = seconds_since(start);
  ck.expect(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream out;
  out << "500 base changes against H2, H2^2 and the rank-2 fixture; " << elapsed << " s";
  return {ck.failures.empty(), ck.failures.empty() ? out.str() : ck.failures.front()};
}

Result criterion_6() {
  Checker ck;
  const auto start = Clock::now();
  std::size_t total = 0, units = 0;
  std::array<int, 7> digits{};
  digits.fill(-3);
  while (true) {
    oracle::Poly p;
    for (int i = 0; i < 7; ++i)
      if (digits[i] != 0) p[i - 3] = digits[i];
    const bool brute = oracle::has_bounded_inverse(p);
    const bool fast = is_unit(oracle::to(p)).has_value();
    ck.expect(brute == fast, "disagreement on " + oracle::to(p).to_string());
    ++total;
    if (fast) ++units;
    int i = 0;
    while (i < 7 && digits[i] == 3) digits[i++] = -3;
    if (i == 7) break;
    ++digits[i];
  }
  const double elapsed = seconds_since(start);
  ck.expect(total == 823543, "enumerated " + std::to_string(total));
  ck.expect(units == 14, "found " + std::to_string(units) + " units, expected 14");
  ck.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  std::ostringstream out;
  out << "exhaustive over " << total << " polynomials, " << units << " units, 100% agreement; " << elapsed << " s";
  return {ck.failures.empty(), ck.failures.empty() ? out.str() : ck.failures.front()};
}

Result criterion_7() {
  Checker ck;
  const ChainComplex c = complex_from_json(Json::parse(std::ifstream(fixture("handle_complex.json"))));
  // Listed from the top degree down, as the complex is written.
  auto betti = betti_qt(c);
  std::vector<std::size_t> top_down(betti.rbegin(), betti.rend());
  ck.expect(top_down == std::vector<std::size_t>{1, 0, 0}, "betti (top degree first) mismatch");
  ck.expect(euler_check(c), "euler_check failed");
  const PolyMatrix diag{{one_minus_t(), LaurentPoly{}}, {LaurentPoly{}, one_minus_t()}};
  ck.expect(assoc_eq(torsion_order(diag), one_minus_t() * one_minus_tinv()), "torsion order not associate");
  ck.expect(assoc_eq(torsion_order(diag), surface_order(1)), "torsion order differs from surface order");
  return {ck.failures.empty(),
          ck.failures.empty() ? "betti (C2, C1, C0) = (1, 0, 0), euler check passes, order ~ (1 - t)(1 - t^-1)"
                              : ck.failures.front()};
}

Result criterion_8() {
  Checker ck;
  std::mt19937_64 rng(88);
  double slowest = 0;
  const fs::path target_file = scratch() / "target.json";
  for (int n = 0; n < 100; ++n) {
    const std::size_t g = 1 + n % 2;
    std::vector<LaurentPoly> cs;
    for (std::size_t k = 0; k < g; ++k) cs.push_back(oracle::random_laurent(rng, -2, 2, 2));
    const HermitianForm a = a_form(cs);
    const std::string tag = "instance " + std::to_string(n);
    ck.expect(recognize_a_form(a).has_value(), tag + ": not recognized");
    const fs::path form_file = scratch() / "search_form.json";
    write_json(form_file, to_json(a));
    write_json(target_file, to_json(h2_sum(g)));
    const SearchBounds bounds{g + 1, 2, 2, 1};

    const auto start = Clock::now();
    const auto run = call([&](auto& o, auto& e) {
      return cli::run_search(form_file.string(), target_file.string(), bounds, o, e);
    });
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    ck.expect(elapsed < 10.0, tag + ": " + std::to_string(elapsed) + " s");
    ck.expect(run.status == cli::kExitOk && run.json["status"] == "Found", tag + ": not found");
    if (run.status != cli::kExitOk) continue;

    std::vector<MoveSpec> moves;
    for (const auto& m : run.json["moves"]) moves.push_back(move_from_json(m, "moves"));
    ck.expect(moves.size() <= g + 1, tag + ": too many moves");
    ck.expect(replay_moves(a.matrix(), moves) == h2_sum(g).matrix(), tag + ": moves do not replay");
    const PolyMatrix p = matrix_from_json(Json{{"rows", run.json["P"]["rank"]},
                                               {"cols", run.json["P"]["rank"]},
                                               {"entries", run.json["P"]["entries"]}});
    ck.expect(oracle_congruent(p, a, g), tag + ": P A P* != H2^g");
    ck.expect(is_unit(oracle::to(oracle::det(oracle::from(p)))).has_value(), tag + ": det P not a unit");
    replay_round_trip(replay_checks, run.json, form_file, "search " + tag);
    ++replayed;
  }

  for (const auto& [name, a] : {std::pair{std::string("H2"), h2_sum(1)}, std::pair{std::string("rank-2 fixture"), a_form({iota(1)})}}) {
    const ProbeReport r = conjecture_probe(a, SearchBounds{});
    ck.expect(r.stable.status == SearchStatus::Found && r.direct.status == SearchStatus::Found,
              "probe on " + name + ": " + to_string(r.stable.status) + "/" + to_string(r.direct.status));
  }
  std::ostringstream out;
  out << "100 searches Found within depth g + 1 and replayed exactly, slowest " << slowest
      << " s; probes Found/Found";
  return {ck.failures.empty(), ck.failures.empty() ? out.str() : ck.failures.front()};
}

Result criterion_9() {
  std::ostringstream out;
  out << replayed << " accepted forms replay with exit 0; each single-entry mutation of P exits 1";
  return {replay_checks.failures.empty() && replayed == 106,
          replay_checks.failures.empty() ? out.str() : replay_checks.failures.front()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Result (*)()>> criteria = {
      {"1 rank-2 fixture check", criterion_1},   {"2 instantiated A-forms", criterion_2},
      {"3 Wall calculus fixture", criterion_3},  {"4 Hermitian cocycle round trip", criterion_4},
      {"5 determinant chain", criterion_5},      {"6 unit oracle", criterion_6},
      {"7 homology fixture", criterion_7},       {"8 bounded search", criterion_8},
      {"9 certificate round trip", criterion_9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.first ? "PASS" : "FAIL") << "  criterion " << name << ": " << r.second << '\n';
    if (!r.first) ++failed;
  }
  std::error_code ec;
  fs::remove_all(scratch(), ec);
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
