#include "lcert/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "lcert/forms.hpp"
#include "lcert/homology.hpp"
#include "lcert/serialize.hpp"
#include "lcert/wallcalc.hpp"

namespace lcert::cli {

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string poly_list(const std::vector<LaurentPoly>& ps) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + "]";
}

// Runs a command body, mapping malformed input to exit status 2.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NotHermitian& e) {
    err << "error: not Hermitian: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitMalformed;
}

int replay_certificate(const Json& cert_json, const HermitianForm& a, std::ostream& out,
                       std::ostream& err) {
  const CertificateRecord cert = certificate_from_json(cert_json);
  if (cert.p.rows() != a.rank() || 2 * cert.genus != a.rank()) {
    err << "error: certificate has rank " << cert.p.rows() << " and g = " << cert.genus
        << " but the form has rank " << a.rank() << '\n';
    return kExitMalformed;
  }

  Json report = {{"kind", "certificate"}};
  auto reject = [&](const std::string& gate, const std::string& detail) {
    report["result"] = "fail";
    report["failed_gate"] = gate;
    report["detail"] = detail;
    emit(out, report);
    err << "replay failed: " << detail << '\n';
    return kExitReject;
  };

  const PolyMatrix replayed = cert.p * a.matrix() * conjugate_transpose(cert.p);
  const HermitianForm target = h2_sum(cert.genus);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      if (replayed(i, j) != target(i, j))
        return reject("congruence", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") of P A P* is " + replayed(i, j).to_string() +
                                        ", expected " + target(i, j).to_string());
    }
  }
  const LaurentPoly det_p = determinant(cert.p);
  if (!is_unit(det_p)) return reject("base_change", "det P = " + det_p.to_string() + " is not a unit");
  const LaurentPoly det_a = determinant(a);
  if (!assoc_eq(det_a, surface_order(cert.genus)))
    return reject("determinant", "det A = " + det_a.to_string() +
                                     " is not associate to (1 - t)^g (1 - t^-1)^g");
  if (normalize_associate(det_a).canonical != cert.det_canonical)
    return reject("det_canonical", "recorded det_canonical " + cert.det_canonical.to_string() +
                                       " differs from " +
                                       normalize_associate(det_a).canonical.to_string());
  report["result"] = "pass";
  report["g"] = std::to_string(cert.genus);
  emit(out, report);
  err << "replay passed: P A P* = H2^" << cert.genus << '\n';
  return kExitOk;
}

int replay_outcome(const Json& outcome, const HermitianForm& a, std::ostream& out,
                   std::ostream& err) {
  auto status = outcome.find("status");
  if (status == outcome.end() || *status != "Found") {
    err << "error: only Found search outcomes can be replayed\n";
    return kExitMalformed;
  }
  auto target_it = outcome.find("target");
  if (target_it == outcome.end()) throw ParseError("<root>: missing field 'target'");
  const HermitianForm target = form_from_json(*target_it, "target");
  if (target.rank() != a.rank()) {
    err << "error: outcome target has rank " << target.rank() << " but the form has rank "
        << a.rank() << '\n';
    return kExitMalformed;
  }
  const Json& moves_json = outcome.at("moves");
  if (!moves_json.is_array()) throw ParseError("moves: expected an array");
  std::vector<MoveSpec> moves;
  for (std::size_t i = 0; i < moves_json.size(); ++i)
    moves.push_back(move_from_json(moves_json[i], "moves[" + std::to_string(i) + "]"));

  Json report = {{"kind", "search_outcome"}};
  const PolyMatrix replayed = replay_moves(a.matrix(), moves);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      if (replayed(i, j) != target(i, j)) {
        std::string detail = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") after the moves is " + replayed(i, j).to_string() +
                             ", expected " + target(i, j).to_string();
        report["result"] = "fail";
        report["detail"] = detail;
        emit(out, report);
        err << "replay failed: " << detail << '\n';
        return kExitReject;
      }
    }
  }
  // The emitted P must agree with the moves on its own as well.
  if (auto p_it = outcome.find("P"); p_it != outcome.end() && !p_it->is_null()) {
    if (!p_it->is_object() || !p_it->contains("rank")) throw ParseError("P: missing field 'rank'");
    const PolyMatrix p = matrix_from_json(
        Json{{"rows", (*p_it)["rank"]}, {"cols", (*p_it)["rank"]}, {"entries", p_it->value("entries", Json())}},
        "P");
    if (p.rows() != a.rank() || p.cols() != a.rank()) throw ParseError("P: wrong shape");
    std::string detail;
    if (!is_unit(determinant(p))) {
      detail = "det(P) = " + determinant(p).to_string() + " is not a unit";
    } else {
      const PolyMatrix image = p * a.matrix() * conjugate_transpose(p);
      for (std::size_t i = 0; i < a.rank() && detail.empty(); ++i)
        for (std::size_t j = 0; j < a.rank() && detail.empty(); ++j)
          if (image(i, j) != target(i, j))
            detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") of P A P* is " +
                     image(i, j).to_string() + ", expected " + target(i, j).to_string();
    }
    if (!detail.empty()) {
      report["result"] = "fail";
      report["detail"] = detail;
      emit(out, report);
      err << "replay failed: " << detail << '\n';
      return kExitReject;
    }
  }
  report["result"] = "pass";
  report["moves"] = std::to_string(moves.size());
  emit(out, report);
  err << "replay passed: " << moves.size() << " moves reach the target\n";
  return kExitOk;
}

}  // namespace

int run_check(const std::string& form_path, bool prenormalize, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const HermitianForm a = form_from_json(read_json(form_path));
    const Verdict v = verify_main_strategy(a, prenormalize);
    emit(out, to_json(v));
    if (v.accepted) {
      err << "accept: g = " << v.certificate->genus << ", c = " << poly_list(v.certificate->c_list)
          << "; " << v.label << '\n';
      return kExitOk;
    }
    for (const auto& g : v.gates) {
      if (g.name == v.failed_gate) err << "reject: " << g.detail << '\n';
    }
    return kExitReject;
  });
}

int run_reduce(const std::string& form_path, bool prenormalize, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const HermitianForm a = form_from_json(read_json(form_path));
    auto cert = reduce_to_standard(a, prenormalize);
    if (!cert) {
      err << "reject: " << recognize_a_form_detailed(a).failure << '\n';
      return kExitReject;
    }
    emit(out, to_json(*cert));
    return kExitOk;
  });
}

int run_wall(const std::string& surface_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SurfaceModel s = surface_from_json(read_json(surface_path));
    const WallClass m = mu(s);
    const LaurentPoly lambda = lambda_self(s);
    Json j = {{"label", s.label},
              {"mu", to_json(m)},
              {"mu_plus_conj", to_json(hermitize(m))},
              {"lambda", to_json(lambda)}};
    if (pairing_shape_applicable(s)) {
      j["shape_check"] = {{"applicable", true}, {"c", to_json(pairing_shape_check(s))}};
    } else {
      j["shape_check"] = {{"applicable", false}, {"c", nullptr}};
    }
    emit(out, j);
    err << "lambda = " << lambda.to_string() << '\n';
    return kExitOk;
  });
}

int run_homology(const std::string& complex_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ChainComplex c = complex_from_json(read_json(complex_path));
    const auto betti = betti_qt(c);
    Json b = Json::array();
    for (auto v : betti) b.push_back(std::to_string(v));
    Json orders = Json::array();
    for (std::size_t i = 1; i <= c.top_degree(); ++i) {
      const PolyMatrix& d = c.differential(i);
      if (d.is_square() && d.rows() > 0 && rank_qt(d) == d.rows())
        orders.push_back({{"degree", std::to_string(i)}, {"order", to_json(torsion_order(d))}});
    }
    emit(out, {{"betti_by_degree", b}, {"euler_check", euler_check(c)}, {"torsion_orders", orders}});
    return kExitOk;
  });
}

int run_search(const std::string& a_path, const std::string& target_path, const SearchBounds& bounds,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const HermitianForm a = form_from_json(read_json(a_path));
    const HermitianForm target = form_from_json(read_json(target_path));
    const SearchOutcome o = bounded_isometry_search(a, target, bounds);
    Json j = to_json(o);
    j["bounds"] = to_json(bounds);
    j["target"] = to_json(target);
    emit(out, j);
    err << to_string(o.status);
    if (o.status == SearchStatus::Found) err << " with " << o.moves.size() << " moves";
    else err << ": " << o.reason;
    err << '\n';
    return o.status == SearchStatus::Found ? kExitOk : kExitReject;
  });
}

int run_probe(const std::string& a_path, const SearchBounds& bounds, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const HermitianForm a = form_from_json(read_json(a_path));
    const ProbeReport r = conjecture_probe(a, bounds);
    Json j = to_json(r);
    j["bounds"] = to_json(bounds);
    emit(out, j);
    err << "stable: " << to_string(r.stable.status) << ", direct: " << to_string(r.direct.status);
    if (r.candidate) err << " (candidate for deeper bounds; not a counterexample)";
    err << '\n';
    return kExitOk;
  });
}

int run_replay(const std::string& cert_path, const std::string& form_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Json cert = read_json(cert_path);
    const HermitianForm a = form_from_json(read_json(form_path));
    if (!cert.is_object()) throw ParseError(cert_path + ": expected an object");
    // A check verdict wraps its certificate; accept either.
    if (cert.contains("moves")) return replay_outcome(cert, a, out, err);
    if (cert.contains("certificate")) {
      if (cert["certificate"].is_null()) throw ParseError("certificate: verdict carries no certificate");
      return replay_certificate(cert["certificate"], a, out, err);
    }
    return replay_certificate(cert, a, out, err);
  });
}

SearchBounds resolve_bounds(const CliConfig& config) {
  SearchBounds b;
  if (config.bounds_file) b = bounds_from_json(read_json(*config.bounds_file), b);
  if (config.depth) b.max_depth = *config.depth;
  if (config.degree) b.degree = *config.degree;
  if (config.coeff) b.coeff = *config.coeff;
  if (config.unit_exp) b.unit_exp = *config.unit_exp;
  return b;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      err << "error: cannot write " << config.output << '\n';
      return kExitMalformed;
    }
    sink = &file;
  }
  auto need = [&](std::size_t n) {
    if (config.inputs.size() != n) {
      err << "error: expected " << n << " input file(s), got " << config.inputs.size() << '\n';
      return false;
    }
    return true;
  };
  const auto& in = config.inputs;
  switch (config.command) {
    case Command::Check:
      return need(1) ? run_check(in[0], config.prenormalize, *sink, err) : kExitMalformed;
    case Command::Reduce:
      return need(1) ? run_reduce(in[0], config.prenormalize, *sink, err) : kExitMalformed;
    case Command::Wall:
      return need(1) ? run_wall(in[0], *sink, err) : kExitMalformed;
    case Command::Homology:
      return need(1) ? run_homology(in[0], *sink, err) : kExitMalformed;
    case Command::Search:
    case Command::Probe: {
      SearchBounds b;
      const int status = guarded(err, [&] {
        b = resolve_bounds(config);
        return kExitOk;
      });
      if (status != kExitOk) return status;
      if (config.command == Command::Search)
        return need(2) ? run_search(in[0], in[1], b, *sink, err) : kExitMalformed;
      return need(1) ? run_probe(in[0], b, *sink, err) : kExitMalformed;
    }
    case Command::Replay:
      return need(2) ? run_replay(in[0], in[1], *sink, err) : kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace lcert::cli
