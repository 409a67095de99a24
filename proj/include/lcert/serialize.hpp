// JSON encodings for every file the command-line tool reads or writes.
//
// Integers are always emitted as decimal strings; readers also accept JSON
// integers. A LaurentPoly is an object mapping exponent to coefficient, e.g.
// {"0": "1", "1": "-1"} for 1 - t. Matrices are row-major entry lists.

#ifndef LCERT_SERIALIZE_HPP
#define LCERT_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lcert/forms.hpp"
#include "lcert/homology.hpp"
#include "lcert/laurent.hpp"
#include "lcert/search.hpp"
#include "lcert/wallcalc.hpp"

namespace lcert {

using Json = nlohmann::ordered_json;

/// Malformed input. The message starts with the JSON path of the offending
/// value, e.g. "entries[2]: ...".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Integer& n);
Json to_json(const LaurentPoly& p);
Json to_json(const UnitWitness& u);
Json to_json(const PolyMatrix& m);  // {"rows", "cols", "entries"}
Json to_json(const HermitianForm& a);  // {"rank", "entries"}
Json to_json(const MainStrategyCertificate& c);
Json to_json(const Verdict& v);
Json to_json(const WallClass& w);
Json to_json(const MoveSpec& m);
Json to_json(const SearchBounds& b);
Json to_json(const SearchOutcome& o);
Json to_json(const ProbeReport& r);

Integer integer_from_json(const Json& j, const std::string& path);
LaurentPoly poly_from_json(const Json& j, const std::string& path = "");
PolyMatrix matrix_from_json(const Json& j, const std::string& path = "");
/// Throws ParseError; a non-Hermitian matrix is reported as a ParseError too.
HermitianForm form_from_json(const Json& j, const std::string& path = "");
/// Parses the P, g and det_canonical fields of a certificate.
struct CertificateRecord {
  std::size_t genus = 0;
  std::vector<LaurentPoly> c_list;
  PolyMatrix p;
  LaurentPoly det_canonical;
};
CertificateRecord certificate_from_json(const Json& j);
SurfaceModel surface_from_json(const Json& j);
/// {"ranks": [top .. 0], "differentials": [d_top .. d_1]}, the order in which
/// a chain complex is written left to right.
ChainComplex complex_from_json(const Json& j);
MoveSpec move_from_json(const Json& j, const std::string& path);
SearchBounds bounds_from_json(const Json& j, SearchBounds defaults = {});

}  // namespace lcert

#endif  // LCERT_SERIALIZE_HPP
