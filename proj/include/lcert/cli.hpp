// Command implementations behind the `lcert` executable. Each returns the
// process exit status: 0 accept/success, 1 principled rejection, 2 malformed
// input or usage error. JSON goes to `out`; one-line human summaries and
// diagnostics go to `err`.

#ifndef LCERT_CLI_HPP
#define LCERT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lcert/search.hpp"

namespace lcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitMalformed = 2;

enum class Command { Check, Reduce, Wall, Homology, Search, Probe, Replay };

struct CliConfig {
  Command command = Command::Check;
  std::vector<std::string> inputs;
  std::string output;  // empty = standard output
  std::optional<std::string> bounds_file;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> coeff;
  std::optional<std::size_t> unit_exp;
  bool prenormalize = false;
};

int run_check(const std::string& form_path, bool prenormalize, std::ostream& out, std::ostream& err);
int run_reduce(const std::string& form_path, bool prenormalize, std::ostream& out, std::ostream& err);
int run_wall(const std::string& surface_path, std::ostream& out, std::ostream& err);
int run_homology(const std::string& complex_path, std::ostream& out, std::ostream& err);
int run_search(const std::string& a_path, const std::string& target_path, const SearchBounds& bounds,
               std::ostream& out, std::ostream& err);
int run_probe(const std::string& a_path, const SearchBounds& bounds, std::ostream& out,
              std::ostream& err);
/// Verifies either a main-strategy certificate or a search outcome against
/// the form file, recomputing every check from scratch.
int run_replay(const std::string& cert_path, const std::string& form_path, std::ostream& out,
               std::ostream& err);

/// Resolves bounds from defaults, an optional bounds file, then flags.
SearchBounds resolve_bounds(const CliConfig& config);

/// Dispatches a parsed configuration, writing to config.output if set.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lcert::cli

#endif  // LCERT_CLI_HPP
