// lcert: certificates for Hermitian forms over Z[t, t^-1].

#include <iostream>

#include <CLI11.hpp>

#include "lcert/cli.hpp"

int main(int argc, char** argv) {
  using lcert::cli::Command;
  lcert::cli::CliConfig config;

  CLI::App app{"Exact certificates for Hermitian forms over Z[t, t^-1]"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", config.output, "Write JSON here instead of standard output");

  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--bounds", config.bounds_file, "JSON bounds file");
    sub->add_option("--depth", config.depth, "Maximum move sequence length");
    sub->add_option("--deg", config.degree, "Transvection exponents lie in [-deg, deg]");
    sub->add_option("--coeff", config.coeff, "Transvection coefficients lie in [-coeff, coeff]");
    sub->add_option("--unit-exp", config.unit_exp, "Unit scale exponents lie in [-K, K]");
  };

  auto* check = app.add_subcommand("check", "Verify a form reduces to H2^g");
  check->add_option("form", config.inputs, "Form JSON")->required()->expected(1);
  check->add_flag("--prenormalize", config.prenormalize, "Rescale by +-t^k before recognition");

  auto* reduce = app.add_subcommand("reduce", "Emit the reduction certificate only");
  reduce->add_option("form", config.inputs, "Form JSON")->required()->expected(1);
  reduce->add_flag("--prenormalize", config.prenormalize, "Rescale by +-t^k before recognition");

  auto* wall = app.add_subcommand("wall", "Evaluate mu and lambda for a surface model");
  wall->add_option("surface", config.inputs, "Surface JSON")->required()->expected(1);

  auto* homology = app.add_subcommand("homology", "Betti numbers over Q(t) and torsion orders");
  homology->add_option("complex", config.inputs, "Chain complex JSON")->required()->expected(1);

  auto* search = app.add_subcommand("search", "Bounded congruence search between two forms");
  search->add_option("forms", config.inputs, "Source and target form JSON")->required()->expected(2);
  add_bounds(search);

  auto* probe = app.add_subcommand("probe", "Compare stable and direct bounded searches to H2^g");
  probe->add_option("form", config.inputs, "Form JSON of rank 2 or 4")->required()->expected(1);
  add_bounds(probe);

  auto* replay = app.add_subcommand("replay", "Re-verify a certificate or search outcome");
  replay->add_option("files", config.inputs, "Certificate (or outcome) JSON, then form JSON")
      ->required()
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lcert::cli::kExitMalformed;
  }

  if (*check) config.command = Command::Check;
  if (*reduce) config.command = Command::Reduce;
  if (*wall) config.command = Command::Wall;
  if (*homology) config.command = Command::Homology;
  if (*search) config.command = Command::Search;
  if (*probe) config.command = Command::Probe;
  if (*replay) config.command = Command::Replay;

  return lcert::cli::run(config, std::cout, std::cerr);
}
