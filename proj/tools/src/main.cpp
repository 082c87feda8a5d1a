#include <iostream>

#include <CLI11.hpp>

#include "superforms_cli/cli.hpp"

int main(int argc, char** argv) {
  using namespace superforms::cli;
  CLI::App app{"Exact verification of supersymmetry relations and cohomology decompositions on invariant forms"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string output;
  std::string model;
  int degree = -1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output,-o", output, "Write the report to this path instead of standard output");

  const char* commands[][2] = {{"check", "Relation tables and super Jacobi identity"},
                               {"cohomology", "Betti tables, decomposition verdicts, transversal Hodge package"},
                               {"harmonic", "Harmonic representatives and the harmonic decomposition"},
                               {"cone", "Cone identification and long exact sequence"},
                               {"all", "Every report above"}};
  for (auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("model", model, "Built-in name (torus2 torus4 su2 h3 h5 su2xr h3xr) or path to a .alg file")
        ->required();
    if (std::string(c[0]) == "harmonic" || std::string(c[0]) == "all")
      sub->add_option("--degree,-k", degree, "Restrict harmonic output to one degree");
    sub->fallthrough();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  RunConfig config;
  config.command = *parse_command(app.get_subcommands().front()->get_name());
  config.model = model;
  config.format = *parse_format(format);
  if (degree >= 0) config.degree = degree;
  if (!output.empty()) config.output = output;
  return run(config, std::cout, std::cerr);
}
