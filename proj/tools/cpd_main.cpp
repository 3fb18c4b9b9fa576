#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpd/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"2-computad toolkit: presentations, cell normal forms, "
               "products, and pullback checks with witnesses"};
  app.require_subcommand(1);

  cpd::RunConfig config;
  std::vector<std::string> args;

  struct Spec {
    const char* name;
    const char* help;
    bool takes_args;
  };
  const Spec specs[] = {
      {"validate", "Parse and validate .cpd files", true},
      {"product", "Binary product of two 2-computads", true},
      {"cells", "Enumerate cells of a 2-computad by degree", true},
      {"pi2", "Enumerate bounded parallel pairs of cells", true},
      {"normalize", "Normal form of a cell expression", true},
      {"check-pullback",
       "Check whether the cell functor preserves the pullback of a cospan", true},
      {"verify-counterexample",
       "Check the standard product square whose cell-level comparison fails",
       false},
  };
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--max-degree", config.max_degree,
                    "Degree bound for cell enumeration")
        ->capture_default_str();
    sub->add_option("--format", config.format, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", config.seed,
                    "Seed reserved for randomized commands");
    if (spec.takes_args) {
      sub->add_option("args", args, ".cpd files and definition names");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string& command = app.get_subcommands().front()->get_name();
  return cpd::run_command(command, args, config, std::cout, std::cerr);
}
