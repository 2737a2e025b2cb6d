#include "jetapprox/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Rational approximation of jets on compact sets"};
  app.require_subcommand(1);

  jetapprox::RunOptions opt;
  std::string scenario, out;
  std::uint64_t seed = 0;
  const char* commands[][2] = {
      {"approx-jet", "approximate a jet by derivatives of one rational function"},
      {"countable", "locally polynomial approximation on a countable set"},
      {"gamma-check", "integration-by-parts defects of a jet"},
      {"metric", "distance between two jets"},
      {"winding", "winding numbers of a closed polyline"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("--scenario", scenario, "scenario JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "CSV output path");
    sub->add_option("--seed", seed, "seed for random oracles");
    sub->add_flag("--verbose", opt.verbose, "progress on stderr");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : jetapprox::kExitValidation;
  }
  const auto* sub = app.get_subcommands().front();
  opt.scenario = scenario;
  if (sub->count("--out")) opt.out = out;
  if (sub->count("--seed")) opt.seed = seed;
  return jetapprox::run(sub->get_name(), opt, std::cerr);
}
