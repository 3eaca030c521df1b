#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "eac/error.hpp"

namespace {

void sampling_flags(CLI::App& app, eac::cli::Flags& f) {
  app.add_option("--seed", f.seed, "RNG seed; drawn from OS entropy and printed when absent");
  app.add_option("--degrees", f.degrees_file, "degree-sequence file");
  app.add_option("--chain", f.chain, "2swap or 3swap")->capture_default_str();
  app.add_option("--badness", f.badness, "classic or modified")->capture_default_str();
  app.add_flag("--optimized", f.optimized, "targeted proposals");
  app.add_option("--extra-steps", f.extra_steps, "N or auto (ceil(10 ln m))")->capture_default_str();
  app.add_option("--alpha", f.alpha, "quadratic energy parameter for magic squares");
  app.add_option("--energy", f.energy, "strict | linear:C | quadratic:A | wanglandau:G");
  app.add_option("--hubs", f.hubs, "multi-star hub degrees d1,d2,...");
  app.add_option("--format", f.format, "edges or json");
  app.add_option("--max-steps", f.max_steps, "step cap");
  app.add_option("--n", f.n, "size parameter");
  app.add_option("--k", f.k, "subset size");
  app.add_option("--q", f.q, "prime field size")->capture_default_str();
  app.add_option("--sum-squares", f.sum_squares, "lattice target sum of squares");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expand and contract samplers"};
  app.require_subcommand(1);
  eac::cli::Flags flags;
  std::string family;

  auto* sample = app.add_subcommand("sample", "draw one sample");
  sample->add_option("family", family, "graph | multistar | subset | perm | gl | lattice | magic")->required();
  sampling_flags(*sample, flags);

  auto* verify = app.add_subcommand("verify", "compare many samples against an enumeration oracle");
  verify->add_option("family", family, "graph | multistar | subset | perm | gl | lattice | magic")->required();
  sampling_flags(*verify, flags);
  verify->add_option("--samples", flags.samples, "number of samples")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "step-count benchmark");
  std::string bench_target;
  bench->add_option("target", bench_target, "graph")->required()->check(CLI::IsMember({"graph"}));
  bench->add_option("--seed", flags.seed, "RNG seed");
  bench->add_option("--degrees", flags.degrees_file, "degree-sequence file")->required();
  bench->add_option("--badness", flags.badness, "classic or modified")->capture_default_str();
  bench->add_option("--trials", flags.trials, "runs per mode")->capture_default_str();
  bench->add_option("--modes", flags.modes, "comma list of 2swap|3swap with optional +opt")->capture_default_str();
  bench->add_option("--max-steps", flags.max_steps, "step cap");

  auto* analyze = app.add_subcommand("analyze", "graph analysis");
  std::string analysis;
  analyze->add_option("analysis", analysis, "distance")->required()->check(CLI::IsMember({"distance"}));
  analyze->add_option("edges", flags.edges_file, "edge-list file")->required();
  analyze->add_option("--vertex", flags.vertex, "source vertex (default: a maximum-degree vertex)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*sample) eac::cli::sample(family, flags);
    if (*verify) eac::cli::verify(family, flags);
    if (*bench) eac::cli::bench_graph(flags);
    if (*analyze) eac::cli::analyze_distance(flags);
  } catch (const eac::StepCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
