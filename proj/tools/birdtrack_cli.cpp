#include <iostream>

#include <CLI11.hpp>

#include "birdtrack/cli.hpp"

using birdtrack::cli::CommandConfig;

int main(int argc, char** argv) {
  CLI::App app{"Singlet construction and verification for SU(N) mixed tensor powers"};
  app.require_subcommand(1);
  CommandConfig cfg;
  std::string format = "text";

  for (const auto& name : birdtrack::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--k", cfg.k, "tensor power (Mixed(k,k))");
    sub->add_option("--m", cfg.m, "fundamental factors");
    sub->add_option("--n", cfg.n, "antifundamental factors");
    sub->add_option("--N", cfg.N, "dimension of V");
    sub->add_option("--source", cfg.source, "builtin, trace, trace+orthogonalize or permutation");
    sub->add_option("--format", format, "json, latex or text");
    sub->add_option("--seed", cfg.seed, "seed for unitary sampling");
    sub->add_option("--output", cfg.output, "write output to this path");
    sub->callback([&cfg, name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
    cfg.format = birdtrack::cli::parse_format(format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << birdtrack::cli::error_json("config", e.get_name(), e.what()).dump() << "\n";
    return 2;
  } catch (const birdtrack::Error& e) {
    std::cerr << birdtrack::cli::error_json("config", birdtrack::to_string(e.code()), e.what()).dump() << "\n";
    return 2;
  }
  return birdtrack::cli::run(cfg, std::cout, std::cerr);
}
