// Command-line front end: subcommand + optional config file, flags override.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oudisp/errors.hpp"
#include "oudisp/runconfig.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for Ornstein-Uhlenbeck Schroedinger groups, "
               "hypoelliptic Gramians and sharp dispersive bounds"};
  app.require_subcommand(1);

  std::string config_path, output, format, engine;
  std::uint64_t seed = 0;
  bool have_seed = false, quiet = false;

  for (const char* name :
       {"check-system", "propagate", "dispersive-scan", "uncertainty-scan",
        "oscillator-compare", "kernel-check"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "config file (key = value lines)");
    sub->add_option("--output", output, "report path (overrides config)");
    sub->add_option("--format", format, "csv|json (overrides config)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--engine", engine, "czt|direct|hermite (overrides config)")
        ->check(CLI::IsMember({"czt", "direct", "hermite"}));
    sub->add_option("--seed", seed, "seed for randomized scans (overrides config)")
        ->each([&](const std::string&) { have_seed = true; });
    sub->add_flag("--quiet", quiet, "suppress progress output");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    oudisp::RunConfig cfg;
    if (!config_path.empty()) cfg = oudisp::parse_config_file(config_path);
    cfg.command = oudisp::command_from_name(app.get_subcommands().front()->get_name());
    if (!output.empty()) cfg.output = output;
    if (format == "csv") cfg.format = oudisp::ReportFormat::CSV;
    if (format == "json") cfg.format = oudisp::ReportFormat::JSON;
    if (engine == "czt") cfg.method = oudisp::EngineChoice::CZT;
    if (engine == "direct") cfg.method = oudisp::EngineChoice::DIRECT;
    if (engine == "hermite") cfg.method = oudisp::EngineChoice::HERMITE;
    if (have_seed) cfg.seed = seed;
    if (quiet) cfg.quiet = true;
    return oudisp::run(cfg);
  } catch (const oudisp::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const oudisp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";  // message carries the error name
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
