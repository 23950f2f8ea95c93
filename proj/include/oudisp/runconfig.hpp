#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "oudisp/common.hpp"

namespace oudisp {

enum class Command {
  CheckSystem,
  Propagate,
  DispersiveScan,
  UncertaintyScan,
  OscillatorCompare,
  KernelCheck,
};

enum class ReportFormat { CSV, JSON };

// czt -> CHIRP_FT (chirp-Z transform engine), direct -> QUADRATURE,
// hermite -> HERMITE.
enum class EngineChoice { CZT, DIRECT, HERMITE };

struct DatumSpec {
  enum class Kind { GAUSSIAN, HERMITE, FILE };
  Kind kind = Kind::GAUSSIAN;
  cplx beta{0.5, 0.0};
  std::vector<int> hermite_index{0};
  std::string path;
};

struct RunConfig {
  Command command = Command::CheckSystem;
  std::string system = "ou";  // ou | kolmogorov | smoluchowski-kramers | explicit
  int system_m = 1;           // ou preset dimension
  int system_n = 1;           // kolmogorov block size
  std::optional<Eigen::MatrixXd> Q;  // explicit system
  std::optional<Eigen::MatrixXd> B;
  int grid_m = 1;
  double grid_L = 16.0;
  int grid_N = 1024;
  DatumSpec datum;
  std::vector<double> times{1.0};
  EngineChoice method = EngineChoice::CZT;
  std::vector<double> p_values{1.0, 4.0 / 3.0, 2.0};
  int n_states = 0;  // extra random Gaussian states in uncertainty-scan
  std::uint64_t seed = 1;
  std::string output = "report.csv";
  ReportFormat format = ReportFormat::CSV;
  bool quiet = false;
};

std::string command_name(Command c);
Command command_from_name(const std::string& name);

/// Key-value config text (see README for the grammar); throws ConfigError
/// naming the offending field.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical form; parse(serialize(cfg)) reproduces cfg exactly.
std::string serialize_config(const RunConfig& cfg);

/// Executes the configured pipeline and writes the report file.
/// Returns 0; validation problems throw ConfigError, numerical ones
/// throw oudisp::Error subclasses.
int run(const RunConfig& cfg);

}  // namespace oudisp
