#include "oudisp/runconfig.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "oudisp/errors.hpp"
#include "oudisp/estimates.hpp"
#include "oudisp/field_io.hpp"
#include "oudisp/kernels.hpp"
#include "oudisp/lti.hpp"
#include "oudisp/parallel.hpp"
#include "oudisp/propagator.hpp"

namespace oudisp {

namespace {

// ---------------------------------------------------------------- parsing

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(trim(cur));
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "'" + v + "' is not a number");
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "'" + v + "' is not an integer");
  }
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const std::string& item : split(v, ','))
    if (!item.empty()) out.push_back(parse_double(key, item));
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

// Matrix literal [[a,b],[c,d]].
Eigen::MatrixXd parse_matrix(const std::string& key, const std::string& v) {
  std::string s = trim(v);
  if (s.size() < 4 || s.front() != '[' || s.back() != ']')
    throw ConfigError(key, "matrix literal must look like [[a,b],[c,d]]");
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto open = s.find('[', pos);
    if (open == std::string::npos) break;
    const auto close = s.find(']', open);
    if (close == std::string::npos) throw ConfigError(key, "unbalanced brackets");
    std::vector<double> row;
    for (const std::string& item : split(s.substr(open + 1, close - open - 1), ','))
      row.push_back(parse_double(key, item));
    rows.push_back(row);
    pos = close + 1;
  }
  if (rows.empty()) throw ConfigError(key, "empty matrix");
  const std::size_t cols = rows.front().size();
  Eigen::MatrixXd M(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ConfigError(key, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
  }
  return M;
}

DatumSpec parse_datum(const std::string& key, const std::string& v) {
  const auto open = v.find('(');
  if (open == std::string::npos || v.back() != ')')
    throw ConfigError(key, "expected gaussian(...), hermite(...) or file(...)");
  const std::string tag = trim(v.substr(0, open));
  const std::string args = v.substr(open + 1, v.size() - open - 2);
  DatumSpec d;
  if (tag == "gaussian") {
    d.kind = DatumSpec::Kind::GAUSSIAN;
    const auto parts = split(args, ',');
    if (parts.empty() || parts.size() > 2)
      throw ConfigError(key, "gaussian takes (re) or (re,im)");
    d.beta = cplx(parse_double(key, parts[0]),
                  parts.size() == 2 ? parse_double(key, parts[1]) : 0.0);
  } else if (tag == "hermite") {
    d.kind = DatumSpec::Kind::HERMITE;
    d.hermite_index.clear();
    for (const std::string& item : split(args, ','))
      d.hermite_index.push_back(static_cast<int>(parse_int(key, item)));
    if (d.hermite_index.empty()) throw ConfigError(key, "hermite needs an index");
  } else if (tag == "file") {
    d.kind = DatumSpec::Kind::FILE;
    d.path = trim(args);
    if (d.path.empty()) throw ConfigError(key, "file needs a path");
  } else {
    throw ConfigError(key, "unknown datum kind '" + tag + "'");
  }
  return d;
}

// ------------------------------------------------------------- formatting

std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_sci(double x) {  // 17 significant digits, scientific
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

std::string matrix_literal(const Eigen::MatrixXd& M) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    s += "[";
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      s += fmt_g17(M(i, j));
      if (j + 1 < M.cols()) s += ",";
    }
    s += "]";
    if (i + 1 < M.rows()) s += ",";
  }
  return s + "]";
}

std::string datum_literal(const DatumSpec& d) {
  switch (d.kind) {
    case DatumSpec::Kind::GAUSSIAN:
      return "gaussian(" + fmt_g17(d.beta.real()) + "," + fmt_g17(d.beta.imag()) + ")";
    case DatumSpec::Kind::HERMITE: {
      std::string s = "hermite(";
      for (std::size_t i = 0; i < d.hermite_index.size(); ++i) {
        s += std::to_string(d.hermite_index[i]);
        if (i + 1 < d.hermite_index.size()) s += ",";
      }
      return s + ")";
    }
    case DatumSpec::Kind::FILE: return "file(" + d.path + ")";
  }
  return "";
}

// ----------------------------------------------------------------- report

using Cell = std::variant<double, long long, bool, std::string>;

struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_csv(const Cell& c) {
  if (std::holds_alternative<double>(c)) return fmt_sci(std::get<double>(c));
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? "true" : "false";
  return std::get<std::string>(c);
}

void write_report(const Report& rep, const RunConfig& cfg) {
  std::ofstream out(cfg.output, std::ios::trunc);
  if (!out) throw ConfigError("output", "cannot open '" + cfg.output + "' for writing");
  if (cfg.format == ReportFormat::CSV) {
    out << "# oudisp-report v1 " << rep.command << "\n";
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
      out << rep.columns[i] << (i + 1 < rep.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : rep.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << cell_csv(row[i]) << (i + 1 < row.size() ? "," : "");
      out << "\n";
    }
  } else {
    nlohmann::json j;
    j["schema"] = "oudisp-report";
    j["version"] = 1;
    j["command"] = rep.command;
    j["columns"] = rep.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& c : row)
        std::visit([&r](const auto& v) { r.push_back(v); }, c);
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  }
  if (!out) throw ConfigError("output", "write to '" + cfg.output + "' failed");
}

// ------------------------------------------------------------- pipelines

SystemSpec make_system(const RunConfig& cfg) {
  if (cfg.system == "ou") return ou_system(cfg.system_m);
  if (cfg.system == "kolmogorov") return kolmogorov_system(cfg.system_n);
  if (cfg.system == "smoluchowski-kramers") return smoluchowski_kramers_system();
  if (cfg.system == "explicit") {
    if (!cfg.Q || !cfg.B)
      throw ConfigError("system", "explicit system needs system.Q and system.B");
    return SystemSpec(*cfg.Q, *cfg.B);
  }
  throw ConfigError("system", "unknown system '" + cfg.system + "'");
}

GridSpec make_grid(const RunConfig& cfg) {
  try {
    return GridSpec(cfg.grid_m, cfg.grid_L, cfg.grid_N);
  } catch (const Error& e) {
    throw ConfigError("grid", e.what());
  }
}

// Initial datum as a φ-gauge field (propagator input).
ComplexField datum_phi(const RunConfig& cfg, const GridSpec& grid) {
  switch (cfg.datum.kind) {
    case DatumSpec::Kind::GAUSSIAN:
      return from_psi_gauge(gaussian_state_eval(
          GaussianState(grid.m, cfg.datum.beta), grid));
    case DatumSpec::Kind::HERMITE: {
      if (static_cast<int>(cfg.datum.hermite_index.size()) != grid.m)
        throw ConfigError("datum", "hermite index rank must equal grid.m");
      return hermite_field(grid, cfg.datum.hermite_index);
    }
    case DatumSpec::Kind::FILE: {
      ComplexField f = load_field(cfg.datum.path);
      if (!(f.grid() == grid))
        throw ConfigError("datum", "field file grid does not match config grid");
      return f.gauge() == Gauge::PSI ? from_psi_gauge(f) : f;
    }
  }
  throw ConfigError("datum", "unreachable");
}

// Initial datum as a plain L² function (oscillator input): Gaussian
// e^{-β|x|²} or the Hermite function He_k e^{-|x|²/4}.
ComplexField datum_plain(const RunConfig& cfg, const GridSpec& grid) {
  switch (cfg.datum.kind) {
    case DatumSpec::Kind::GAUSSIAN: {
      ComplexField psi = gaussian_state_eval(GaussianState(grid.m, cfg.datum.beta), grid);
      return ComplexField(grid, Gauge::PHI, psi.samples());
    }
    case DatumSpec::Kind::HERMITE: {
      if (static_cast<int>(cfg.datum.hermite_index.size()) != grid.m)
        throw ConfigError("datum", "hermite index rank must equal grid.m");
      const ComplexField he = hermite_field(grid, cfg.datum.hermite_index);
      const ComplexField psi = to_psi_gauge(he);
      return ComplexField(grid, Gauge::PHI, psi.samples());
    }
    case DatumSpec::Kind::FILE: {
      ComplexField f = load_field(cfg.datum.path);
      if (!(f.grid() == grid))
        throw ConfigError("datum", "field file grid does not match config grid");
      return ComplexField(grid, Gauge::PHI, f.samples());
    }
  }
  throw ConfigError("datum", "unreachable");
}

PropagationMethod to_method(EngineChoice e) {
  switch (e) {
    case EngineChoice::CZT: return PropagationMethod::CHIRP_FT;
    case EngineChoice::DIRECT: return PropagationMethod::QUADRATURE;
    case EngineChoice::HERMITE: return PropagationMethod::HERMITE;
  }
  return PropagationMethod::CHIRP_FT;
}

Report run_check_system(const RunConfig& cfg) {
  const SystemSpec sys = make_system(cfg);
  Report rep;
  rep.command = command_name(cfg.command);
  rep.columns = {"system", "m", "t", "det_Qt", "min_eig", "kalman_rank",
                 "hypoelliptic", "spectral_abscissa", "has_invariant_measure"};
  for (double t : cfg.times) {
    const HypoReport h = hypoellipticity_check(sys, t);
    rep.rows.push_back({cfg.system, static_cast<long long>(sys.m), t, h.det_Qt,
                        h.min_eig, static_cast<long long>(h.kalman_rank),
                        h.hypoelliptic, h.spectral_abscissa,
                        h.has_invariant_measure});
  }
  return rep;
}

Report run_propagate(const RunConfig& cfg) {
  if (cfg.system != "ou")
    throw ConfigError("system", "propagate supports the ou preset only");
  const GridSpec grid = make_grid(cfg);
  const ComplexField phi = datum_phi(cfg, grid);
  const PropagationMethod method = to_method(cfg.method);
  const std::filesystem::path out(cfg.output);
  const std::string stem = (out.parent_path() / out.stem()).string();

  Report rep;
  rep.command = command_name(cfg.command);
  rep.columns = {"index", "t",       "norm_gauss_in", "norm_gauss_out",
                 "psi_tail_ratio", "field_file"};
  const double nin = norm_gauss(phi);
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    const TimePoint tp(cfg.times[i]);
    const ComplexField f = propagate(phi, tp, method);
    const std::string file = stem + "_t" + std::to_string(i) + ".fld";
    save_field(f, file);
    rep.rows.push_back({static_cast<long long>(i), cfg.times[i], nin,
                        norm_gauss(f), tail_peak_ratio(to_psi_gauge(f)), file});
    if (!cfg.quiet)
      std::cout << "t=" << cfg.times[i] << " -> " << file << "\n";
  }
  return rep;
}

Report run_dispersive_scan(const RunConfig& cfg) {
  const GridSpec grid = make_grid(cfg);
  const ComplexField phi = datum_phi(cfg, grid);
  const std::size_t np = cfg.p_values.size(), nt = cfg.times.size();
  std::vector<DispersionRecord> recs(np * nt);
  parallel_for(np * nt, [&](std::size_t i) {
    const double p = cfg.p_values[i / nt];
    const TimePoint tp(cfg.times[i % nt]);
    recs[i] = dispersive_report(phi, p, tp);
  });
  Report rep;
  rep.command = command_name(cfg.command);
  rep.columns = {"p", "p_prime", "t", "lhs", "rhs", "ratio"};
  for (const auto& r : recs)
    rep.rows.push_back({r.p, r.p_prime, r.t, r.lhs, r.rhs, r.ratio});
  return rep;
}

Report run_uncertainty_scan(const RunConfig& cfg) {
  std::vector<cplx> betas;
  if (cfg.datum.kind == DatumSpec::Kind::GAUSSIAN) betas.push_back(cfg.datum.beta);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> re(0.05, 2.0), im(-1.0, 1.0);
  for (int i = 0; i < cfg.n_states; ++i) betas.emplace_back(re(rng), im(rng));
  if (betas.empty()) throw ConfigError("datum", "uncertainty-scan needs a gaussian datum");

  const std::size_t nb = betas.size(), nt = cfg.times.size();
  std::vector<UncertaintyRecord> recs(nb * nt);
  parallel_for(nb * nt, [&](std::size_t i) {
    recs[i] = uncertainty_product(betas[i / nt], cfg.times[i % nt]);
  });
  Report rep;
  rep.command = command_name(cfg.command);
  rep.columns = {"re_beta0", "im_beta0", "s",         "a_max",
                 "b_max",    "product",  "threshold", "forces_zero"};
  for (const auto& r : recs)
    rep.rows.push_back({r.beta0.real(), r.beta0.imag(), r.s, r.a_max, r.b_max,
                        r.product, r.threshold,
                        hardy_predicate(r.a_max, r.b_max, r.s)});
  return rep;
}

Report run_oscillator_compare(const RunConfig& cfg) {
  const GridSpec grid = make_grid(cfg);
  const ComplexField u0 = datum_plain(cfg, grid);
  Report rep;
  rep.command = command_name(cfg.command);
  rep.columns = {"t", "route_rel_err", "l2_in", "l2_gauge", "l2_kernel"};
  const double l2_in = norm_l2(u0);
  for (double t : cfg.times) {
    const TimePoint tp(t);
    const ComplexField ug = oscillator_propagate(u0, tp, OscillatorRoute::GAUGE);
    const ComplexField uk = oscillator_propagate(u0, tp, OscillatorRoute::KERNEL);
    // Compare on |x| <= L/2; the gauge factor amplifies grid-edge noise.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ug.size(); ++i) {
      if (grid.radius2(i) > 0.25 * grid.L * grid.L * grid.m) continue;
      num += std::norm(ug[i] - uk[i]);
      den += std::norm(ug[i]);
    }
    rep.rows.push_back({t, den > 0 ? std::sqrt(num / den) : 0.0, l2_in,
                        norm_l2(ug), norm_l2(uk)});
  }
  return rep;
}

Report run_kernel_check(const RunConfig& cfg) {
  const SystemSpec sys = make_system(cfg);
  const GridSpec grid = make_grid(cfg);
  if (grid.m != sys.m)
    throw ConfigError("grid", "grid.m must equal the system dimension");
  Report rep;
  rep.command = command_name(cfg.command);
  rep.columns = {"check", "t", "observed", "expected", "error"};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);

  const double cell = std::pow(grid.h(), grid.m);
  for (double t : cfg.times) {
    const HormanderKernel G(sys, t);
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(sys.m);
    double mass = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto idx = grid.unravel(i);
      Eigen::VectorXd y(grid.m);
      for (int a = 0; a < grid.m; ++a) y(a) = grid.point(idx[a]);
      mass += G(x0, y);
    }
    mass *= cell;
    rep.rows.push_back({std::string("hormander_mass"), t, mass, 1.0,
                        std::abs(mass - 1.0)});

    if (cfg.system == "ou") {
      double mmass = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto idx = grid.unravel(i);
        Eigen::VectorXd y(grid.m);
        for (int a = 0; a < grid.m; ++a) y(a) = grid.point(idx[a]);
        mmass += mehler_kernel(0.25, x0, y, t);
      }
      mmass *= cell;
      rep.rows.push_back({std::string("mehler_mass"), t, mmass, 1.0,
                          std::abs(mmass - 1.0)});

      double worst = 0.0;
      for (int k = 0; k < 100; ++k) {
        Eigen::VectorXd x(grid.m), y(grid.m);
        for (int a = 0; a < grid.m; ++a) {
          x(a) = unif(rng);
          y(a) = unif(rng);
        }
        const double gh = G(x, y), gm = mehler_kernel(0.25, x, y, t);
        worst = std::max(worst, std::abs(gh - gm) / gm);
      }
      rep.rows.push_back({std::string("mehler_equals_hormander"), t, worst, 0.0, worst});
    }
    if (cfg.system == "kolmogorov") {
      const int n = cfg.system_n;
      if (2 * n == grid.m) {
        const Eigen::VectorXd zx = Eigen::VectorXd::Zero(n), zy = Eigen::VectorXd::Zero(n);
        double kmass = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const auto idx = grid.unravel(i);
          Eigen::VectorXd xb(n), yb(n);
          for (int a = 0; a < n; ++a) xb(a) = grid.point(idx[a]);
          for (int a = 0; a < n; ++a) yb(a) = grid.point(idx[n + a]);
          kmass += kolmogorov_kernel(n, zx, zy, xb, yb, t);
        }
        kmass *= cell;
        rep.rows.push_back({std::string("kolmogorov_mass"), t, kmass, 1.0,
                            std::abs(kmass - 1.0)});
      }
      double worst = 0.0;
      for (int k = 0; k < 50; ++k) {
        Eigen::VectorXd x(n), y(n), xb(n), yb(n);
        for (int a = 0; a < n; ++a) {
          x(a) = unif(rng);
          y(a) = unif(rng);
          xb(a) = unif(rng);
          yb(a) = unif(rng);
        }
        Eigen::VectorXd zs(2 * n), zt(2 * n);
        zs << x, y;
        zt << xb, yb;
        const double gk = kolmogorov_kernel(n, x, y, xb, yb, t);
        const double gh = G(zs, zt);
        worst = std::max(worst, std::abs(gk - gh) / gk);
      }
      rep.rows.push_back({std::string("kolmogorov_cross"), t, worst, 0.0, worst});
    }
  }
  return rep;
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::CheckSystem: return "check-system";
    case Command::Propagate: return "propagate";
    case Command::DispersiveScan: return "dispersive-scan";
    case Command::UncertaintyScan: return "uncertainty-scan";
    case Command::OscillatorCompare: return "oscillator-compare";
    case Command::KernelCheck: return "kernel-check";
  }
  return "";
}

Command command_from_name(const std::string& name) {
  for (Command c : {Command::CheckSystem, Command::Propagate, Command::DispersiveScan,
                    Command::UncertaintyScan, Command::OscillatorCompare,
                    Command::KernelCheck})
    if (command_name(c) == name) return c;
  throw ConfigError("command", "unknown command '" + name + "'");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) throw ConfigError(key, "empty key or value");

    if (key == "command") {
      cfg.command = command_from_name(val);
    } else if (key == "system") {
      cfg.system = val;
    } else if (key == "system.m") {
      cfg.system_m = static_cast<int>(parse_int(key, val));
    } else if (key == "system.n") {
      cfg.system_n = static_cast<int>(parse_int(key, val));
    } else if (key == "system.Q") {
      cfg.Q = parse_matrix(key, val);
    } else if (key == "system.B") {
      cfg.B = parse_matrix(key, val);
    } else if (key == "grid.m") {
      cfg.grid_m = static_cast<int>(parse_int(key, val));
    } else if (key == "grid.L") {
      cfg.grid_L = parse_double(key, val);
    } else if (key == "grid.N") {
      cfg.grid_N = static_cast<int>(parse_int(key, val));
    } else if (key == "datum") {
      cfg.datum = parse_datum(key, val);
    } else if (key == "times") {
      cfg.times = parse_list(key, val);
    } else if (key == "method") {
      if (val == "czt") cfg.method = EngineChoice::CZT;
      else if (val == "direct") cfg.method = EngineChoice::DIRECT;
      else if (val == "hermite") cfg.method = EngineChoice::HERMITE;
      else throw ConfigError(key, "expected czt|direct|hermite");
    } else if (key == "p_values") {
      cfg.p_values = parse_list(key, val);
    } else if (key == "n_states") {
      cfg.n_states = static_cast<int>(parse_int(key, val));
      if (cfg.n_states < 0) throw ConfigError(key, "must be >= 0");
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(key, val));
    } else if (key == "output") {
      cfg.output = val;
    } else if (key == "format") {
      if (val == "csv") cfg.format = ReportFormat::CSV;
      else if (val == "json") cfg.format = ReportFormat::JSON;
      else throw ConfigError(key, "expected csv|json");
    } else if (key == "quiet") {
      if (val == "true" || val == "1") cfg.quiet = true;
      else if (val == "false" || val == "0") cfg.quiet = false;
      else throw ConfigError(key, "expected true|false");
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "command = " << command_name(cfg.command) << "\n";
  out << "system = " << cfg.system << "\n";
  out << "system.m = " << cfg.system_m << "\n";
  out << "system.n = " << cfg.system_n << "\n";
  if (cfg.Q) out << "system.Q = " << matrix_literal(*cfg.Q) << "\n";
  if (cfg.B) out << "system.B = " << matrix_literal(*cfg.B) << "\n";
  out << "grid.m = " << cfg.grid_m << "\n";
  out << "grid.L = " << fmt_g17(cfg.grid_L) << "\n";
  out << "grid.N = " << cfg.grid_N << "\n";
  out << "datum = " << datum_literal(cfg.datum) << "\n";
  out << "times = ";
  for (std::size_t i = 0; i < cfg.times.size(); ++i)
    out << fmt_g17(cfg.times[i]) << (i + 1 < cfg.times.size() ? ", " : "\n");
  out << "method = "
      << (cfg.method == EngineChoice::CZT
              ? "czt"
              : cfg.method == EngineChoice::DIRECT ? "direct" : "hermite")
      << "\n";
  out << "p_values = ";
  for (std::size_t i = 0; i < cfg.p_values.size(); ++i)
    out << fmt_g17(cfg.p_values[i]) << (i + 1 < cfg.p_values.size() ? ", " : "\n");
  out << "n_states = " << cfg.n_states << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "output = " << cfg.output << "\n";
  out << "format = " << (cfg.format == ReportFormat::CSV ? "csv" : "json") << "\n";
  out << "quiet = " << (cfg.quiet ? "true" : "false") << "\n";
  return out.str();
}

int run(const RunConfig& cfg) {
  Report rep;
  switch (cfg.command) {
    case Command::CheckSystem: rep = run_check_system(cfg); break;
    case Command::Propagate: rep = run_propagate(cfg); break;
    case Command::DispersiveScan: rep = run_dispersive_scan(cfg); break;
    case Command::UncertaintyScan: rep = run_uncertainty_scan(cfg); break;
    case Command::OscillatorCompare: rep = run_oscillator_compare(cfg); break;
    case Command::KernelCheck: rep = run_kernel_check(cfg); break;
  }
  write_report(rep, cfg);
  if (!cfg.quiet)
    std::cout << "wrote " << cfg.output << " (" << rep.rows.size() << " rows)\n";
  return 0;
}

}  // namespace oudisp
