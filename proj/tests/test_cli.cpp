#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "oudisp/errors.hpp"
#include "oudisp/field_io.hpp"
#include "oudisp/runconfig.hpp"

using namespace oudisp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("config round trip is the identity") {
  const char* text = R"(
# sample config
command = dispersive-scan
system = ou
grid.m = 1
grid.L = 12.5
grid.N = 512
datum = gaussian(0.5,-0.125)
times = 0.5, 1, 2.25
method = hermite
p_values = 1, 1.5
seed = 99
output = scan.csv
format = json
quiet = true
)";
  const RunConfig a = parse_config(text);
  const std::string ser = serialize_config(a);
  const RunConfig b = parse_config(ser);
  CHECK(serialize_config(b) == ser);
  CHECK(b.command == Command::DispersiveScan);
  CHECK(b.grid_L == 12.5);
  CHECK(b.datum.beta == cplx(0.5, -0.125));
  CHECK(b.times.size() == 3);
  CHECK(b.format == ReportFormat::JSON);
  CHECK(b.quiet);

  RunConfig c;
  c.system = "explicit";
  Eigen::MatrixXd Q(2, 2), B(2, 2);
  Q << 1, 0, 0, 0;
  B << -2, -2, 1, 0;
  c.Q = Q;
  c.B = B;
  c.datum.kind = DatumSpec::Kind::HERMITE;
  c.datum.hermite_index = {2};
  const RunConfig c2 = parse_config(serialize_config(c));
  CHECK(serialize_config(c2) == serialize_config(c));
  CHECK((*c2.Q - Q).norm() == 0.0);
}

TEST_CASE("config errors name the offending field") {
  CHECK_THROWS_WITH_AS(parse_config("bogus_key = 1\n"),
                       doctest::Contains("bogus_key"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("command = fly\n"),
                       doctest::Contains("command"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("grid.N = twelve\n"),
                       doctest::Contains("grid.N"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("datum = parabola(1)\n"),
                       doctest::Contains("datum"), ConfigError);
  CHECK_THROWS_AS(run(parse_config("command = propagate\nsystem = kolmogorov\n")),
                  ConfigError);
}

TEST_CASE("check-system reports match the golden files") {
  struct Preset {
    const char* system;
    const char* golden;
    const char* extra;
  };
  for (const Preset& p : {Preset{"ou", "check_ou.csv", "system.m = 2\n"},
                          Preset{"kolmogorov", "check_kolmogorov.csv", "system.n = 1\n"},
                          Preset{"smoluchowski-kramers", "check_sk.csv", ""}}) {
    std::ostringstream cfg;
    cfg << "command = check-system\nsystem = " << p.system << "\n"
        << p.extra << "times = 0.1, 0.5, 1, 2, 5\n"
        << "output = golden_test_out.csv\nquiet = true\n";
    REQUIRE(run(parse_config(cfg.str())) == 0);
    const std::string got = slurp("golden_test_out.csv");
    const std::string golden_path = std::string(OUDISP_GOLDEN_DIR) + "/" + p.golden;
    if (std::getenv("OUDISP_UPDATE_GOLDEN")) {
      std::ofstream out(golden_path, std::ios::binary | std::ios::trunc);
      out << got;
    }
    CHECK(got == slurp(golden_path));
  }
  std::remove("golden_test_out.csv");
}

TEST_CASE("propagate writes field files with the expected samples") {
  std::ostringstream cfg;
  cfg << "command = propagate\nsystem = ou\ngrid.m = 1\ngrid.L = 16\ngrid.N = 1024\n"
      << "datum = hermite(2)\ntimes = 1.5707963267948966\n"
      << "output = prop_test.csv\nmethod = czt\nquiet = true\n";
  REQUIRE(run(parse_config(cfg.str())) == 0);
  const ComplexField f = load_field("prop_test_t0.fld");
  // He_2 picks up the phase e^{-2it}: at t = π/2 it maps to 1 - x².  Compare
  // in the propagator's native dγ metric: un-gauging roundoff with e^{|x|²/4}
  // makes raw pointwise values at the box edge meaningless.
  const GridSpec& g = f.grid();
  std::vector<cplx> want(g.size());
  for (int j = 0; j < g.N; ++j) {
    const double x = g.point(j);
    want[j] = cplx(1.0 - x * x, 0.0);
  }
  CHECK(oracle::rel_err_gauss(f, ComplexField(g, Gauge::PHI, std::move(want))) <=
        1e-6);
  std::remove("prop_test.csv");
  std::remove("prop_test_t0.fld");
}

TEST_CASE("dispersive-scan emits ratios within the bound") {
  std::ostringstream cfg;
  cfg << "command = dispersive-scan\nsystem = ou\ngrid.m = 1\ngrid.L = 16\n"
      << "grid.N = 1024\ndatum = gaussian(0.5)\n"
      << "times = 0.5, 1.0\np_values = 1, 1.3333333333333333, 2\n"
      << "output = disp_test.csv\nquiet = true\n";
  REQUIRE(run(parse_config(cfg.str())) == 0);
  const auto rows = csv_rows(slurp("disp_test.csv"));
  REQUIRE(rows.size() == 7);  // header + 3*2 lattice
  CHECK(rows[0][5] == "ratio");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double ratio = std::stod(rows[r][5]);
    CHECK(ratio <= 1.0 + 1e-6);
    CHECK(ratio > 0.1);
  }
  std::remove("disp_test.csv");
}

TEST_CASE("uncertainty-scan stays under the threshold and is thread-deterministic") {
  std::ostringstream cfg;
  cfg << "command = uncertainty-scan\nsystem = ou\ndatum = gaussian(0.25)\n"
      << "times = 0.3, 1.5707963267948966, 2.9\nn_states = 20\nseed = 11\n"
      << "output = unc_a.csv\nquiet = true\n";
  setenv("OU_DISPERSION_THREADS", "4", 1);
  REQUIRE(run(parse_config(cfg.str())) == 0);
  const std::string a = slurp("unc_a.csv");
  setenv("OU_DISPERSION_THREADS", "1", 1);
  std::string cfg_b = cfg.str();
  cfg_b.replace(cfg_b.find("unc_a.csv"), 9, "unc_b.csv");
  REQUIRE(run(parse_config(cfg_b)) == 0);
  CHECK(slurp("unc_b.csv") == a);
  unsetenv("OU_DISPERSION_THREADS");

  for (const auto& row : csv_rows(a)) {
    if (row[0] == "re_beta0") continue;
    CHECK(std::stod(row[5]) <= 1.0 / 16.0 + 1e-9);
  }
  std::remove("unc_a.csv");
  std::remove("unc_b.csv");
}

TEST_CASE("kernel-check and oscillator-compare pipelines") {
  {
    std::ostringstream cfg;
    cfg << "command = kernel-check\nsystem = kolmogorov\nsystem.n = 1\n"
        << "grid.m = 2\ngrid.L = 20\ngrid.N = 512\ntimes = 1\nseed = 5\n"
        << "output = kc_test.csv\nquiet = true\n";
    REQUIRE(run(parse_config(cfg.str())) == 0);
    const auto rows = csv_rows(slurp("kc_test.csv"));
    REQUIRE(rows.size() >= 3);  // header + mass + cross rows
    for (std::size_t r = 1; r < rows.size(); ++r)
      CHECK(std::stod(rows[r][4]) <= 1e-8);
    std::remove("kc_test.csv");
  }
  {
    std::ostringstream cfg;
    cfg << "command = oscillator-compare\nsystem = ou\ngrid.m = 1\ngrid.L = 16\n"
        << "grid.N = 1024\ndatum = gaussian(0.25)\ntimes = 0.7, 4.5\n"
        << "output = oc_test.csv\nquiet = true\n";
    REQUIRE(run(parse_config(cfg.str())) == 0);
    const auto rows = csv_rows(slurp("oc_test.csv"));
    REQUIRE(rows.size() == 3);
    for (std::size_t r = 1; r < rows.size(); ++r) {
      CHECK(std::stod(rows[r][1]) <= 1e-6);  // route_rel_err
      // the ground state only changes by a phase, so the L2 norms agree
      CHECK(std::stod(rows[r][3]) ==
            doctest::Approx(std::stod(rows[r][2])).epsilon(1e-8));
    }
    std::remove("oc_test.csv");
  }
}

TEST_CASE("json format carries the same table") {
  std::ostringstream cfg;
  cfg << "command = check-system\nsystem = smoluchowski-kramers\ntimes = 1\n"
      << "output = check_sk.json\nformat = json\nquiet = true\n";
  REQUIRE(run(parse_config(cfg.str())) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp("check_sk.json"));
  CHECK(j["schema"] == "oudisp-report");
  CHECK(j["command"] == "check-system");
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0][6] == true);  // hypoelliptic
  CHECK(std::abs(j["rows"][0][3].get<double>() - 0.0113855) <= 1e-6);
  std::remove("check_sk.json");
}

TEST_CASE("numerical failures surface the module error name") {
  std::ostringstream cfg;
  cfg << "command = dispersive-scan\nsystem = ou\ngrid.m = 1\ngrid.L = 16\n"
      << "grid.N = 1024\ndatum = gaussian(0.5)\ntimes = 3.141592653589793\n"
      << "output = never.csv\nquiet = true\n";
  CHECK_THROWS_WITH_AS(run(parse_config(cfg.str())),
                       doctest::Contains("SingularTime"), SingularTime);
}

TEST_SUITE_END();
