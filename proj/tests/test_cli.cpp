// End-to-end checks of the command-line tool: exit codes, CSV shapes,
// numeric spot values, and byte determinism.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef PERIHARM_CLI_PATH
#error "PERIHARM_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path = "cli_test_out_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      std::string(PERIHARM_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  std::remove(out_path.c_str());
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::vector<double> csv_row(const std::string& line) {
  std::vector<double> vals;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
  return vals;
}

}  // namespace

TEST_CASE("psi subcommand") {
  RunResult r = run_cli("psi --n 0 --points 0");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x,psi,dpsi");
  auto row = csv_row(lines[1]);
  REQUIRE(row.size() == 3);
  CHECK(row[0] == 0.0);
  CHECK(row[1] == Catch::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(row[2] == 0.0);

  RunResult r1 = run_cli("psi --n 1 --points 0");
  auto row1 = csv_row(lines_of(r1.out)[1]);
  CHECK(row1[1] == 0.0);

  CHECK(run_cli("psi --points 0").exit_code == 2);       // missing --n
  CHECK(run_cli("psi --n 2").exit_code == 2);            // no points
  CHECK(run_cli("psi --n 2 --range 0:1:x").exit_code == 2);

  RunResult range = run_cli("psi --n 3 --range -1:1:5");
  CHECK(lines_of(range.out).size() == 6);
}

TEST_CASE("psi output is byte-deterministic") {
  RunResult a = run_cli("psi --n 5 --range -3:3:64");
  RunResult b = run_cli("psi --n 5 --range -3:3:64");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("verify subcommand") {
  RunResult det = run_cli("verify --suite det --m-max 6");
  CHECK(det.exit_code == 0);
  CHECK(det.out.find("\"overall_pass\": true") != std::string::npos);
  // 2 families x 6 sizes + spot checks
  std::size_t count = 0, pos = 0;
  while ((pos = det.out.find("\"identity\"", pos)) != std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 13);

  CHECK(run_cli("verify --suite nope").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);

  RunResult csv = run_cli("verify --suite truncation --format csv");
  CHECK(csv.exit_code == 0);
  auto lines = lines_of(csv.out);
  CHECK(lines[0] == "identity,max_abs_error,tolerance,pass");
  CHECK(lines.size() == 4);

  // an absurd override tolerance forces failure -> exit 1
  CHECK(run_cli("verify --suite operators --tol 1e-300").exit_code == 1);
}

TEST_CASE("split subcommand with builtins") {
  RunResult g = run_cli("split --builtin gaussian --grid 257");
  REQUIRE(g.exit_code == 0);
  auto lines = lines_of(g.out);
  REQUIRE(lines.size() == 258);
  CHECK(lines[0] ==
        "x,f_re,f_im,fp1_re,fp1_im,fpi_re,fpi_im,fm1_re,fm1_im,fmi_re,fmi_im");
  for (std::size_t i = 1; i < lines.size(); i += 16) {
    auto row = csv_row(lines[i]);
    REQUIRE(row.size() == 11);
    CHECK(std::abs(row[3] - row[1]) < 1e-8);  // f_{+1} == f for the self-transform
    CHECK(std::abs(row[5]) < 1e-8);
    CHECK(std::abs(row[7]) < 1e-8);
    CHECK(std::abs(row[9]) < 1e-8);
  }

  RunResult p3 = run_cli("split --builtin psi3 --grid 257");
  REQUIRE(p3.exit_code == 0);
  for (const auto& line : lines_of(p3.out)) {
    if (line[0] == 'x') continue;
    auto row = csv_row(line);
    CHECK(std::abs(row[9] - row[1]) < 1e-8);  // f_{-i} == f (degree 3 mod 4)
  }

  // the two routes agree
  RunResult by_proj = run_cli("split --builtin psi2 --grid 257 --route projectors");
  RunResult by_coeffs = run_cli("split --builtin psi2 --grid 257 --route coeffs");
  auto pl = lines_of(by_proj.out), cl = lines_of(by_coeffs.out);
  REQUIRE(pl.size() == cl.size());
  for (std::size_t i = 1; i < pl.size(); ++i) {
    auto pr = csv_row(pl[i]), cr = csv_row(cl[i]);
    for (std::size_t k = 0; k < 11; ++k) CHECK(std::abs(pr[k] - cr[k]) < 1e-7);
  }

  CHECK(run_cli("split --builtin nope").exit_code == 2);
  CHECK(run_cli("split --builtin gaussian --grid 256").exit_code == 2);
}

TEST_CASE("split subcommand rejects asymmetric input") {
  const std::string path = "cli_test_asym.csv";
  {
    std::ofstream out(path);
    out << "x,f_re\n";
    for (int j = 0; j <= 10; ++j) out << (0.1 * j - 0.45) << ",1.0\n";
  }
  CHECK(run_cli("split --input " + path).exit_code == 3);
  std::remove(path.c_str());

  CHECK(run_cli("split --input does_not_exist.csv").exit_code == 3);
}

TEST_CASE("split subcommand accepts symmetric input") {
  const std::string path = "cli_test_sym.csv";
  {
    std::ofstream out(path);
    out << "x,f_re\n";
    char buf[64];
    for (int j = -128; j <= 128; ++j) {
      const double x = j / 16.0;
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", x, std::exp(-0.5 * x * x));
      out << buf;
    }
  }
  RunResult r = run_cli("split --input " + path);
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out).size() == 258);
  std::remove(path.c_str());
}

TEST_CASE("basis subcommand") {
  RunResult raw = run_cli("basis --what raw --n 0 --grid 8");
  REQUIRE(raw.exit_code == 0);
  auto lines = lines_of(raw.out);
  CHECK(lines.size() == 9);  // header + 8 rows
  CHECK(lines[0] == "phi,value_re,value_im");

  RunResult coeffs = run_cli("basis --what coeffs --n 1 --m-max 3");
  REQUIRE(coeffs.exit_code == 0);
  auto clines = lines_of(coeffs.out);
  REQUIRE(clines.size() == 8);  // header + m = -3..3
  // row for m = 1: imaginary part ~ 0.6442883
  auto row = csv_row(clines[5]);
  CHECK(row[0] == 1.0);
  CHECK(row[1] == Catch::Approx(0.0).margin(1e-300));
  CHECK(row[2] == Catch::Approx(0.6442883651134752).epsilon(1e-12));

  CHECK(run_cli("basis --what raw --n 0 --grid 7").exit_code == 2);
  CHECK(run_cli("basis --what nope").exit_code == 2);
}

TEST_CASE("basis orthonormal side report") {
  const std::string out_path = "cli_test_basis.csv";
  RunResult r = run_cli("basis --what orthonormal --n-max 15 --output " + out_path);
  REQUIRE(r.exit_code == 0);
  const std::string report = slurp(out_path + ".report.json");
  const std::string csv = slurp(out_path);
  CHECK(lines_of(csv).size() == 16);
  const std::size_t pos = report.find("\"residual\":");
  REQUIRE(pos != std::string::npos);
  const double residual = std::stod(report.substr(pos + 11));
  CHECK(residual < 1e-8);
  CHECK(report.find("\"phase_absorbed\": true") != std::string::npos);
  std::remove(out_path.c_str());
  std::remove((out_path + ".report.json").c_str());
}
