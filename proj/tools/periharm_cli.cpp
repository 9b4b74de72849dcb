// periharm: evaluate the periodized Hermite basis, split functions into
// Fourier eigencomponents, and run the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 input-data error.

#include <cctype>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "periharm/periharm.hpp"

namespace {

using nlohmann::json;

/// Problems with the *content* of user-supplied data (exit 3), as opposed
/// to malformed flags (exit 2).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw DataError("cannot open output file: " + path);
  return file;
}

// ---------------------------------------------------------------- psi ----

struct PsiOptions {
  int n = -1;
  std::string points;
  std::string points_file;
  std::string range;  // "a:b:count"
  std::string output;
};

std::vector<double> collect_points(const PsiOptions& opt) {
  std::vector<double> xs;
  try {
    if (!opt.points.empty()) xs = periharm::parse_double_list(opt.points);
    if (!opt.range.empty()) {
      std::vector<double> spec;
      std::string normalized = opt.range;
      for (char& c : normalized)
        if (c == ':') c = ',';
      spec = periharm::parse_double_list(normalized);
      if (spec.size() != 3 || spec[2] < 2 || spec[2] != std::floor(spec[2]))
        throw std::invalid_argument("range must be a:b:count with integer count >= 2");
      const int count = static_cast<int>(spec[2]);
      for (int i = 0; i < count; ++i)
        xs.push_back(spec[0] + (spec[1] - spec[0]) * i / (count - 1));
    }
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("psi", e.what());
  }
  if (!opt.points_file.empty()) {
    std::ifstream in(opt.points_file);
    if (!in) throw DataError("cannot open points file: " + opt.points_file);
    std::string line;
    while (std::getline(in, line)) {
      try {
        for (double v : periharm::parse_double_list(line)) xs.push_back(v);
      } catch (const std::invalid_argument& e) {
        throw DataError(std::string("points file: ") + e.what());
      }
    }
  }
  if (xs.empty()) throw CLI::ValidationError("psi", "no evaluation points given");
  return xs;
}

int run_psi(const PsiOptions& opt) {
  const std::vector<double> xs = collect_points(opt);
  const periharm::HermiteValueSet set = periharm::psi_derivative_values(opt.n, xs);
  std::ofstream file;
  std::ostream& os = open_output(file, opt.output);
  os << "x,psi,dpsi\n";
  for (std::size_t i = 0; i < set.points.size(); ++i)
    os << periharm::format_double(set.points[i]) << ','
       << periharm::format_double(set.values[i]) << ','
       << periharm::format_double(set.derivatives[i]) << '\n';
  return 0;
}

// ------------------------------------------------------------- verify ----

struct VerifyOptions {
  std::string suite = "all";
  int m_max = 12;
  double tol = 0.0;  // 0 = keep per-item tolerances
  std::string format = "json";
  std::string output;
};

int run_verify(const VerifyOptions& opt) {
  periharm::VerificationReport report =
      (opt.suite == "det") ? periharm::suite_det(opt.m_max) : periharm::run_suite(opt.suite);
  if (opt.tol > 0.0) {
    report.overall_pass = true;
    for (auto& item : report.items) {
      item.tolerance = opt.tol;
      item.pass = item.max_abs_error < opt.tol && std::isfinite(item.max_abs_error);
      report.overall_pass = report.overall_pass && item.pass;
    }
  }

  std::ofstream file;
  std::ostream& os = open_output(file, opt.output);
  if (opt.format == "csv") {
    os << "identity,max_abs_error,tolerance,pass\n";
    for (const auto& item : report.items)
      os << item.identity << ',' << periharm::format_double(item.max_abs_error) << ','
         << periharm::format_double(item.tolerance) << ',' << (item.pass ? "true" : "false")
         << '\n';
  } else {
    json out;
    out["suite"] = report.suite;
    out["overall_pass"] = report.overall_pass;
    out["wall_seconds"] = report.wall_seconds;
    out["items"] = json::array();
    for (const auto& item : report.items)
      out["items"].push_back({{"identity", item.identity},
                              {"max_abs_error", item.max_abs_error},
                              {"tolerance", item.tolerance},
                              {"pass", item.pass}});
    os << out.dump(2) << '\n';
  }
  return report.overall_pass ? 0 : 1;
}

// --------------------------------------------------------------- split ----

struct SplitOptions {
  std::string builtin;
  std::string input;
  std::string route = "projectors";
  std::size_t grid = 1025;
  int n_max = 48;
  std::string output;
};

std::function<std::complex<double>(double)> builtin_function(const std::string& name) {
  if (name == "gaussian")
    return [](double x) { return std::complex<double>(std::exp(-0.5 * x * x), 0.0); };
  if (name.rfind("psi", 0) == 0 && name.size() > 3 &&
      std::all_of(name.begin() + 3, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int n = std::stoi(name.substr(3));
    return [n](double x) { return std::complex<double>(periharm::psi_value(n, x), 0.0); };
  }
  throw CLI::ValidationError("split", "unknown builtin: " + name);
}

periharm::RealLineSamples read_line_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);
  periharm::RealLineSamples out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && !line.empty() && (std::isalpha(static_cast<unsigned char>(line[0])))) {
      first = false;
      continue;  // header row
    }
    first = false;
    std::vector<double> row;
    try {
      row = periharm::parse_double_list(line);
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string("input CSV: ") + e.what());
    }
    if (row.size() != 2 && row.size() != 3)
      throw DataError("input CSV: expected rows x,f_re[,f_im]");
    out.x.push_back(row[0]);
    out.values.emplace_back(row[1], row.size() == 3 ? row[2] : 0.0);
  }
  if (out.x.size() < 3) throw DataError("input CSV: need at least 3 rows");
  return out;
}

int run_split(const SplitOptions& opt) {
  periharm::RealLineSamples samples;
  std::function<std::complex<double>(double)> fn;
  if (!opt.builtin.empty()) {
    fn = builtin_function(opt.builtin);
    if (opt.grid < 3 || opt.grid % 2 == 0)
      throw CLI::ValidationError("split", "--grid must be odd and >= 3");
    samples = periharm::sample_function(fn, 16.0, opt.grid);
  } else {
    samples = read_line_csv(opt.input);
  }
  try {
    periharm::check_reflection_closed(samples);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }

  periharm::C4Split split;
  if (opt.route == "projectors") {
    split = periharm::split_by_projectors(samples);
  } else if (opt.route == "coeffs") {
    try {
      split = fn ? periharm::split_by_coefficients(fn, samples, opt.n_max)
                 : periharm::split_by_coefficients(samples, opt.n_max);
    } catch (const std::runtime_error& e) {
      throw DataError(std::string("coefficient split: ") + e.what());
    }
  } else {
    throw CLI::ValidationError("split", "--route must be coeffs or projectors");
  }

  std::ofstream file;
  std::ostream& os = open_output(file, opt.output);
  periharm::write_split_csv(os, split);
  return 0;
}

// --------------------------------------------------------------- basis ----

struct BasisOptions {
  std::string what = "raw";
  int n = 0;
  int n_max = 15;
  int m_max = 10;
  std::size_t grid = 1024;
  double tol = 1e-12;
  std::string output;
};

int run_basis(const BasisOptions& opt) {
  std::ofstream file;
  if (opt.what == "raw") {
    periharm::CircleBasisElement element;
    try {
      element = periharm::sample_basis(opt.n, opt.grid, opt.tol);
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("basis", e.what());
    }
    std::ostream& os = open_output(file, opt.output);
    periharm::write_circle_csv(os, element.samples);
    return 0;
  }
  if (opt.what == "coeffs") {
    const periharm::FourierCoefficientSet coeffs =
        periharm::coeffs_closed_form(opt.n, opt.m_max);
    std::ostream& os = open_output(file, opt.output);
    periharm::write_coefficients_csv(os, coeffs);
    return 0;
  }
  if (opt.what == "orthonormal") {
    const periharm::GramSchmidtResult result =
        periharm::gram_schmidt_extended(opt.n_max, opt.tol);
    std::ostream& os = open_output(file, opt.output);
    periharm::write_matrix_csv(os, result.orthonormal);

    json side;
    side["n_max"] = result.n_max;
    side["residual"] = result.residual;
    side["phase_absorbed"] = result.phase_absorbed;
    side["norms"] = result.norms;
    if (opt.output.empty()) {
      std::cerr << side.dump(2) << '\n';
    } else {
      std::ofstream report(opt.output + ".report.json");
      if (!report) throw DataError("cannot open report file: " + opt.output + ".report.json");
      report << side.dump(2) << '\n';
    }
    return 0;
  }
  throw CLI::ValidationError("basis", "--what must be raw, orthonormal, or coeffs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodized Hermite functions on the circle: evaluation, "
               "Fourier-eigenspace splits, and verification suites."};
  app.require_subcommand(1);

  PsiOptions psi_opt;
  CLI::App* psi = app.add_subcommand("psi", "Evaluate psi_n and its derivative");
  psi->add_option("--n", psi_opt.n, "degree")->required()->check(CLI::NonNegativeNumber);
  psi->add_option("--points", psi_opt.points, "comma-separated evaluation points");
  psi->add_option("--points-file", psi_opt.points_file, "file with evaluation points");
  psi->add_option("--range", psi_opt.range, "uniform points a:b:count");
  psi->add_option("--output", psi_opt.output, "output path (default stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("--suite", verify_opt.suite,
                   "bridge|operators|gram|split|det|truncation|all")
      ->required()
      ->check(CLI::IsMember({"bridge", "operators", "gram", "split", "det", "truncation", "all"}));
  verify->add_option("--m-max", verify_opt.m_max, "determinant suite size cap")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", verify_opt.tol, "override every item tolerance");
  verify->add_option("--format", verify_opt.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--output", verify_opt.output, "output path (default stdout)");

  SplitOptions split_opt;
  CLI::App* split = app.add_subcommand("split", "Four-way Fourier-eigenspace split");
  CLI::Option* builtin =
      split->add_option("--builtin", split_opt.builtin, "gaussian or psiN (e.g. psi3)");
  split->add_option("--input", split_opt.input, "CSV of x,f_re[,f_im] on a symmetric grid")
      ->excludes(builtin);
  split->add_option("--route", split_opt.route, "coeffs|projectors");
  split->add_option("--grid", split_opt.grid, "grid points for builtins (odd)");
  split->add_option("--n-max", split_opt.n_max, "coefficient route expansion order");
  split->add_option("--output", split_opt.output, "output path (default stdout)");

  BasisOptions basis_opt;
  CLI::App* basis = app.add_subcommand("basis", "Periodized basis data");
  basis->add_option("--what", basis_opt.what, "raw|orthonormal|coeffs")
      ->check(CLI::IsMember({"raw", "orthonormal", "coeffs"}));
  basis->add_option("--n", basis_opt.n, "degree for raw/coeffs")->check(CLI::NonNegativeNumber);
  basis->add_option("--n-max", basis_opt.n_max, "family size for orthonormal")
      ->check(CLI::NonNegativeNumber);
  basis->add_option("--m-max", basis_opt.m_max, "coefficient range")->check(CLI::NonNegativeNumber);
  basis->add_option("--grid", basis_opt.grid, "circle grid size (power of two)");
  basis->add_option("--tol", basis_opt.tol, "truncation tolerance");
  basis->add_option("--output", basis_opt.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (psi->parsed()) return run_psi(psi_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (split->parsed()) return run_split(split_opt);
    if (basis->parsed()) return run_basis(basis_opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 2;
}
