#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "periharm/eigenspace.hpp"
#include "periharm/exact.hpp"
#include "periharm/fourier.hpp"
#include "periharm/orthonormalize.hpp"
#include "periharm/periodized.hpp"
#include "periharm/sequences.hpp"

namespace periharm {

struct VerificationItem {
  std::string identity;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationItem> items;
  bool overall_pass = false;
  double wall_seconds = 0.0;
};

namespace detail {

inline VerificationItem make_item(std::string identity, double err, double tol) {
  return {std::move(identity), err, tol, err < tol && std::isfinite(err)};
}

inline VerificationReport finish(std::string suite, std::vector<VerificationItem> items,
                                 std::chrono::steady_clock::time_point start) {
  VerificationReport report;
  report.suite = std::move(suite);
  report.items = std::move(items);
  report.overall_pass = true;
  for (const auto& item : report.items) report.overall_pass = report.overall_pass && item.pass;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline std::vector<CircleSamples> basis_samples(int n_max, std::size_t grid, double tol) {
  std::vector<CircleSamples> out(n_max + 1);
  parallel_for(n_max + 1,
               [&](std::size_t n) { out[n] = sample_basis(static_cast<int>(n), grid, tol).samples; });
  return out;
}

/// The smooth decaying corpus for the four-way split checks. All entries
/// are entire functions with fast Hermite-coefficient decay and are below
/// rounding at |x| = 16.
inline std::vector<std::function<std::complex<double>(double)>> split_corpus() {
  using C = std::complex<double>;
  return {
      [](double x) -> C { return std::exp(-0.5 * x * x); },
      [](double x) -> C { return psi_value(3, x); },
      [](double x) -> C { return x * x * std::exp(-0.5 * x * x); },
      [](double x) -> C { return std::exp(-0.5 * (x - 1.0) * (x - 1.0)); },
      [](double x) -> C { return C(1.0, 0.5) * std::exp(-0.5 * (x + 2.0) * (x + 2.0)); },
      [](double x) -> C { return std::sin(x) * std::exp(-0.5 * x * x); },
      [](double x) -> C { return std::cos(2.0 * x) * std::exp(-0.4 * x * x); },
      [](double x) -> C { return (1.0 + x + x * x * x) * std::exp(-0.5 * x * x); },
      [](double x) -> C { return psi_value(0, x) + 2.0 * psi_value(5, x); },
      [](double x) -> C { return x * std::exp(-x * x / 3.0); },
  };
}

}  // namespace detail

/// Fourier bridge between the circle and the sequences: closed-form
/// coefficients, synthesis, Parseval, the eigenfunction property, and the
/// Dirichlet-kernel identity at finite truncation.
inline VerificationReport suite_bridge() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationItem> items;
  constexpr double tol = 1e-12;
  constexpr std::size_t grid = 1024;

  {  // quadrature coefficients of c_n against i^n psi_n(m)
    double worst = 0.0;
    std::vector<double> errs(21, 0.0);
    parallel_for(21, [&](std::size_t n) {
      CircleSamples samples = sample_basis(static_cast<int>(n), grid, tol).samples;
      FourierCoefficientSet by_quad = coeffs_by_quadrature(samples, 10);
      for (int m = -10; m <= 10; ++m) {
        std::complex<double> closed = i_power(static_cast<int>(n)) * psi_value(static_cast<int>(n), m);
        errs[n] = std::max(errs[n], std::abs(by_quad.at(m) - closed));
      }
    });
    for (double e : errs) worst = std::max(worst, e);
    items.push_back(detail::make_item("coefficients-match-closed-form", worst, 1e-10));
  }

  {  // DFT inversion: coefficients -> synthesis -> coefficients
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    FourierCoefficientSet coeffs;
    coeffs.m_max = 40;
    coeffs.coefficients.resize(81);
    for (auto& c : coeffs.coefficients) c = {dist(rng), dist(rng)};
    CircleSamples f = make_circle_samples(256);
    for (std::size_t j = 0; j < f.size; ++j) f.values[j] = synthesize(coeffs, f.phi_at(j));
    FourierCoefficientSet back = coeffs_by_quadrature(f, coeffs.m_max);
    double worst = 0.0;
    for (int m = -coeffs.m_max; m <= coeffs.m_max; ++m)
      worst = std::max(worst, std::abs(back.at(m) - coeffs.at(m)));
    items.push_back(detail::make_item("synthesis-round-trip", worst, 1e-12));

    // Parseval: sum |c_m|^2 = 2 pi ||f||^2 for the bandlimited sample
    double coeff_norm = 0.0;
    for (const auto& c : coeffs.coefficients) coeff_norm += std::norm(c);
    double err = std::abs(coeff_norm - two_pi * f.norm_squared());
    items.push_back(detail::make_item("parseval", err / coeff_norm, 1e-10));
  }

  {  // psi_n as eigenfunctions of the real-line transform
    double worst = 0.0;
    const double ys[5] = {0.0, 0.7, -0.7, 1.9, -1.9};
    for (int n = 0; n <= 10; ++n)
      for (double y : ys) {
        std::complex<double> lhs =
            ft_real_line([n](double x) { return psi_value(n, x); }, y, -20.0, 20.0);
        worst = std::max(worst, std::abs(lhs - i_power(n) * psi_value(n, y)));
      }
    items.push_back(detail::make_item("ft-eigenfunction", worst, 1e-8));
  }

  {  // finite periodization transforms to Dirichlet kernel times psi_n
    std::vector<double> ys;
    for (int i = 0; i < 16; ++i) ys.push_back(-1.5 + 0.2 * i);
    std::vector<double> errs(9 * 4, 0.0);
    parallel_for(errs.size(), [&](std::size_t idx) {
      const int n = static_cast<int>(idx) / 4;
      const int m = static_cast<int>(idx) % 4;
      errs[idx] = verify_finite_ft(n, m, ys);
    });
    double worst = 0.0;
    for (double e : errs) worst = std::max(worst, e);
    items.push_back(detail::make_item("finite-ft-dirichlet-identity", worst, 1e-6));
  }

  {  // closed form vs direct exponential sum
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double x = dist(rng);
      for (int m = 0; m <= 20; ++m) {
        double direct = 1.0;
        for (int k = 1; k <= m; ++k) direct += 2.0 * std::cos(k * x);
        worst = std::max(worst, std::abs(dirichlet_kernel(m, x) - direct));
      }
    }
    items.push_back(detail::make_item("dirichlet-closed-form", worst, 1e-12));
  }

  {  // the periodization series and its Fourier synthesis cancel termwise
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      const int half = std::max(truncation_halfwidth(n, tol), sequence_halfwidth(n, tol));
      for (int j = 0; j < 32; ++j) {
        const double phi = -std::numbers::pi + two_pi * (j + 0.5) / 32.0;
        std::complex<double> acc = evaluate_c_partial(n, phi, half);
        for (int m = -half; m <= half; ++m)
          acc -= i_power(n) / std::sqrt(two_pi) * psi_value(n, m) * std::polar(1.0, -m * phi);
        worst = std::max(worst, std::abs(acc));
      }
    }
    items.push_back(detail::make_item("periodization-fourier-identity", worst, 1e-8));
  }

  return detail::finish("bridge", std::move(items), start);
}

/// Ladder, derivative, and oscillator identities on both sides.
inline VerificationReport suite_operators() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationItem> items;
  constexpr double tol = 1e-12;
  std::vector<double> phis;
  for (int j = 0; j < 64; ++j) phis.push_back(-std::numbers::pi + two_pi * (j + 0.5) / 64.0);

  {  // A+/- from the position and derivative series
    std::vector<double> errs(13, 0.0);
    parallel_for(13, [&](std::size_t ni) {
      const int n = static_cast<int>(ni);
      for (double phi : phis) {
        const double pos = apply_position(n, phi, tol);
        const double der = apply_derivative(n, phi, tol);
        const double raise_combo = (pos - der) / std::sqrt(2.0);
        const double lower_combo = (pos + der) / std::sqrt(2.0);
        errs[ni] = std::max(errs[ni], std::abs(raise_combo - ladder_raise(n, phi, tol)));
        errs[ni] = std::max(errs[ni], std::abs(lower_combo - ladder_lower(n, phi, tol)));
      }
    });
    double worst = 0.0;
    for (double e : errs) worst = std::max(worst, e);
    items.push_back(detail::make_item("circle-ladder-combinations", worst, 1e-8));
  }

  {  // (1/2)(Phi^2 - D^2) c_n = (n + 1/2) c_n via composed recurrences
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
      BasisExpansion base = BasisExpansion::unit(n);
      BasisExpansion phi2 = base.apply_position_recurrence().apply_position_recurrence();
      BasisExpansion d2 = base.apply_derivative_recurrence().apply_derivative_recurrence();
      BasisExpansion combo = phi2.plus(d2.scaled(-1.0)).scaled(0.5).plus(base.scaled(-(n + 0.5)));
      for (double phi : phis) worst = std::max(worst, std::abs(combo.evaluate(phi, tol)));
    }
    items.push_back(detail::make_item("circle-oscillator-identity", worst, 1e-8));
  }

  {  // B+/- against (sqrt(2)/2)(M -/+ D)
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
      IntegerSequence chi = chi_build(n, tol);
      IntegerSequence m_chi = apply_M(chi);
      IntegerSequence d_chi = apply_D_seq(n, tol);
      IntegerSequence raised = ladder_B(n, LadderDirection::raise, tol);
      IntegerSequence lowered = ladder_B(n, LadderDirection::lower, tol);
      for (int m = -chi.halfwidth; m <= chi.halfwidth; ++m) {
        const std::complex<double> up = (m_chi.at(m) - d_chi.at(m)) / std::sqrt(2.0);
        const std::complex<double> down = (m_chi.at(m) + d_chi.at(m)) / std::sqrt(2.0);
        worst = std::max(worst, std::abs(up - raised.at(m)));
        worst = std::max(worst, std::abs(down - lowered.at(m)));
      }
    }
    items.push_back(detail::make_item("sequence-ladder-combinations", worst, 1e-8));
  }

  {  // sequence oscillator identity
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) worst = std::max(worst, number_check(n, tol));
    items.push_back(detail::make_item("sequence-oscillator-identity", worst, 1e-8));
  }

  {  // derivative: term-by-term series vs index recurrence vs finite difference
    double worst = 0.0;
    const double h = 1e-5;
    for (int n = 0; n <= 12; ++n)
      for (int j = 0; j < 8; ++j) {
        const double phi = -2.9 + 0.8 * j;
        const double series = apply_derivative(n, phi, tol);
        double recurrence = -std::sqrt((n + 1) / 2.0) * evaluate_c(n + 1, phi, tol);
        if (n >= 1) recurrence += std::sqrt(n / 2.0) * evaluate_c(n - 1, phi, tol);
        const double fd = (evaluate_c(n, phi + h, tol) - evaluate_c(n, phi - h, tol)) / (2.0 * h);
        worst = std::max(worst, std::abs(series - recurrence));
        worst = std::max(worst, std::abs(series - fd));
      }
    items.push_back(detail::make_item("derivative-route-agreement", worst, 1e-7));
  }

  return detail::finish("operators", std::move(items), start);
}

/// Gram matrix bridge, parity zeros, and the orthonormalized families.
inline VerificationReport suite_gram() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationItem> items;
  constexpr double tol = 1e-12;
  constexpr std::size_t grid = 1024;
  constexpr int n_max = 16;

  const std::vector<CircleSamples> basis = detail::basis_samples(n_max, grid, tol);
  const GramMatrix g = gram_matrix(n_max, tol);

  {  // circle quadrature vs sequence inner product
    double worst = 0.0, parity_worst = 0.0;
    for (int n = 0; n <= n_max; ++n)
      for (int m = 0; m <= n_max; ++m) {
        const std::complex<double> quad = circle_inner(basis[n], basis[m]);
        worst = std::max(worst, std::abs(quad - g.at(n, m)));
        if ((n + m) % 2 == 1) parity_worst = std::max(parity_worst, std::abs(g.at(n, m)));
      }
    items.push_back(detail::make_item("gram-bridge-quadrature-vs-sequence", worst, 1e-9));
    items.push_back(detail::make_item("gram-parity-zeros", parity_worst, 1e-14));
  }

  const GramSchmidtResult gs = gram_schmidt_extended(15, tol);

  {  // orthonormality of the circle family by independent quadrature
    std::vector<CircleSamples> c_hat = orthonormal_circle_samples(gs, grid, tol);
    double worst = 0.0;
    for (int n = 0; n <= 15; ++n)
      for (int m = 0; m <= 15; ++m) {
        const std::complex<double> inner = circle_inner(c_hat[n], c_hat[m]);
        worst = std::max(worst, std::abs(inner - (n == m ? 1.0 : 0.0)));
      }
    items.push_back(detail::make_item("orthonormal-circle-family", worst, 1e-8));
  }

  {  // orthonormality of the sequence family
    std::vector<IntegerSequence> chi_hat = orthonormal_sequences(gs, tol);
    double worst = 0.0;
    for (int n = 0; n <= 15; ++n)
      for (int m = 0; m <= 15; ++m) {
        const std::complex<double> inner = seq_inner(chi_hat[n], chi_hat[m]);
        worst = std::max(worst, std::abs(inner - (n == m ? 1.0 : 0.0)));
      }
    items.push_back(detail::make_item("orthonormal-sequence-family", worst, 1e-8));
  }

  {  // norm preservation of the coefficient-matching map on random span elements
    std::vector<CircleSamples> c_hat = orthonormal_circle_samples(gs, grid, tol);
    std::mt19937 rng(11);
    std::normal_distribution<double> dist(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> a(16);
      double norm = 0.0;
      for (double& v : a) {
        v = dist(rng);
        norm += v * v;
      }
      for (double& v : a) v /= std::sqrt(norm);
      CircleSamples f = make_circle_samples(grid);
      for (std::size_t j = 0; j < grid; ++j)
        for (int n = 0; n <= 15; ++n) f.values[j] += a[n] * c_hat[n].values[j];
      const ExpansionResult expansion = expand_and_map(f, gs, tol);
      const double mapped_norm = seq_norm(expansion.mapped);
      worst = std::max(worst, std::abs(mapped_norm - std::sqrt(f.norm_squared())));
    }
    items.push_back(detail::make_item("isometry-norm-preservation", worst, 1e-9));
  }

  return detail::finish("gram", std::move(items), start);
}

/// Four-way Fourier-eigenspace split: two routes, projector algebra,
/// eigenvector property.
inline VerificationReport suite_split() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationItem> items;
  const auto corpus = detail::split_corpus();
  const RealLineSamples grid = make_symmetric_grid(16.0, 1025);

  std::vector<double> route_err(corpus.size(), 0.0), algebra_err(corpus.size(), 0.0),
      eigen_err(corpus.size(), 0.0);
  parallel_for(corpus.size(), [&](std::size_t idx) {
    const auto& f = corpus[idx];
    RealLineSamples samples = grid;
    for (std::size_t j = 0; j < grid.x.size(); ++j) samples.values[j] = f(grid.x[j]);

    const C4Split by_coeffs = split_by_coefficients(f, grid);
    const C4Split by_proj = split_by_projectors(samples);
    for (int k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < grid.x.size(); ++j)
        route_err[idx] = std::max(route_err[idx],
                                  std::abs(by_coeffs.component(k)[j] - by_proj.component(k)[j]));

    const ProjectorAlgebraReport algebra = verify_projector_algebra(samples);
    algebra_err[idx] = std::max({algebra.idempotency, algebra.mutual_annihilation,
                                 algebra.resolution_of_identity, algebra.parity_recombination});

    for (int k = 0; k < 4; ++k)
      eigen_err[idx] = std::max(eigen_err[idx], ft_eigen_residual(by_proj, k));
  });

  auto maxv = [](const std::vector<double>& v) {
    double worst = 0.0;
    for (double e : v) worst = std::max(worst, e);
    return worst;
  };
  items.push_back(detail::make_item("split-route-equivalence", maxv(route_err), 1e-7));
  items.push_back(detail::make_item("projector-algebra", maxv(algebra_err), 1e-9));
  items.push_back(detail::make_item("ft-eigenvector-components", maxv(eigen_err), 1e-7));

  return detail::finish("split", std::move(items), start);
}

/// Exact integer determinant certification.
inline VerificationReport suite_det(int m_max = 12) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationItem> items;

  std::vector<DeterminantRecord> records(2 * (m_max + 1));
  parallel_for(records.size(), [&](std::size_t idx) {
    const int m = static_cast<int>(idx) / 2;
    const char family = (idx % 2 == 0) ? 'A' : 'B';
    const mpz_class det = exact_determinant(family == 'A' ? matrix_A(m) : matrix_B(m));
    records[idx] = {family, m, det != 0, mpz_sizeinbase(det.get_mpz_t(), 2), sgn(det)};
  });
  for (int m = 1; m <= m_max; ++m)
    for (char family : {'A', 'B'}) {
      const DeterminantRecord& rec = records[2 * m + (family == 'B' ? 1 : 0)];
      items.push_back(detail::make_item(
          std::string("determinant-") + family + "-nonzero-m" + std::to_string(m),
          rec.nonzero ? 0.0 : 1.0, 0.5));
    }

  const mpz_class det_a0 = exact_determinant(matrix_A(0));
  const mpz_class det_b0 = exact_determinant(matrix_B(0));
  const mpz_class det_a1 = exact_determinant(matrix_A(1));
  const mpz_class det_b1 = exact_determinant(matrix_B(1));
  const double spot = std::abs(det_a0.get_d() - 1.0) + std::abs(det_b0.get_d() - 1.0) +
                      std::abs(det_a1.get_d() - 16.0) + std::abs(det_b1.get_d() - 2.0);
  items.push_back(detail::make_item("determinant-spot-values", spot, 0.5));

  return detail::finish("det", std::move(items), start);
}

/// Metamorphic truncation checks: widening any certified truncation by 4
/// moves no reported quantity past its declared tolerance.
inline VerificationReport suite_truncation() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationItem> items;
  constexpr double tol = 1e-12;

  {  // periodization halfwidth
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      const int half = truncation_halfwidth(n, tol);
      for (int j = 0; j < 16; ++j) {
        const double phi = -std::numbers::pi + two_pi * (j + 0.5) / 16.0;
        worst = std::max(worst, std::abs(evaluate_c_partial(n, phi, half + 4) -
                                         evaluate_c_partial(n, phi, half)));
      }
    }
    items.push_back(detail::make_item("periodization-truncation-stability", worst, tol));
  }

  {  // sequence support: inner products under M -> M+4
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n)
      for (int m = n % 2; m <= 12; m += 2) {
        const std::complex<double> base = seq_inner(chi_build(n, tol), chi_build(m, tol));
        const std::complex<double> wide =
            seq_inner(chi_build_with_halfwidth(n, sequence_halfwidth(n, tol) + 4, tol),
                      chi_build_with_halfwidth(m, sequence_halfwidth(m, tol) + 4, tol));
        worst = std::max(worst, std::abs(base - wide));
      }
    items.push_back(detail::make_item("sequence-tail-stability", worst, tol));
  }

  {  // bridge coefficients under K -> K+4
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const int half = truncation_halfwidth(n, tol);
      CircleSamples narrow = make_circle_samples(256), wide = make_circle_samples(256);
      for (std::size_t j = 0; j < narrow.size; ++j) {
        narrow.values[j] = evaluate_c_partial(n, narrow.phi_at(j), half);
        wide.values[j] = evaluate_c_partial(n, wide.phi_at(j), half + 4);
      }
      const FourierCoefficientSet a = coeffs_by_quadrature(narrow, 10);
      const FourierCoefficientSet b = coeffs_by_quadrature(wide, 10);
      for (int m = -10; m <= 10; ++m) worst = std::max(worst, std::abs(a.at(m) - b.at(m)));
    }
    items.push_back(detail::make_item("bridge-truncation-stability", worst, 1e-10));
  }

  return detail::finish("truncation", std::move(items), start);
}

inline VerificationReport run_suite(const std::string& name) {
  if (name == "bridge") return suite_bridge();
  if (name == "operators") return suite_operators();
  if (name == "gram") return suite_gram();
  if (name == "split") return suite_split();
  if (name == "det") return suite_det();
  if (name == "truncation") return suite_truncation();
  if (name == "all") {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationItem> items;
    for (const char* sub : {"bridge", "operators", "gram", "split", "det", "truncation"}) {
      VerificationReport part = run_suite(sub);
      for (auto& item : part.items) {
        item.identity = std::string(sub) + "/" + item.identity;
        items.push_back(std::move(item));
      }
    }
    return detail::finish("all", std::move(items), start);
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace periharm
