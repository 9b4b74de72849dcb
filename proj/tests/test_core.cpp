// Core numerics: Hermite evaluation, FFT, quadrature rules, thread cap,
// and the CSV formatting helpers. Oracles here are computed independently
// of the library code paths they check.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <random>

#include "periharm/fft.hpp"
#include "periharm/hermite.hpp"
#include "periharm/io.hpp"
#include "periharm/parallel.hpp"
#include "periharm/quadrature.hpp"

using namespace periharm;

namespace {

// Oracle: psi_n from the explicit H_n * Gaussian formula, safe for small n.
double psi_oracle(int n, double x) {
  // H_n by the value recurrence in double (n is small here)
  double h0 = 1.0, h1 = 2.0 * x;
  double h = (n == 0) ? h0 : h1;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
    h = h1;
  }
  double norm = std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi);
  return h * std::exp(-0.5 * x * x) / std::sqrt(norm);
}

}  // namespace

TEST_CASE("psi_value seed and small-n oracle") {
  CHECK(psi_value(0, 0.0) == Catch::Approx(pi_quarter_inv).epsilon(1e-15));
  CHECK(psi_value(1, 0.0) == Catch::Approx(0.0).margin(1e-300));
  for (int n = 0; n <= 8; ++n)
    for (double x : {-2.5, -0.3, 0.0, 0.7, 1.9, 3.4})
      CHECK(psi_value(n, x) == Catch::Approx(psi_oracle(n, x)).margin(1e-13));
  CHECK_THROWS_AS(psi_value(-1, 0.0), std::invalid_argument);
}

TEST_CASE("psi_value uniform bound") {
  // |psi_n| <= pi^(-1/4) everywhere
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-12.0, 12.0);
  for (int trial = 0; trial < 500; ++trial) {
    int n = trial % 40;
    CHECK(std::abs(psi_value(n, dist(rng))) <= pi_quarter_inv + 1e-12);
  }
}

TEST_CASE("psi_derivative_value against central differences") {
  const double h = 1e-6;
  for (int n = 0; n <= 10; ++n)
    for (double x : {-1.7, 0.0, 0.4, 2.2}) {
      double fd = (psi_value(n, x + h) - psi_value(n, x - h)) / (2.0 * h);
      CHECK(psi_derivative_value(n, x) == Catch::Approx(fd).margin(1e-8));
    }
}

TEST_CASE("exact Hermite polynomials") {
  // H_0..H_4 coefficients by hand
  CHECK(hermite_poly_exact(0).coeffs == std::vector<mpz_class>{1});
  CHECK(hermite_poly_exact(1).coeffs == std::vector<mpz_class>{2});
  CHECK(hermite_poly_exact(2).coeffs == std::vector<mpz_class>{4, -2});
  CHECK(hermite_poly_exact(3).coeffs == std::vector<mpz_class>{8, -12});
  CHECK(hermite_poly_exact(4).coeffs == std::vector<mpz_class>{16, -48, 12});

  CHECK(hermite_poly_exact(3).eval_int(2) == 40);   // 8*8 - 12*2
  CHECK(hermite_value_int(3, 2) == 40);
  CHECK(hermite_value_int(4, -2) == 76);            // 16*16 - 48*4 + 12
  CHECK(hermite_value_int(5, 0) == 0);              // odd degree at 0
  CHECK(hermite_value_int(6, 0) == -120);

  // value recurrence agrees with the coefficient route
  for (int n = 0; n <= 15; ++n)
    for (long k = -4; k <= 4; ++k)
      CHECK(hermite_value_int(n, k) == hermite_poly_exact(n).eval_int(k));
}

TEST_CASE("exact Hermite values reconstruct psi") {
  for (int n = 0; n <= 10; ++n)
    for (long k = -4; k <= 4; ++k) {
      double norm = std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(std::numbers::pi);
      double rebuilt = hermite_value_int(n, k).get_d() *
                       std::exp(-0.5 * static_cast<double>(k) * k) / std::sqrt(norm);
      double direct = psi_value(n, static_cast<double>(k));
      double scale = std::max(1.0, std::abs(direct));
      CHECK(std::abs(rebuilt - direct) / scale < 1e-9);
    }
}

TEST_CASE("fft roundtrip and basics") {
  std::vector<std::complex<double>> delta(8, 0.0);
  delta[0] = 1.0;
  fft_radix2(delta, -1);
  for (const auto& v : delta) CHECK(std::abs(v - 1.0) < 1e-15);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::complex<double>> a(64);
  for (auto& v : a) v = {dist(rng), dist(rng)};
  std::vector<std::complex<double>> b = a;
  fft_radix2(b, -1);
  fft_radix2(b, +1);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(std::abs(b[i] / 64.0 - a[i]) < 1e-13);

  std::vector<std::complex<double>> bad(6, 0.0);
  CHECK_THROWS_AS(fft_radix2(bad, -1), std::invalid_argument);
}

TEST_CASE("Gauss-Hermite rule integrates moments") {
  const GaussHermiteRule rule = gauss_hermite_rule(12);
  auto moment = [&](int p) {
    double acc = 0.0;
    for (int i = 0; i < rule.count; ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], p);
    return acc;
  };
  const double sq = std::sqrt(std::numbers::pi);
  CHECK(moment(0) == Catch::Approx(sq).epsilon(1e-13));
  CHECK(moment(1) == Catch::Approx(0.0).margin(1e-14));
  CHECK(moment(2) == Catch::Approx(0.5 * sq).epsilon(1e-13));
  CHECK(moment(4) == Catch::Approx(0.75 * sq).epsilon(1e-13));
  CHECK(moment(6) == Catch::Approx(15.0 / 8.0 * sq).epsilon(1e-13));
  // exact symmetry after pinning
  for (int i = 0; i < rule.count / 2; ++i)
    CHECK(rule.nodes[i] == -rule.nodes[rule.count - 1 - i]);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials") {
  const GaussLegendreRule rule = gauss_legendre_rule(10, 0.0, 1.0);
  auto integral = [&](auto f) {
    double acc = 0.0;
    for (int i = 0; i < rule.count; ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
  };
  CHECK(integral([](double x) { return x * x * x; }) == Catch::Approx(0.25).epsilon(1e-14));
  CHECK(integral([](double x) { return 1.0; }) == Catch::Approx(1.0).epsilon(1e-14));
  CHECK(integral([](double x) { return std::pow(x, 19); }) ==
        Catch::Approx(0.05).epsilon(1e-13));
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(257, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("PERIHARM_THREADS caps the pool") {
  setenv("PERIHARM_THREADS", "1", 1);
  CHECK(max_threads() == 1);
  unsetenv("PERIHARM_THREADS");
  CHECK(max_threads() >= 1);
}

TEST_CASE("format_double round-trips") {
  for (double x : {0.1, -1.0 / 3.0, 2.5e-300, 1.7976931348623157e308, 0.0})
    CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("parse_double_list") {
  CHECK(parse_double_list("1,2.5,-3e2") == std::vector<double>{1.0, 2.5, -300.0});
  CHECK(parse_double_list("").empty());
  CHECK_THROWS_AS(parse_double_list("1,abc"), std::invalid_argument);
}
