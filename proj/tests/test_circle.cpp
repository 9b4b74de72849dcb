// The circle side: periodization, truncation certificates, the l2(Z)
// sequences, and the Fourier coefficient bridge.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "periharm/fourier.hpp"
#include "periharm/periodized.hpp"
#include "periharm/sequences.hpp"

using namespace periharm;

TEST_CASE("wrap_angle") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(two_pi) == 0.0);
  CHECK(wrap_angle(std::numbers::pi) == -std::numbers::pi);
  CHECK(wrap_angle(3.0) == Catch::Approx(3.0).epsilon(1e-15));
  CHECK(wrap_angle(-7.0) == Catch::Approx(-7.0 + two_pi).epsilon(1e-15));
}

TEST_CASE("truncation halfwidth is a certificate") {
  // widening past the certified K changes nothing at the tolerance scale
  for (int n : {0, 3, 7, 10})
    for (double tol : {1e-8, 1e-12}) {
      const int k = truncation_halfwidth(n, tol);
      for (double phi : {-3.0, -0.5, 0.0, 1.2, 3.1}) {
        double base = evaluate_c_partial(n, phi, k);
        double wide = evaluate_c_partial(n, phi, k + 6);
        CHECK(std::abs(base - wide) < tol);
      }
    }
  // monotone in n and in 1/tol
  CHECK(truncation_halfwidth(10, 1e-12) >= truncation_halfwidth(2, 1e-12));
  CHECK(truncation_halfwidth(4, 1e-14) >= truncation_halfwidth(4, 1e-6));
  CHECK_THROWS_AS(truncation_halfwidth(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(truncation_halfwidth(3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(truncation_halfwidth(-1, 1e-10), std::invalid_argument);
}

TEST_CASE("evaluate_c oracle at phi = 0") {
  // direct independent sum: c_0(0) = pi^(-1/4) sum_k exp(-2 pi^2 k^2)
  double oracle = 0.0;
  for (int k = -6; k <= 6; ++k)
    oracle += pi_quarter_inv * std::exp(-0.5 * std::pow(two_pi * k, 2));
  CHECK(evaluate_c(0, 0.0) == Catch::Approx(oracle).margin(1e-12));
  // periodicity
  for (int n : {1, 4})
    for (double phi : {0.3, -2.0})
      CHECK(evaluate_c(n, phi) == Catch::Approx(evaluate_c(n, phi + two_pi)).margin(1e-12));
}

TEST_CASE("position and derivative series against term sums") {
  // independent direct sums over a generous window
  for (int n : {0, 2, 5})
    for (double phi : {-1.1, 0.4, 2.9}) {
      double pos = 0.0, der = 0.0;
      for (int k = -80; k <= 80; ++k) {
        const double x = phi + two_pi * k;
        pos += x * psi_value(n, x);
        der += psi_derivative_value(n, x);
      }
      CHECK(apply_position(n, phi) == Catch::Approx(pos).margin(1e-11));
      CHECK(apply_derivative(n, phi) == Catch::Approx(der).margin(1e-11));
      CHECK(apply_position_power(n, phi, 1) == Catch::Approx(pos).margin(1e-11));
    }
  CHECK_THROWS_AS(apply_position_power(2, 0.5, 0), std::invalid_argument);
}

TEST_CASE("ladder operators on the circle") {
  for (double phi : {-2.2, 0.0, 1.3}) {
    CHECK(ladder_raise(2, phi) ==
          Catch::Approx(std::sqrt(3.0) * evaluate_c(3, phi)).margin(1e-13));
    CHECK(ladder_lower(2, phi) ==
          Catch::Approx(std::sqrt(2.0) * evaluate_c(1, phi)).margin(1e-13));
    CHECK(ladder_lower(0, phi) == 0.0);
  }
}

TEST_CASE("circle grid and inner product") {
  CHECK_THROWS_AS(make_circle_samples(12), std::invalid_argument);
  CircleSamples f = make_circle_samples(8);
  CHECK(f.phi_at(0) == -std::numbers::pi);
  CHECK(f.phi_at(4) == Catch::Approx(0.0).margin(1e-15));
  // trapezoid norm of e^{i phi} is exactly 1 on the periodic grid
  CircleSamples g = make_circle_samples(64);
  for (std::size_t j = 0; j < g.size; ++j) g.values[j] = std::polar(1.0, g.phi_at(j));
  CHECK(g.norm_squared() == Catch::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sequence halfwidth certifies the tail") {
  for (int n : {0, 5, 12})
    for (double tol : {1e-8, 1e-12}) {
      const int half = sequence_halfwidth(n, tol);
      CHECK(std::abs(psi_value(n, half + 1)) < tol);
      CHECK(std::abs(psi_value(n, -(half + 1))) < tol);
    }
  CHECK_THROWS_AS(sequence_halfwidth(2, 0.0), std::invalid_argument);
}

TEST_CASE("sequence inner products against Gaussian sums") {
  // psi_0(m)^2 = e^{-m^2}/sqrt(pi); psi_2(m) = (2m^2-1)/sqrt(2) psi_0(m)
  double s00 = 0.0, s02 = 0.0;
  for (int m = -10; m <= 10; ++m) {
    const double g = std::exp(-static_cast<double>(m) * m) / std::sqrt(std::numbers::pi);
    s00 += g;
    s02 += g * (2.0 * m * m - 1.0) / std::sqrt(2.0);
  }
  IntegerSequence chi0 = chi_build(0), chi2 = chi_build(2);
  CHECK(seq_inner(chi0, chi0).real() == Catch::Approx(s00 / two_pi).epsilon(1e-13));
  CHECK(seq_inner(chi0, chi2).real() == Catch::Approx(s02 / two_pi).epsilon(1e-12));
  CHECK(seq_inner(chi0, chi0).imag() == 0.0);
  CHECK(seq_norm(chi0) == Catch::Approx(std::sqrt(s00 / two_pi)).epsilon(1e-13));
}

TEST_CASE("sequence operators") {
  IntegerSequence chi3 = chi_build(3);
  IntegerSequence m1 = apply_M(chi3);
  for (int m = -3; m <= 3; ++m)
    CHECK(m1.at(m).real() ==
          Catch::Approx(static_cast<double>(m) * psi_value(3, m)).margin(1e-15));
  CHECK_THROWS_AS(apply_M_power(chi3, 0), std::invalid_argument);

  IntegerSequence up = ladder_B(3, LadderDirection::raise);
  IntegerSequence down = ladder_B(3, LadderDirection::lower);
  for (int m = -4; m <= 4; ++m) {
    CHECK(up.at(m).real() == Catch::Approx(2.0 * psi_value(4, m)).margin(1e-14));
    CHECK(down.at(m).real() ==
          Catch::Approx(std::sqrt(3.0) * psi_value(2, m)).margin(1e-14));
  }
  IntegerSequence floor = ladder_B(0, LadderDirection::lower);
  for (const auto& v : floor.values) CHECK(v == std::complex<double>(0.0));

  for (int n = 0; n <= 12; ++n) CHECK(number_check(n) < 1e-12);
}

TEST_CASE("i_power cycle") {
  CHECK(i_power(0) == std::complex<double>(1, 0));
  CHECK(i_power(1) == std::complex<double>(0, 1));
  CHECK(i_power(2) == std::complex<double>(-1, 0));
  CHECK(i_power(3) == std::complex<double>(0, -1));
  CHECK(i_power(-1) == std::complex<double>(0, -1));
  CHECK(i_power(7) == i_power(3));
}

TEST_CASE("Dirichlet kernel") {
  CHECK(dirichlet_kernel(5, 0.0) == 11.0);
  CHECK(dirichlet_kernel(5, two_pi) == 11.0);
  // D_1(pi/2) = 1 + 2 cos(pi/2) = 1
  CHECK(dirichlet_kernel(1, std::numbers::pi / 2.0) == Catch::Approx(1.0).epsilon(1e-14));
  // closed form vs direct sum near and far from the singular points
  for (double x : {1e-9, 1e-4, 0.02, 0.5, 2.0, 3.1, 6.2}) {
    for (int m : {1, 4, 13, 20}) {
      double direct = 1.0;
      for (int k = 1; k <= m; ++k) direct += 2.0 * std::cos(k * x);
      CHECK(dirichlet_kernel(m, x) == Catch::Approx(direct).margin(1e-12));
    }
  }
  CHECK_THROWS_AS(dirichlet_kernel(-1, 0.5), std::invalid_argument);
}

TEST_CASE("closed-form coefficients: known values") {
  // c_1 of the degree-1 element: i * psi_1(1) = i sqrt(2) pi^(-1/4) e^(-1/2)
  FourierCoefficientSet coeffs = coeffs_closed_form(1, 3);
  const double expected = std::sqrt(2.0) * pi_quarter_inv * std::exp(-0.5);
  CHECK(coeffs.at(1).imag() == Catch::Approx(expected).epsilon(1e-14));
  CHECK(coeffs.at(1).real() == 0.0);
  CHECK(expected == Catch::Approx(0.6442883651134752).epsilon(1e-12));
  CHECK(coeffs.at(-1).imag() == Catch::Approx(-expected).epsilon(1e-14));
  CHECK(coeffs.at(4) == std::complex<double>(0.0));  // out of range -> 0
}

TEST_CASE("quadrature coefficients match the closed form") {
  for (int n : {0, 1, 2, 7}) {
    CircleSamples samples = sample_basis(n, 512).samples;
    FourierCoefficientSet quad = coeffs_by_quadrature(samples, 6);
    FourierCoefficientSet closed = coeffs_closed_form(n, 6);
    for (int m = -6; m <= 6; ++m) CHECK(std::abs(quad.at(m) - closed.at(m)) < 1e-11);
  }
  CircleSamples tiny = make_circle_samples(8);
  CHECK_THROWS_AS(coeffs_by_quadrature(tiny, 4), std::invalid_argument);
}

TEST_CASE("synthesis evaluates the series") {
  // degree 0: synthesis at the certified coefficient range reproduces c_0
  FourierCoefficientSet coeffs = coeffs_closed_form(0, 24);
  for (double phi : {-2.5, 0.0, 0.9})
    CHECK(synthesize(coeffs, phi).real() == Catch::Approx(evaluate_c(0, phi)).margin(1e-11));
}

TEST_CASE("real-line transform eigen property") {
  for (int n : {0, 1, 2, 3}) {
    std::complex<double> lhs =
        ft_real_line([n](double x) { return psi_value(n, x); }, 0.8, -20.0, 20.0);
    std::complex<double> rhs = i_power(n) * psi_value(n, 0.8);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("finite periodization transform identity") {
  const double ys[3] = {0.0, 0.6, -1.4};
  CHECK(verify_finite_ft(0, 1, ys) < 1e-7);
  CHECK(verify_finite_ft(3, 2, ys) < 1e-7);
}

TEST_CASE("basis expansion recurrences") {
  // Phi applied twice vs the series route, on the coefficient expansion
  BasisExpansion e = BasisExpansion::unit(2);
  BasisExpansion phi2 = e.apply_position_recurrence();
  // Phi c_2 = sqrt(1) c_1 + sqrt(3/2) c_3
  CHECK(phi2.coeffs.at(1) == Catch::Approx(1.0));
  CHECK(phi2.coeffs.at(3) == Catch::Approx(std::sqrt(1.5)));
  for (double phi : {-0.7, 1.8})
    CHECK(phi2.evaluate(phi) == Catch::Approx(apply_position(2, phi)).margin(1e-11));
}
