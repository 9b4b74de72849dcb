#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "periharm/fft.hpp"
#include "periharm/hermite.hpp"

namespace periharm {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle into [-pi, pi).
inline double wrap_angle(double phi) {
  double r = std::remainder(phi, two_pi);  // (-pi, pi]
  if (r == std::numbers::pi) r = -std::numbers::pi;
  return r;
}

/// Smallest K such that the Gaussian-tail majorant of the periodization
/// series, 2 (2pi)^(2n) e^pi (n+1)! sum_{k>=K} e^{-(k+1)} (k+1)^n, drops
/// below tol. power_weight adds a factor (2pi(k+1))^a for the series with
/// an extra (phi+2k pi)^a in each term. The tail sum is capped by a
/// geometric bound valid once K+1 >= 2(n+a), so the returned K is a
/// certified (slightly conservative) choice. Done in log space.
inline int truncation_halfwidth(int n, double tol, int power_weight = 0) {
  if (n < 0) throw std::invalid_argument("truncation_halfwidth: degree must be >= 0");
  if (!(tol > 0.0) || tol >= 1.0e300) throw std::invalid_argument("invalid tolerance");
  const double a = power_weight;
  const double log_pref = std::log(2.0) + std::numbers::pi + (2.0 * n + a) * std::log(two_pi) +
                          std::lgamma(n + 2.0);
  // tail_{k>=K} e^{-(k+1)}(k+1)^{n+a} <= t_K / (1 - e^{-1/2}) for K+1 >= 2(n+a)
  const double tail_factor = 1.0 / (1.0 - std::exp(-0.5));
  const double log_target = std::log(tol);
  int k = std::max(1, static_cast<int>(std::ceil(2.0 * (n + a))));
  for (;; ++k) {
    double log_term = -(k + 1.0) + (n + a) * std::log(k + 1.0);
    if (log_pref + log_term + std::log(tail_factor) < log_target) return k;
    if (k > 100000) throw std::runtime_error("truncation_halfwidth: no convergence");
  }
}

/// Exact finite truncation: sum_{k=-m}^{m} psi_n(x + 2 pi k). x unrestricted.
inline double evaluate_c_partial(int n, double x, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("evaluate_c_partial: arguments must be >= 0");
  double acc = 0.0;
  for (int k = -m; k <= m; ++k) acc += psi_value(n, x + two_pi * k);
  return acc;
}

/// Periodized Hermite function: sum over translates truncated at the
/// certified halfwidth for tol. Absolute error below tol.
inline double evaluate_c(int n, double phi, double tol = 1e-12) {
  return evaluate_c_partial(n, wrap_angle(phi), truncation_halfwidth(n, tol));
}

/// Position-like operator: sum (phi+2k pi) psi_n(phi+2k pi), truncated
/// with the weight-adjusted majorant.
inline double apply_position(int n, double phi, double tol = 1e-12) {
  const double p = wrap_angle(phi);
  const int half = truncation_halfwidth(n, tol, 1);
  double acc = 0.0;
  for (int k = -half; k <= half; ++k) {
    double x = p + two_pi * k;
    acc += x * psi_value(n, x);
  }
  return acc;
}

/// Integer powers only; fractional exponents hit an undefined branch for
/// negative translates.
inline double apply_position_power(int n, double phi, int a, double tol = 1e-12) {
  if (a < 1) throw std::invalid_argument("unsupported exponent");
  const double p = wrap_angle(phi);
  const int half = truncation_halfwidth(n, tol, a);
  double acc = 0.0;
  for (int k = -half; k <= half; ++k) {
    double x = p + two_pi * k;
    acc += std::pow(x, a) * psi_value(n, x);
  }
  return acc;
}

/// Derivative operator: sum of psi_n' over the translates.
inline double apply_derivative(int n, double phi, double tol = 1e-12) {
  const double p = wrap_angle(phi);
  const int half = truncation_halfwidth(n, tol, 1);  // psi' carries an x factor
  double acc = 0.0;
  for (int k = -half; k <= half; ++k) acc += psi_derivative_value(n, p + two_pi * k);
  return acc;
}

inline double ladder_raise(int n, double phi, double tol = 1e-12) {
  return std::sqrt(n + 1.0) * evaluate_c(n + 1, phi, tol);
}

inline double ladder_lower(int n, double phi, double tol = 1e-12) {
  if (n == 0) return 0.0;
  return std::sqrt(static_cast<double>(n)) * evaluate_c(n - 1, phi, tol);
}

struct PeriodizationSpec {
  int degree = 0;
  double tol = 1e-12;
  int halfwidth = 1;
};

inline PeriodizationSpec make_periodization_spec(int n, double tol) {
  return {n, tol, truncation_halfwidth(n, tol)};
}

/// A 2*pi-periodic function as N uniform samples at phi_j = -pi + 2 pi j / N.
struct CircleSamples {
  std::size_t size = 0;
  std::vector<std::complex<double>> values;

  double phi_at(std::size_t j) const {
    return -std::numbers::pi + two_pi * static_cast<double>(j) / static_cast<double>(size);
  }

  /// (1/2pi) integral |f|^2 by the trapezoid rule on the periodic grid.
  double norm_squared() const {
    double acc = 0.0;
    for (const auto& v : values) acc += std::norm(v);
    return acc / static_cast<double>(size);
  }
};

/// <f|g> = (1/2pi) integral conj(f) g by the trapezoid rule; exact to
/// spectral accuracy for smooth periodic integrands.
inline std::complex<double> circle_inner(const CircleSamples& f, const CircleSamples& g) {
  if (f.size != g.size) throw std::invalid_argument("circle_inner: grid mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < f.size; ++j) acc += std::conj(f.values[j]) * g.values[j];
  return acc / static_cast<double>(f.size);
}

inline CircleSamples make_circle_samples(std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("grid size");
  return {n, std::vector<std::complex<double>>(n, 0.0)};
}

struct CircleBasisElement {
  PeriodizationSpec spec;
  CircleSamples samples;
};

inline CircleBasisElement sample_basis(int n, std::size_t grid, double tol = 1e-12) {
  CircleBasisElement out{make_periodization_spec(n, tol), make_circle_samples(grid)};
  const int half = out.spec.halfwidth;
  for (std::size_t j = 0; j < grid; ++j)
    out.samples.values[j] = evaluate_c_partial(n, out.samples.phi_at(j), half);
  return out;
}

/// A finite linear combination of the periodized basis, degree -> coefficient.
/// Carries the tridiagonal recurrences of the position and derivative
/// operators so compositions (powers, commutators) stay in coefficient space.
struct BasisExpansion {
  std::map<int, double> coeffs;

  static BasisExpansion unit(int n) { return {{{n, 1.0}}}; }

  BasisExpansion apply_position_recurrence() const {
    BasisExpansion out;
    for (auto [n, c] : coeffs) {
      if (n >= 1) out.coeffs[n - 1] += c * std::sqrt(n / 2.0);
      out.coeffs[n + 1] += c * std::sqrt((n + 1) / 2.0);
    }
    return out;
  }

  BasisExpansion apply_derivative_recurrence() const {
    BasisExpansion out;
    for (auto [n, c] : coeffs) {
      if (n >= 1) out.coeffs[n - 1] += c * std::sqrt(n / 2.0);
      out.coeffs[n + 1] -= c * std::sqrt((n + 1) / 2.0);
    }
    return out;
  }

  BasisExpansion scaled(double s) const {
    BasisExpansion out = *this;
    for (auto& [n, c] : out.coeffs) c *= s;
    return out;
  }

  BasisExpansion plus(const BasisExpansion& other) const {
    BasisExpansion out = *this;
    for (auto [n, c] : other.coeffs) out.coeffs[n] += c;
    return out;
  }

  double evaluate(double phi, double tol = 1e-12) const {
    double acc = 0.0;
    for (auto [n, c] : coeffs) acc += c * evaluate_c(n, phi, tol);
    return acc;
  }
};

}  // namespace periharm
