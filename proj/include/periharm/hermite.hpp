#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace periharm {

inline constexpr double pi_quarter_inv = 0.75112554446494248286;  // pi^(-1/4)

/// Physicists' Hermite polynomial H_n with exact integer coefficients.
/// Only powers x^k with k == n (mod 2) appear; coeffs[j] multiplies x^(n-2j).
struct HermitePolyExact {
  int degree = 0;
  std::vector<mpz_class> coeffs;

  mpz_class eval_int(long x) const {
    mpz_class acc = 0;
    mpz_class xx = mpz_class(x) * x;
    // Horner in x^2, then one trailing x for odd degree
    for (const auto& c : coeffs) acc = acc * xx + c;
    if (degree % 2 == 1) acc *= x;
    return acc;
  }

  double eval(double x) const {
    double acc = 0.0;
    const double xx = x * x;
    for (const auto& c : coeffs) acc = acc * xx + c.get_d();
    if (degree % 2 == 1) acc *= x;
    return acc;
  }
};

/// H_{n+1} = 2x H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2x.
inline HermitePolyExact hermite_poly_exact(int n) {
  if (n < 0) throw std::invalid_argument("hermite_poly_exact: degree must be >= 0");
  // rows store coefficients of x^n, x^(n-2), ...
  std::vector<mpz_class> prev = {1};   // H_0
  if (n == 0) return {0, prev};
  std::vector<mpz_class> cur = {2};    // H_1
  for (int k = 1; k < n; ++k) {
    std::vector<mpz_class> next((k + 1) / 2 + 1);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j] = 2 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j + 1] -= 2 * k * prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

/// H_n(k) for integer k, by the value recurrence. Exact.
inline mpz_class hermite_value_int(int n, long k) {
  if (n < 0) throw std::invalid_argument("hermite_value_int: degree must be >= 0");
  mpz_class h0 = 1;
  if (n == 0) return h0;
  mpz_class h1 = 2 * static_cast<mpz_class>(k);
  for (int j = 1; j < n; ++j) {
    mpz_class h2 = 2 * k * h1 - 2 * j * h0;
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

struct HermiteValueSet {
  int degree = 0;
  std::vector<double> points;
  std::vector<double> values;       // psi_n at the points
  std::vector<double> derivatives;  // empty unless requested
};

/// Normalized Hermite function psi_n(x) by the stable recurrence
/// psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1},
/// seeded psi_0 = pi^(-1/4) exp(-x^2/2). Never forms H_n * Gaussian.
inline double psi_value(int n, double x) {
  if (n < 0) throw std::invalid_argument("psi_value: degree must be >= 0");
  if (x * x > 1400.0) return 0.0;  // seed underflows; true value far below any tolerance here
  double p0 = pi_quarter_inv * std::exp(-0.5 * x * x);
  if (n == 0) return p0;
  double p1 = x * std::sqrt(2.0) * p0;
  for (int k = 1; k < n; ++k) {
    double p2 = x * std::sqrt(2.0 / (k + 1)) * p1 - std::sqrt(static_cast<double>(k) / (k + 1)) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// psi_n'(x) = sqrt(2n) psi_{n-1}(x) - x psi_n(x).
inline double psi_derivative_value(int n, double x) {
  double d = -x * psi_value(n, x);
  if (n > 0) d += std::sqrt(2.0 * n) * psi_value(n - 1, x);
  return d;
}

inline HermiteValueSet psi_values(int n, std::span<const double> points) {
  HermiteValueSet out;
  out.degree = n;
  out.points.assign(points.begin(), points.end());
  out.values.reserve(points.size());
  for (double x : points) out.values.push_back(psi_value(n, x));
  return out;
}

inline HermiteValueSet psi_derivative_values(int n, std::span<const double> points) {
  HermiteValueSet out = psi_values(n, points);
  out.derivatives.reserve(points.size());
  for (double x : points) out.derivatives.push_back(psi_derivative_value(n, x));
  return out;
}

}  // namespace periharm
