#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "periharm/hermite.hpp"

namespace periharm {

/// A truncated element of l2(Z), values indexed m = -M..M.
struct IntegerSequence {
  int degree = -1;  // basis index, or -1 for operator outputs
  int halfwidth = 0;
  double tol = 1e-12;
  std::vector<std::complex<double>> values;  // size 2*halfwidth+1

  std::complex<double> at(int m) const {
    int idx = m + halfwidth;
    if (idx < 0 || idx >= static_cast<int>(values.size())) return 0.0;
    return values[idx];
  }
  std::complex<double>& at_mut(int m) { return values[m + halfwidth]; }
};

/// Support halfwidth covering the classical turning point plus the
/// Gaussian tail; checked against the tail majorant in the tests.
inline int sequence_halfwidth(int n, double tol) {
  if (n < 0) throw std::invalid_argument("sequence_halfwidth: degree must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("invalid tolerance");
  return static_cast<int>(std::ceil(std::sqrt(2.0 * n + 1.0))) +
         static_cast<int>(std::ceil(std::sqrt(2.0 * std::log(1.0 / tol)))) + 2;
}

inline IntegerSequence make_sequence(int halfwidth, double tol = 1e-12, int degree = -1) {
  IntegerSequence s;
  s.degree = degree;
  s.halfwidth = halfwidth;
  s.tol = tol;
  s.values.assign(2 * halfwidth + 1, 0.0);
  return s;
}

/// chi_n = { psi_n(m) }, truncated with certified tail below tol.
inline IntegerSequence chi_build(int n, double tol = 1e-12) {
  IntegerSequence s = make_sequence(sequence_halfwidth(n, tol), tol, n);
  for (int m = -s.halfwidth; m <= s.halfwidth; ++m) s.at_mut(m) = psi_value(n, m);
  return s;
}

/// Same sequence with an explicitly enlarged support (metamorphic checks).
inline IntegerSequence chi_build_with_halfwidth(int n, int halfwidth, double tol = 1e-12) {
  IntegerSequence s = make_sequence(halfwidth, tol, n);
  for (int m = -halfwidth; m <= halfwidth; ++m) s.at_mut(m) = psi_value(n, m);
  return s;
}

/// Scalar product (A,B) = (1/2pi) sum conj(a_m) b_m over the union support.
inline std::complex<double> seq_inner(const IntegerSequence& a, const IntegerSequence& b) {
  const int half = std::max(a.halfwidth, b.halfwidth);
  std::complex<double> acc = 0.0;
  for (int m = -half; m <= half; ++m) acc += std::conj(a.at(m)) * b.at(m);
  return acc / (2.0 * std::numbers::pi);
}

inline double seq_norm(const IntegerSequence& a) { return std::sqrt(seq_inner(a, a).real()); }

/// Componentwise multiplication by m^a.
inline IntegerSequence apply_M_power(const IntegerSequence& s, int a) {
  if (a < 1) throw std::invalid_argument("unsupported exponent");
  IntegerSequence out = s;
  out.degree = -1;
  for (int m = -s.halfwidth; m <= s.halfwidth; ++m)
    out.at_mut(m) = std::pow(static_cast<double>(m), a) * s.at(m);
  return out;
}

inline IntegerSequence apply_M(const IntegerSequence& s) { return apply_M_power(s, 1); }

/// D chi_n componentwise: psi_n'(m) = sqrt(2n) psi_{n-1}(m) - m psi_n(m).
inline IntegerSequence apply_D_seq(int n, double tol = 1e-12) {
  IntegerSequence s = make_sequence(sequence_halfwidth(n, tol), tol);
  for (int m = -s.halfwidth; m <= s.halfwidth; ++m) s.at_mut(m) = psi_derivative_value(n, m);
  return s;
}

enum class LadderDirection { raise, lower };

/// B+ chi_n = sqrt(n+1) chi_{n+1}; B- chi_n = sqrt(n) chi_{n-1} (zero at n=0).
inline IntegerSequence ladder_B(int n, LadderDirection dir, double tol = 1e-12) {
  if (dir == LadderDirection::raise) {
    IntegerSequence out = chi_build(n + 1, tol);
    for (auto& v : out.values) v *= std::sqrt(n + 1.0);
    out.degree = -1;
    return out;
  }
  if (n == 0) return make_sequence(sequence_halfwidth(0, tol), tol);
  IntegerSequence out = chi_build(n - 1, tol);
  for (auto& v : out.values) v *= std::sqrt(static_cast<double>(n));
  out.degree = -1;
  return out;
}

/// Residual of the oscillator identity (1/2)(M^2 - D^2) chi_n = (n + 1/2) chi_n,
/// with D^2 taken from the closed second-derivative identity
/// psi_n''(m) = (m^2 - 2n - 1) psi_n(m).
inline double number_check(int n, double tol = 1e-12) {
  const int half = sequence_halfwidth(n, tol);
  double worst = 0.0;
  for (int m = -half; m <= half; ++m) {
    double psi = psi_value(n, m);
    double second = (static_cast<double>(m) * m - 2.0 * n - 1.0) * psi;
    double lhs = 0.5 * (static_cast<double>(m) * m * psi - second);
    double rhs = (n + 0.5) * psi;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace periharm
