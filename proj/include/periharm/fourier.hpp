#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "periharm/fft.hpp"
#include "periharm/periodized.hpp"
#include "periharm/quadrature.hpp"

namespace periharm {

inline std::complex<double> i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// Dirichlet kernel D_m(x) = sum_{k=-m}^{m} e^{ikx} = sin((m+1/2)x)/sin(x/2).
/// Near x in 2 pi Z the closed form loses digits, so the finite cosine sum
/// is used there; at the points themselves the value is 2m+1.
inline double dirichlet_kernel(int m, double x) {
  if (m < 0) throw std::invalid_argument("dirichlet_kernel: order must be >= 0");
  const double r = std::remainder(x, two_pi);  // kernel is 2 pi periodic
  if (r == 0.0) return 2.0 * m + 1.0;
  if (std::abs(r) < 1e-2) {
    double acc = 1.0;
    for (int k = 1; k <= m; ++k) acc += 2.0 * std::cos(k * r);
    return acc;
  }
  return std::sin((m + 0.5) * r) / std::sin(0.5 * r);
}

enum class CoeffProvenance { quadrature, closed_form };

/// Fourier coefficients c_m, m = -mMax..mMax, in the convention
/// c_m = (1/sqrt(2 pi)) integral e^{+i m phi} f(phi) dphi.
struct FourierCoefficientSet {
  int m_max = 0;
  std::vector<std::complex<double>> coefficients;  // index m + m_max
  CoeffProvenance provenance = CoeffProvenance::quadrature;

  std::complex<double> at(int m) const {
    if (m < -m_max || m > m_max) return 0.0;
    return coefficients[m + m_max];
  }
  std::complex<double>& at_mut(int m) { return coefficients[m + m_max]; }
};

/// Trapezoid rule on the periodic grid, evaluated through a radix-2 FFT.
inline FourierCoefficientSet coeffs_by_quadrature(const CircleSamples& f, int m_max) {
  if (m_max < 0) throw std::invalid_argument("coeffs_by_quadrature: mMax must be >= 0");
  const std::size_t n = f.size;
  if (static_cast<std::size_t>(m_max) >= n / 2) throw std::invalid_argument("aliasing");
  std::vector<std::complex<double>> work = f.values;
  fft_radix2(work, +1);  // F[k] = sum_j f_j e^{+2 pi i jk/N}
  FourierCoefficientSet out;
  out.m_max = m_max;
  out.provenance = CoeffProvenance::quadrature;
  out.coefficients.resize(2 * m_max + 1);
  const double scale = std::sqrt(two_pi) / static_cast<double>(n);
  for (int m = -m_max; m <= m_max; ++m) {
    const std::size_t idx = static_cast<std::size_t>((m % static_cast<int>(n) + static_cast<int>(n))) % n;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // e^{-i m pi} from the grid offset
    out.at_mut(m) = scale * sign * work[idx];
  }
  return out;
}

/// Closed form for the periodized basis: c_m = i^n psi_n(m).
inline FourierCoefficientSet coeffs_closed_form(int n, int m_max) {
  if (n < 0 || m_max < 0) throw std::invalid_argument("coeffs_closed_form: arguments must be >= 0");
  FourierCoefficientSet out;
  out.m_max = m_max;
  out.provenance = CoeffProvenance::closed_form;
  out.coefficients.resize(2 * m_max + 1);
  const std::complex<double> phase = i_power(n);
  for (int m = -m_max; m <= m_max; ++m) out.at_mut(m) = phase * psi_value(n, m);
  return out;
}

/// Synthesis: (1/sqrt(2 pi)) sum_m c_m e^{-i m phi}.
inline std::complex<double> synthesize(const FourierCoefficientSet& coeffs, double phi) {
  std::complex<double> acc = 0.0;
  for (int m = -coeffs.m_max; m <= coeffs.m_max; ++m)
    acc += coeffs.at(m) * std::polar(1.0, -m * phi);
  return acc / std::sqrt(two_pi);
}

/// Real-line Fourier transform (1/sqrt(2 pi)) integral_a^b e^{ixy} f(x) dx
/// by Gauss-Legendre on the compact window.
inline std::complex<double> ft_real_line(const std::function<double(double)>& f, double y,
                                         double a, double b, int nodes = 2048) {
  const GaussLegendreRule rule = gauss_legendre_rule(nodes, a, b);
  std::complex<double> acc = 0.0;
  for (int i = 0; i < nodes; ++i)
    acc += rule.weights[i] * f(rule.nodes[i]) * std::polar(1.0, rule.nodes[i] * y);
  return acc / std::sqrt(two_pi);
}

/// Max residual of FT[ c_n(x; m) ](y) = i^n D_m(2 pi y) psi_n(y)
/// over the supplied y values.
inline double verify_finite_ft(int n, int m, std::span<const double> y_points) {
  const double window = (2.0 * m + 3.0) * std::numbers::pi;
  double worst = 0.0;
  for (double y : y_points) {
    std::complex<double> lhs = ft_real_line(
        [n, m](double x) { return evaluate_c_partial(n, x, m); }, y, -window, window);
    std::complex<double> rhs = i_power(n) * dirichlet_kernel(m, two_pi * y) * psi_value(n, y);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace periharm
