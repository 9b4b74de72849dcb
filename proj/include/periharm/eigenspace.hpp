#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "periharm/hermite.hpp"
#include "periharm/quadrature.hpp"

namespace periharm {

/// A function on a symmetric grid of the real line.
struct RealLineSamples {
  std::vector<double> x;
  std::vector<std::complex<double>> values;

  double spacing() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
};

/// Uniform symmetric grid: odd point count, x_j = (j - (J-1)/2) h, so the
/// reflection x -> -x is exactly an index permutation.
inline RealLineSamples make_symmetric_grid(double half_length, std::size_t points) {
  if (points < 3 || points % 2 == 0)
    throw std::invalid_argument("make_symmetric_grid: point count must be odd and >= 3");
  RealLineSamples out;
  out.x.resize(points);
  out.values.assign(points, 0.0);
  const double h = 2.0 * half_length / static_cast<double>(points - 1);
  const long c = static_cast<long>((points - 1) / 2);
  for (std::size_t j = 0; j < points; ++j)
    out.x[j] = static_cast<double>(static_cast<long>(j) - c) * h;
  return out;
}

inline void check_reflection_closed(const RealLineSamples& f) {
  const std::size_t n = f.x.size();
  for (std::size_t j = 0; j < n; ++j)
    if (f.x[n - 1 - j] != -f.x[j]) throw std::invalid_argument("grid not reflection-closed");
}

inline RealLineSamples sample_function(const std::function<std::complex<double>(double)>& f,
                                       double half_length, std::size_t points) {
  RealLineSamples out = make_symmetric_grid(half_length, points);
  for (std::size_t j = 0; j < points; ++j) out.values[j] = f(out.x[j]);
  return out;
}

/// f(-x) as an index permutation.
inline RealLineSamples reflect(const RealLineSamples& f) {
  check_reflection_closed(f);
  RealLineSamples out = f;
  const std::size_t n = f.x.size();
  for (std::size_t j = 0; j < n; ++j) out.values[j] = f.values[n - 1 - j];
  return out;
}

/// Numerical Fourier transform of grid samples onto the same grid,
/// g(x_j) = (1/sqrt(2 pi)) h sum_k e^{i x_j x_k} f(x_k). Trapezoid rule;
/// spectrally accurate for smooth functions decayed below rounding at the
/// window edge.
inline RealLineSamples ft_on_grid(const RealLineSamples& f) {
  const std::size_t n = f.x.size();
  RealLineSamples out = f;
  const double h = f.spacing();
  const double scale = h / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      acc += f.values[k] * std::polar(1.0, f.x[j] * f.x[k]);
    out.values[j] = scale * acc;
  }
  return out;
}

/// Hermite coefficients f_n = integral f psi_n by weight-compensated
/// Gauss-Hermite quadrature.
inline std::vector<std::complex<double>> hermite_coefficients(
    const std::function<std::complex<double>(double)>& f, int n_max, int quad_points = 128) {
  if (n_max < 0) throw std::invalid_argument("hermite_coefficients: nMax must be >= 0");
  const GaussHermiteRule rule = gauss_hermite_rule(quad_points);
  std::vector<std::complex<double>> coeffs(n_max + 1, 0.0);
  std::vector<double> p0(quad_points), p1(quad_points);
  std::vector<std::complex<double>> fw(quad_points);
  for (int i = 0; i < quad_points; ++i) {
    const double x = rule.nodes[i];
    fw[i] = rule.weights[i] * std::exp(x * x) * f(x);
    p0[i] = pi_quarter_inv * std::exp(-0.5 * x * x);
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i < quad_points; ++i) coeffs[n] += fw[i] * p0[i];
    if (n == n_max) break;
    for (int i = 0; i < quad_points; ++i) {
      const double x = rule.nodes[i];
      double next = (n == 0) ? x * std::sqrt(2.0) * p0[i]
                             : x * std::sqrt(2.0 / (n + 1)) * p0[i] -
                                   std::sqrt(static_cast<double>(n) / (n + 1)) * p1[i];
      p1[i] = p0[i];
      p0[i] = next;
    }
  }
  return coeffs;
}

/// Same coefficients from grid samples by the trapezoid rule.
inline std::vector<std::complex<double>> hermite_coefficients(const RealLineSamples& f, int n_max) {
  const std::size_t points = f.x.size();
  const double h = f.spacing();
  std::vector<std::complex<double>> coeffs(n_max + 1, 0.0);
  for (int n = 0; n <= n_max; ++n)
    for (std::size_t j = 0; j < points; ++j)
      coeffs[n] += h * f.values[j] * psi_value(n, f.x[j]);
  return coeffs;
}

enum class SplitRoute { coefficients, projectors };

/// The four Fourier-eigencomponents of f on a common grid; components sum
/// to f, and component k is an eigenvector of the FT with eigenvalue i^k.
struct C4Split {
  RealLineSamples grid;                        // carries f itself
  std::vector<std::complex<double>> plus_one;  // n == 0 (mod 4), eigenvalue +1
  std::vector<std::complex<double>> plus_i;    // n == 1 (mod 4), eigenvalue +i
  std::vector<std::complex<double>> minus_one; // n == 2 (mod 4), eigenvalue -1
  std::vector<std::complex<double>> minus_i;   // n == 3 (mod 4), eigenvalue -i
  SplitRoute route = SplitRoute::coefficients;

  std::vector<std::complex<double>>& component(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return plus_one;
      case 1: return plus_i;
      case 2: return minus_one;
      default: return minus_i;
    }
  }
  const std::vector<std::complex<double>>& component(int k) const {
    return const_cast<C4Split*>(this)->component(k);
  }
};

/// Partial sums over coefficient classes n mod 4, evaluated on the grid.
inline C4Split split_by_coefficients(const std::function<std::complex<double>(double)>& f,
                                     const RealLineSamples& grid, int n_max = 48,
                                     double tail_guard = 1e-10) {
  std::vector<std::complex<double>> coeffs = hermite_coefficients(f, n_max);
  for (int n = std::max(0, n_max - 3); n <= n_max; ++n)
    if (std::abs(coeffs[n]) >= tail_guard) throw std::runtime_error("insufficient nMax");

  C4Split out;
  out.grid = grid;
  out.route = SplitRoute::coefficients;
  const std::size_t points = grid.x.size();
  for (int k = 0; k < 4; ++k) out.component(k).assign(points, 0.0);
  for (std::size_t j = 0; j < points; ++j) {
    const double x = grid.x[j];
    double p0 = pi_quarter_inv * std::exp(-0.5 * x * x), p1 = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      out.component(n % 4)[j] += coeffs[n] * p0;
      double next = (n == 0) ? x * std::sqrt(2.0) * p0
                             : x * std::sqrt(2.0 / (n + 1)) * p0 -
                                   std::sqrt(static_cast<double>(n) / (n + 1)) * p1;
      p1 = p0;
      p0 = next;
    }
  }
  return out;
}

/// Same split from grid samples only, with trapezoid-rule coefficients.
inline C4Split split_by_coefficients(const RealLineSamples& f, int n_max = 48,
                                     double tail_guard = 1e-10) {
  std::vector<std::complex<double>> coeffs = hermite_coefficients(f, n_max);
  for (int n = std::max(0, n_max - 3); n <= n_max; ++n)
    if (std::abs(coeffs[n]) >= tail_guard) throw std::runtime_error("insufficient nMax");

  C4Split out;
  out.grid = f;
  out.route = SplitRoute::coefficients;
  const std::size_t points = f.x.size();
  for (int k = 0; k < 4; ++k) out.component(k).assign(points, 0.0);
  for (std::size_t j = 0; j < points; ++j) {
    const double x = f.x[j];
    double p0 = pi_quarter_inv * std::exp(-0.5 * x * x), p1 = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      out.component(n % 4)[j] += coeffs[n] * p0;
      double next = (n == 0) ? x * std::sqrt(2.0) * p0
                             : x * std::sqrt(2.0 / (n + 1)) * p0 -
                                   std::sqrt(static_cast<double>(n) / (n + 1)) * p1;
      p1 = p0;
      p0 = next;
    }
  }
  return out;
}

/// Reflection/FT combinations: with g = FT[f],
///   f_{+1} = (f(x)+f(-x)+g(x)+g(-x))/4 and the three companions.
inline C4Split split_by_projectors(const RealLineSamples& f) {
  check_reflection_closed(f);
  const RealLineSamples fr = reflect(f);
  const RealLineSamples g = ft_on_grid(f);
  const RealLineSamples gr = reflect(g);

  C4Split out;
  out.grid = f;
  out.route = SplitRoute::projectors;
  const std::size_t points = f.x.size();
  const std::complex<double> i_unit(0.0, 1.0);
  for (int k = 0; k < 4; ++k) out.component(k).assign(points, 0.0);
  for (std::size_t j = 0; j < points; ++j) {
    const auto fv = f.values[j], fm = fr.values[j], gv = g.values[j], gm = gr.values[j];
    out.plus_one[j] = 0.25 * (fv + fm + gv + gm);
    out.plus_i[j] = 0.25 * (fv - fm - i_unit * gv + i_unit * gm);
    out.minus_one[j] = 0.25 * (fv + fm - gv - gm);
    out.minus_i[j] = 0.25 * (fv - fm + i_unit * gv - i_unit * gm);
  }
  return out;
}

/// One projector applied to grid samples.
inline RealLineSamples apply_projector(const RealLineSamples& f, int k) {
  C4Split split = split_by_projectors(f);
  RealLineSamples out = f;
  out.values = split.component(k);
  return out;
}

struct ProjectorAlgebraReport {
  double idempotency = 0.0;        // max |P_a P_a f - P_a f|
  double mutual_annihilation = 0.0;  // max |P_a P_b f|, a != b
  double resolution_of_identity = 0.0;  // |sum_a P_a f - f|
  double parity_recombination = 0.0;    // P_E vs P_{+1}+P_{-1}, P_O vs P_{+i}+P_{-i}
};

inline ProjectorAlgebraReport verify_projector_algebra(const RealLineSamples& f) {
  ProjectorAlgebraReport report;
  const std::size_t points = f.x.size();
  C4Split split = split_by_projectors(f);
  const RealLineSamples fr = reflect(f);

  std::vector<RealLineSamples> comps(4, f);
  for (int k = 0; k < 4; ++k) comps[k].values = split.component(k);

  for (int a = 0; a < 4; ++a) {
    C4Split again = split_by_projectors(comps[a]);
    for (int b = 0; b < 4; ++b) {
      for (std::size_t j = 0; j < points; ++j) {
        const std::complex<double> target = (a == b) ? comps[a].values[j] : 0.0;
        const double err = std::abs(again.component(b)[j] - target);
        if (a == b)
          report.idempotency = std::max(report.idempotency, err);
        else
          report.mutual_annihilation = std::max(report.mutual_annihilation, err);
      }
    }
  }

  for (std::size_t j = 0; j < points; ++j) {
    std::complex<double> total = split.plus_one[j] + split.plus_i[j] + split.minus_one[j] + split.minus_i[j];
    report.resolution_of_identity =
        std::max(report.resolution_of_identity, std::abs(total - f.values[j]));

    const std::complex<double> even = 0.5 * (f.values[j] + fr.values[j]);
    const std::complex<double> odd = 0.5 * (f.values[j] - fr.values[j]);
    report.parity_recombination = std::max(
        report.parity_recombination,
        std::max(std::abs(split.plus_one[j] + split.minus_one[j] - even),
                 std::abs(split.plus_i[j] + split.minus_i[j] - odd)));
  }
  return report;
}

/// Max |FT[component] - i^k component| on the grid, for the eigencheck.
inline double ft_eigen_residual(const C4Split& split, int k) {
  RealLineSamples comp = split.grid;
  comp.values = split.component(k);
  const RealLineSamples g = ft_on_grid(comp);
  const std::complex<double> eigenvalue = [k] {
    switch (((k % 4) + 4) % 4) {
      case 0: return std::complex<double>(1.0, 0.0);
      case 1: return std::complex<double>(0.0, 1.0);
      case 2: return std::complex<double>(-1.0, 0.0);
      default: return std::complex<double>(0.0, -1.0);
    }
  }();
  double worst = 0.0;
  for (std::size_t j = 0; j < comp.x.size(); ++j)
    worst = std::max(worst, std::abs(g.values[j] - eigenvalue * comp.values[j]));
  return worst;
}

}  // namespace periharm
