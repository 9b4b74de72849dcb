#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "periharm/fourier.hpp"
#include "periharm/parallel.hpp"
#include "periharm/periodized.hpp"
#include "periharm/real256.hpp"
#include "periharm/sequences.hpp"

namespace periharm {

/// Gram matrix of the periodized basis, entries <c_n|c_m> = i^(m-n) (chi_n, chi_m).
/// Entries with n+m odd vanish by parity; all others are real.
struct GramMatrix {
  int n_max = 0;
  std::vector<std::complex<double>> entries;  // (n_max+1)^2, row-major

  std::complex<double> at(int n, int m) const { return entries[n * (n_max + 1) + m]; }
  std::complex<double>& at_mut(int n, int m) { return entries[n * (n_max + 1) + m]; }
  int size() const { return n_max + 1; }
};

inline GramMatrix gram_matrix(int n_max, double tol = 1e-12) {
  if (n_max < 0) throw std::invalid_argument("gram_matrix: nMax must be >= 0");
  GramMatrix g;
  g.n_max = n_max;
  g.entries.assign((n_max + 1) * (n_max + 1), 0.0);
  std::vector<IntegerSequence> chi(n_max + 1);
  parallel_for(n_max + 1, [&](std::size_t n) { chi[n] = chi_build(static_cast<int>(n), tol); });
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n_max; ++m)
      g.at_mut(n, m) = i_power(m - n) * seq_inner(chi[n], chi[m]);
  return g;
}

/// Output of the parity-split Gram-Schmidt pass in coefficient space.
/// Row n of `raw` expresses D_n in the c basis (unit lower triangular,
/// zero across parity); row n of `orthonormal` expresses the unit-norm
/// element. The i^n phases of the sequence side are absorbed into real
/// parity signs when building the chi-hat family (phase_absorbed).
struct GramSchmidtResult {
  int n_max = 0;
  std::vector<std::vector<double>> raw;          // unit lower triangular R
  std::vector<double> norms;                     // <D_n|D_n>
  std::vector<std::vector<double>> orthonormal;  // rows of hat-C coefficients
  double residual = 0.0;                         // max |A G A^T - I|
  bool phase_absorbed = true;
  // hatted sequence values recombined before rounding (extended-precision
  // path only); empty when the plain double path produced the result
  std::vector<IntegerSequence> hat_sequences;
};

/// Modified Gram-Schmidt in coefficient space with one reorthogonalization
/// pass; even and odd chains are processed independently.
inline GramSchmidtResult gram_schmidt(const GramMatrix& g) {
  const int n = g.size();
  // the matrix is real by parity; keep the real part and refuse surprises
  std::vector<std::vector<double>> gr(n, std::vector<double>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (std::abs(g.at(a, b).imag()) > 1e-12)
        throw std::invalid_argument("gram_schmidt: matrix is not parity-real");
      gr[a][b] = g.at(a, b).real();
    }

  auto inner = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
      if (u[a] == 0.0) continue;
      double row = 0.0;
      for (int b = 0; b < n; ++b) row += gr[a][b] * v[b];
      acc += u[a] * row;
    }
    return acc;
  };

  GramSchmidtResult result;
  result.n_max = g.n_max;
  result.raw.assign(n, std::vector<double>(n, 0.0));
  result.norms.assign(n, 0.0);
  result.orthonormal.assign(n, std::vector<double>(n, 0.0));

  const double pivot_floor = 1e-13 * gr[0][0];
  for (int k = 0; k < n; ++k) {
    std::vector<double>& d = result.raw[k];
    d[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = (k % 2); j < k; j += 2) {
        double proj = inner(result.raw[j], d) / result.norms[j];
        for (int b = 0; b <= j; ++b) d[b] -= proj * result.raw[j][b];
      }
    }
    result.norms[k] = inner(d, d);
    if (!(result.norms[k] > pivot_floor))
      throw std::runtime_error("numerically dependent family at index " + std::to_string(k));
    const double inv = 1.0 / std::sqrt(result.norms[k]);
    for (int b = 0; b <= k; ++b) result.orthonormal[k][b] = d[b] * inv;
  }

  // residual of the orthonormalized Gram against the identity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double v = inner(result.orthonormal[a], result.orthonormal[b]) - (a == b ? 1.0 : 0.0);
      result.residual = std::max(result.residual, std::abs(v));
    }
  return result;
}

/// Orthonormalization of the family at 256-bit precision, everything
/// (psi values, Gram entries, the Gram-Schmidt sweep, the hatted
/// recombinations) computed in Real256 and rounded to double only at the
/// end. The double-path gram_schmidt above breaks down around n = 14: the
/// Gram pivots of this family decay by roughly three orders of magnitude
/// per parity step, so by index 15 they sit near 1e-12 and double
/// arithmetic can no longer resolve them.
inline GramSchmidtResult gram_schmidt_extended(int n_max, double tol = 1e-12) {
  if (n_max < 0) throw std::invalid_argument("gram_schmidt_extended: nMax must be >= 0");
  const int n = n_max + 1;
  // wide enough that the discarded psi tail is negligible even against
  // coefficient amplification ~ 1/sqrt(smallest pivot)
  const int half = static_cast<int>(std::ceil(std::sqrt(2.0 * n_max + 1.0))) + 36;
  const int width = 2 * half + 1;

  // psi_k(m) at 256 bits by the stable recurrence
  const Real256 pi = Real256::pi();
  const Real256 quarter_root = pi.sqrt().sqrt();
  std::vector<std::vector<Real256>> psi(n, std::vector<Real256>(width));
  for (int m = -half; m <= half; ++m) {
    const Real256 x(static_cast<long>(m));
    Real256 p0 = (Real256(-0.5) * x * x).exp() / quarter_root;
    psi[0][m + half] = p0;
    if (n == 1) continue;
    Real256 p1 = x * Real256(2.0).sqrt() * p0;
    psi[1][m + half] = p1;
    for (int k = 1; k + 1 < n; ++k) {
      Real256 p2 = x * (Real256(2.0) / Real256(static_cast<long>(k + 1))).sqrt() * p1 -
                   (Real256(static_cast<long>(k)) / Real256(static_cast<long>(k + 1))).sqrt() * p0;
      p0 = p1;
      p1 = p2;
      psi[k + 1][m + half] = p1;
    }
  }

  // real Gram: Re(i^(m-n)) (chi_n, chi_m); zero across parity
  const Real256 inv_two_pi = Real256(1.0) / (Real256(2.0) * pi);
  std::vector<std::vector<Real256>> gram(n, std::vector<Real256>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if ((a + b) % 2 == 1) continue;
      Real256 acc;
      for (int j = 0; j < width; ++j) acc += psi[a][j] * psi[b][j];
      acc *= inv_two_pi;
      if (((b - a) / 2) % 2 == 1) acc = -acc;
      gram[a][b] = acc;
      gram[b][a] = acc;
    }

  auto inner = [&](const std::vector<Real256>& u, const std::vector<Real256>& v) {
    Real256 acc;
    for (int a = 0; a < n; ++a) {
      if (u[a].is_zero()) continue;
      Real256 row;
      for (int b = 0; b < n; ++b) row += gram[a][b] * v[b];
      acc += u[a] * row;
    }
    return acc;
  };

  std::vector<std::vector<Real256>> raw(n, std::vector<Real256>(n));
  std::vector<Real256> norms(n);
  std::vector<std::vector<Real256>> ortho(n, std::vector<Real256>(n));
  const Real256 pivot_floor = Real256(1e-40) * gram[0][0];
  for (int k = 0; k < n; ++k) {
    raw[k][k] = Real256(1.0);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = (k % 2); j < k; j += 2) {
        const Real256 proj = inner(raw[j], raw[k]) / norms[j];
        for (int b = 0; b <= j; ++b) raw[k][b] -= proj * raw[j][b];
      }
    norms[k] = inner(raw[k], raw[k]);
    if (!(norms[k] > pivot_floor))
      throw std::runtime_error("numerically dependent family at index " + std::to_string(k));
    const Real256 inv = Real256(1.0) / norms[k].sqrt();
    for (int b = 0; b <= k; ++b) ortho[k][b] = raw[k][b] * inv;
  }

  GramSchmidtResult result;
  result.n_max = n_max;
  result.raw.assign(n, std::vector<double>(n, 0.0));
  result.norms.assign(n, 0.0);
  result.orthonormal.assign(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    result.norms[k] = norms[k].to_double();
    for (int b = 0; b < n; ++b) {
      result.raw[k][b] = raw[k][b].to_double();
      result.orthonormal[k][b] = ortho[k][b].to_double();
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Real256 v = inner(ortho[a], ortho[b]);
      if (a == b) v -= Real256(1.0);
      result.residual = std::max(result.residual, v.abs().to_double());
    }

  // hatted sequences, recombined at full precision: the orthonormal
  // coefficients grow like 1/sqrt(pivot), so doing this sum in double
  // would forfeit most of the orthonormality just certified
  result.hat_sequences.resize(n);
  for (int row = 0; row < n; ++row) {
    result.hat_sequences[row] = make_sequence(half, tol);
    for (int m = -half; m <= half; ++m) {
      Real256 acc;
      for (int k = row % 2; k <= row; k += 2) {
        Real256 term = ortho[row][k] * psi[k][m + half];
        if (((k - row) / 2) % 2 != 0) term = -term;
        acc += term;
      }
      result.hat_sequences[row].at_mut(m) = acc.to_double();
    }
  }
  return result;
}

/// chi-hat_n = sum_k A_nk (-1)^((k-n)/2) chi_k; the parity sign is the
/// real remnant of the i^(k-n) phase bookkeeping, so the hatted families
/// on both sides stay bridge-coherent.
inline std::vector<IntegerSequence> orthonormal_sequences(const GramSchmidtResult& result,
                                                          double tol = 1e-12) {
  if (!result.hat_sequences.empty()) return result.hat_sequences;
  const int n = result.n_max + 1;
  std::vector<IntegerSequence> chi(n);
  for (int k = 0; k < n; ++k) chi[k] = chi_build(k, tol);
  const int half = chi[n - 1].halfwidth;

  std::vector<IntegerSequence> out(n);
  for (int row = 0; row < n; ++row) {
    out[row] = make_sequence(half, tol);
    for (int k = row % 2; k <= row; k += 2) {
      const double c = result.orthonormal[row][k];
      if (c == 0.0) continue;
      const double sign = (((k - row) / 2) % 2 == 0) ? 1.0 : -1.0;
      for (int m = -half; m <= half; ++m) out[row].at_mut(m) += c * sign * chi[k].at(m);
    }
  }
  return out;
}

/// Samples of each hat-C_n on a circle grid (rows follow the result order).
inline std::vector<CircleSamples> orthonormal_circle_samples(const GramSchmidtResult& result,
                                                             std::size_t grid, double tol = 1e-12) {
  const int n = result.n_max + 1;
  if (!result.hat_sequences.empty()) {
    // synthesize from the bridge: hat-C_n has Fourier coefficients
    // i^n chi-hat_n(m), so the circle samples come out free of the large
    // coefficient cancellations
    std::vector<CircleSamples> out(n);
    for (int row = 0; row < n; ++row) {
      const IntegerSequence& chi_hat = result.hat_sequences[row];
      const std::complex<double> phase = i_power(row) / std::sqrt(two_pi);
      out[row] = make_circle_samples(grid);
      for (std::size_t j = 0; j < grid; ++j) {
        const double phi = out[row].phi_at(j);
        std::complex<double> acc = 0.0;
        for (int m = -chi_hat.halfwidth; m <= chi_hat.halfwidth; ++m)
          acc += chi_hat.at(m) * std::polar(1.0, -m * phi);
        out[row].values[j] = phase * acc;
      }
    }
    return out;
  }
  std::vector<CircleSamples> basis(n);
  parallel_for(n, [&](std::size_t k) { basis[k] = sample_basis(static_cast<int>(k), grid, tol).samples; });
  std::vector<CircleSamples> out(n);
  for (int row = 0; row < n; ++row) {
    out[row] = make_circle_samples(grid);
    for (int k = row % 2; k <= row; k += 2) {
      const double c = result.orthonormal[row][k];
      for (std::size_t j = 0; j < grid; ++j) out[row].values[j] += c * basis[k].values[j];
    }
  }
  return out;
}

struct ExpansionResult {
  std::vector<std::complex<double>> coefficients;  // f-hat_n = <hat-C_n|f>
  IntegerSequence mapped;                          // U f = sum f-hat_n chi-hat_n
};

/// Expand f in the orthonormal circle family by quadrature and map it to
/// l2(Z) coefficient-by-coefficient (the partial isometry on the span).
inline ExpansionResult expand_and_map(const CircleSamples& f, const GramSchmidtResult& result,
                                      double tol = 1e-12) {
  const int n = result.n_max + 1;
  std::vector<CircleSamples> c_hat = orthonormal_circle_samples(result, f.size, tol);
  std::vector<IntegerSequence> chi_hat = orthonormal_sequences(result, tol);

  ExpansionResult out;
  out.coefficients.resize(n);
  out.mapped = make_sequence(chi_hat[0].halfwidth, tol);
  for (int k = 0; k < n; ++k) {
    out.coefficients[k] = circle_inner(c_hat[k], f);
    for (int m = -out.mapped.halfwidth; m <= out.mapped.halfwidth; ++m)
      out.mapped.at_mut(m) += out.coefficients[k] * chi_hat[k].at(m);
  }
  return out;
}

}  // namespace periharm
