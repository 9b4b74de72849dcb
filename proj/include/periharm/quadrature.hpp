#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace periharm {

namespace detail {

/// QL with implicit shifts for a symmetric tridiagonal matrix.
/// d: diagonal (returns eigenvalues), e: off-diagonal e[0..n-2],
/// z0: a row vector rotated along; seeded with (1,0,...,0) it ends up
/// holding the first component of every eigenvector.
inline void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z0) {
  const int n = static_cast<int>(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 50) throw std::runtime_error("quadrature construction failed");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = (i >= l);
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z0[i + 1];
          z0[i + 1] = s * z0[i] + c * f;
          z0[i] = c * z0[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

struct GaussHermiteRule {
  int count = 0;
  std::vector<double> nodes;
  std::vector<double> weights;  // for weight exp(-x^2) on the real line
};

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix with
/// off-diagonals sqrt(k/2); weights sqrt(pi) * (first eigenvector component)^2.
inline GaussHermiteRule gauss_hermite_rule(int q) {
  if (q < 1) throw std::invalid_argument("gauss_hermite_rule: node count must be >= 1");
  std::vector<double> d(q, 0.0), e(q > 1 ? q - 1 : 0), z0(q, 0.0);
  for (int k = 1; k < q; ++k) e[k - 1] = std::sqrt(k / 2.0);
  z0[0] = 1.0;
  detail::tridiag_ql(d, e, z0);

  std::vector<int> idx(q);
  for (int i = 0; i < q; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

  GaussHermiteRule rule;
  rule.count = q;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < q; ++i) {
    rule.nodes[i] = d[idx[i]];
    rule.weights[i] = sqrt_pi * z0[idx[i]] * z0[idx[i]];
  }
  // nodes of an even-weight rule come in +/- pairs; pin the symmetry
  for (int i = 0, j = q - 1; i < j; ++i, --j) {
    double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = rule.weights[j] = w;
  }
  if (q % 2 == 1) rule.nodes[q / 2] = 0.0;
  return rule;
}

struct GaussLegendreRule {
  int count = 0;
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Newton iteration on P_n with the Chebyshev-like initial guess.
inline GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: node count must be >= 1");
  GaussLegendreRule rule;
  rule.count = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n and P_n'
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

/// Same rule mapped onto [a, b]. The [-1, 1] rule is cached per node
/// count since window mapping is cheap but the Newton solve is not.
inline GaussLegendreRule gauss_legendre_rule(int n, double a, double b) {
  static std::mutex cache_mutex;
  static std::map<int, GaussLegendreRule> cache;
  GaussLegendreRule rule;
  {
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_legendre_rule(n)).first;
    rule = it->second;
  }
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + hw * rule.nodes[i];
    rule.weights[i] *= hw;
  }
  return rule;
}

}  // namespace periharm
