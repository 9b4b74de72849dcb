#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "periharm/hermite.hpp"
#include "periharm/parallel.hpp"

namespace periharm {

/// Dense arbitrary-precision integer matrix.
struct ExactMatrix {
  std::size_t dim = 0;
  std::vector<mpz_class> entries;  // row-major

  const mpz_class& at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
  mpz_class& at_mut(std::size_t r, std::size_t c) { return entries[r * dim + c]; }

  ExactMatrix transposed() const {
    ExactMatrix out{dim, std::vector<mpz_class>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) out.at_mut(c, r) = at(r, c);
    return out;
  }
};

/// First family: rows H_0..H_{2m}, columns k = -m..m. (2m+1) square.
inline ExactMatrix matrix_A(int m) {
  if (m < 0) throw std::invalid_argument("matrix_A: m must be >= 0");
  const std::size_t d = 2 * m + 1;
  ExactMatrix out{d, std::vector<mpz_class>(d * d)};
  for (std::size_t r = 0; r < d; ++r)
    for (int k = -m; k <= m; ++k)
      out.at_mut(r, static_cast<std::size_t>(k + m)) = hermite_value_int(static_cast<int>(r), k);
  return out;
}

/// Second family: rows H_0..H_m, columns k = 0..m. (m+1) square.
inline ExactMatrix matrix_B(int m) {
  if (m < 0) throw std::invalid_argument("matrix_B: m must be >= 0");
  const std::size_t d = m + 1;
  ExactMatrix out{d, std::vector<mpz_class>(d * d)};
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      out.at_mut(r, c) = hermite_value_int(static_cast<int>(r), static_cast<long>(c));
  return out;
}

/// Fraction-free (Bareiss) elimination over the integers: every division
/// along the way is exact, so the result is the exact determinant.
inline mpz_class exact_determinant(ExactMatrix m) {
  const std::size_t d = m.dim;
  if (d == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < d && m.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == d) return 0;
      for (std::size_t c = 0; c < d; ++c) std::swap(m.at_mut(k, c), m.at_mut(swap_row, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < d; ++r) {
      for (std::size_t c = k + 1; c < d; ++c) {
        mpz_class v = m.at(k, k) * m.at(r, c) - m.at(r, k) * m.at(k, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at_mut(r, c) = std::move(v);
      }
      m.at_mut(r, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(d - 1, d - 1);
}

struct DeterminantRecord {
  char family = 'A';
  int m = 0;
  bool nonzero = false;
  std::size_t bit_length = 0;
  int sign = 0;
};

/// Both determinant families for every m <= mMax, exactly. A zero
/// determinant would falsify the linear-independence claim and throws.
inline std::vector<DeterminantRecord> certify_nonzero(int m_max) {
  if (m_max < 0) throw std::invalid_argument("certify_nonzero: mMax must be >= 0");
  std::vector<DeterminantRecord> records(2 * (m_max + 1));
  parallel_for(records.size(), [&](std::size_t idx) {
    const int m = static_cast<int>(idx) / 2;
    const char family = (idx % 2 == 0) ? 'A' : 'B';
    const mpz_class det = exact_determinant(family == 'A' ? matrix_A(m) : matrix_B(m));
    records[idx] = {family, m, det != 0, mpz_sizeinbase(det.get_mpz_t(), 2), sgn(det)};
  });
  for (const auto& rec : records)
    if (!rec.nonzero)
      throw std::runtime_error("completeness certification failed: zero determinant at m = " +
                               std::to_string(rec.m));
  return records;
}

}  // namespace periharm
