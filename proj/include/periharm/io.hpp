#pragma once

#include <complex>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "periharm/eigenspace.hpp"
#include "periharm/fourier.hpp"
#include "periharm/periodized.hpp"
#include "periharm/sequences.hpp"

namespace periharm {

/// 17 significant digits: round-trip exact for 64-bit floats, so identical
/// inputs yield byte-identical output.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline void write_circle_csv(std::ostream& os, const CircleSamples& f) {
  os << "phi,value_re,value_im\n";
  for (std::size_t j = 0; j < f.size; ++j)
    os << format_double(f.phi_at(j)) << ',' << format_double(f.values[j].real()) << ','
       << format_double(f.values[j].imag()) << '\n';
}

inline void write_sequence_csv(std::ostream& os, const IntegerSequence& s) {
  os << "m,value_re,value_im\n";
  for (int m = -s.halfwidth; m <= s.halfwidth; ++m)
    os << m << ',' << format_double(s.at(m).real()) << ',' << format_double(s.at(m).imag())
       << '\n';
}

inline void write_coefficients_csv(std::ostream& os, const FourierCoefficientSet& c) {
  os << "m,c_re,c_im\n";
  for (int m = -c.m_max; m <= c.m_max; ++m)
    os << m << ',' << format_double(c.at(m).real()) << ',' << format_double(c.at(m).imag())
       << '\n';
}

inline void write_matrix_csv(std::ostream& os, const std::vector<std::vector<double>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << format_double(row[k]);
    }
    os << '\n';
  }
}

inline void write_split_csv(std::ostream& os, const C4Split& split) {
  os << "x,f_re,f_im,fp1_re,fp1_im,fpi_re,fpi_im,fm1_re,fm1_im,fmi_re,fmi_im\n";
  for (std::size_t j = 0; j < split.grid.x.size(); ++j) {
    os << format_double(split.grid.x[j]);
    const std::complex<double> cols[5] = {split.grid.values[j], split.plus_one[j],
                                          split.plus_i[j], split.minus_one[j], split.minus_i[j]};
    for (const auto& v : cols)
      os << ',' << format_double(v.real()) << ',' << format_double(v.imag());
    os << '\n';
  }
}

inline std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("malformed number: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace periharm
