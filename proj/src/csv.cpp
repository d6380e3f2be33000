// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptbox/csv.hpp"

#include <cstdio>

namespace ptbox {
namespace csv {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_spectrum_header(std::ostream& out) {
  out << "irrep,index,re_E,im_E,residual\n";
}

void write_spectrum_rows(std::ostream& out, const std::string& irrep_name,
                         const spectral::Spectrum& s) {
  const bool have_res = s.residuals.size() == s.eigenvalues.size();
  for (int i = 0; i < int(s.eigenvalues.size()); ++i) {
    out << irrep_name << ',' << i << ',' << g17(s.eigenvalues[i].real()) << ','
        << g17(s.eigenvalues[i].imag()) << ','
        << (have_res ? g17(s.residuals[i]) : std::string("nan")) << '\n';
  }
}

void write_spectrum(std::ostream& out, const std::string& irrep_name,
                    const spectral::Spectrum& s) {
  write_spectrum_header(out);
  write_spectrum_rows(out, irrep_name, s);
}

void write_sweep(std::ostream& out, const SweepResult& sr) {
  out << "a,irrep,label,re_E,im_E\n";
  for (int k = 0; k < sr.point_count(); ++k)
    for (int b = 0; b < sr.block_count(); ++b) {
      const std::string name = to_string(sr.irreps[b]);
      const auto& v = sr.levels[k][b];
      for (int l = 0; l < int(v.size()); ++l)
        out << g17(sr.a_values[k]) << ',' << name << ',' << l << ','
            << g17(v[l].real()) << ',' << g17(v[l].imag()) << '\n';
    }
}

void write_ep(std::ostream& out, const std::vector<ExceptionalPoint>& eps) {
  out << "irrep,label_pair,a_c,re_Ec,im_Ec,bracket_width\n";
  for (const auto& ep : eps) {
    out << to_string(ep.irrep) << ',' << ep.label_low << '-' << ep.label_high
        << ',' << g17(ep.a_c) << ',' << g17(ep.energy.real()) << ','
        << g17(ep.energy.imag()) << ',' << g17(ep.bracket_width) << '\n';
  }
}

}  // namespace csv
}  // namespace ptbox
