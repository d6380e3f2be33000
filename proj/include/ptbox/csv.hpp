// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ptbox/spectral.hpp"
#include "ptbox/sweep.hpp"

namespace ptbox {
namespace csv {

// Shortest round-trip style float formatting ("%.17g"); identical input bits
// give identical text, which is what makes the CSV outputs reproducible.
std::string g17(double v);

// header: irrep,index,re_E,im_E,residual
void write_spectrum(std::ostream& out, const std::string& irrep_name,
                    const spectral::Spectrum& s);
void write_spectrum_header(std::ostream& out);
void write_spectrum_rows(std::ostream& out, const std::string& irrep_name,
                         const spectral::Spectrum& s);

// header: a,irrep,label,re_E,im_E
void write_sweep(std::ostream& out, const SweepResult& sr);

// header: irrep,label_pair,a_c,re_Ec,im_Ec,bracket_width
void write_ep(std::ostream& out, const std::vector<ExceptionalPoint>& eps);

}  // namespace csv
}  // namespace ptbox
