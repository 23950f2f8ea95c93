#pragma once

#include <string>

#include "oudisp/field.hpp"

namespace oudisp {

/// Binary field format: magic "OUFIELD1", int32 m, int32 N, float64 L,
/// int32 gauge (0 = PHI, 1 = PSI), then N^m little-endian complex doubles
/// (re, im interleaved).  Round trips are bit exact.
void save_field(const ComplexField& f, const std::string& path);
ComplexField load_field(const std::string& path);

}  // namespace oudisp
