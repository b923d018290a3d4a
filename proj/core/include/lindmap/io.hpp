#pragma once

#include <string>

#include "lindmap/states.hpp"

namespace lindmap {

// State files are JSON: {"dim": n, "dims": [..] (optional), "matrix": rows},
// where each matrix entry is a [re, im] pair. Validation runs on load, so a
// file that parses but is not a density matrix still fails loudly.
DensityMatrix read_state_file(const std::string& path);
void write_state_file(const std::string& path, const DensityMatrix& dm);

// Shortest-round-trip-adjacent formatting used by every CSV and text report.
std::string format_double(double v);

} // namespace lindmap
