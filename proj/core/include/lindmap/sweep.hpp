#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lindmap/gme.hpp"

namespace lindmap {

struct SweepRow {
    double param = 0.0;
    std::vector<double> values;
};

struct SweepTable {
    std::string param_name;            // first CSV column header
    std::vector<std::string> columns;  // remaining headers, one per value
    std::vector<SweepRow> rows;
};

// Detection quantities over gamma for a fixed three-qubit state. Always
// reports min_eigenvalue; witness_value and n_gme columns are opt-in
// (n_gme does not vary with gamma but is convenient alongside).
SweepTable gamma_sweep(const DensityMatrix& rho, double from, double to, int steps,
                       bool rotated = false, bool with_witness = false,
                       bool with_ngme = false, double K = 1.0);

// n_gme of the noisy W family over the mixing parameter p.
SweepTable noisy_w_p_sweep(double from, double to, int steps, double K = 1.0);

// Minimum Choi eigenvalue of a registered map family over its parameter;
// the zero crossing marks the complete-positivity edge.
SweepTable family_choi_sweep(const MapFamily& family, double from, double to, int steps);

// param,<columns> header, one row per line, %.17g fields, LF endings.
void write_csv(std::ostream& out, const SweepTable& table);
void write_csv_file(const std::string& path, const SweepTable& table);

} // namespace lindmap
