#include "lindmap/sweep.hpp"

#include <fstream>

#include "lindmap/io.hpp"

namespace lindmap {

namespace {

std::vector<double> grid(double from, double to, int steps) {
    if (steps < 2) throw ParameterOutOfRange("sweep needs at least 2 steps");
    std::vector<double> g(static_cast<size_t>(steps));
    for (int k = 0; k < steps; ++k)
        g[static_cast<size_t>(k)] = from + (to - from) * k / (steps - 1);
    return g;
}

} // namespace

SweepTable gamma_sweep(const DensityMatrix& rho, double from, double to, int steps,
                       bool rotated, bool with_witness, bool with_ngme, double K) {
    SweepTable t;
    t.param_name = "gamma";
    t.columns = {"min_eigenvalue"};
    if (with_witness) t.columns.push_back("witness_value");
    if (with_ngme) t.columns.push_back("n_gme");

    const double wit = with_witness ? witness_value(gme_witness(), rho) : 0.0;
    const double measure = with_ngme ? n_gme(rho, K) : 0.0;

    for (double g : grid(from, to, steps)) {
        SweepRow row;
        row.param = g;
        row.values.push_back(detect_gme(rho, g, rotated).min_eigenvalue);
        if (with_witness) row.values.push_back(wit);
        if (with_ngme) row.values.push_back(measure);
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable noisy_w_p_sweep(double from, double to, int steps, double K) {
    SweepTable t;
    t.param_name = "p";
    t.columns = {"n_gme"};
    for (double p : grid(from, to, steps)) {
        SweepRow row;
        row.param = p;
        row.values.push_back(n_gme(noisy_w(p), K));
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepTable family_choi_sweep(const MapFamily& family, double from, double to, int steps) {
    SweepTable t;
    t.param_name = family.param;
    t.columns = {"choi_min_eigenvalue"};
    for (double v : grid(from, to, steps)) {
        SweepRow row;
        row.param = v;
        row.values.push_back(min_eigenvalue(choi(family.make(v))));
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_csv(std::ostream& out, const SweepTable& table) {
    out << "param";
    for (const std::string& c : table.columns) out << "," << c;
    out << "\n";
    for (const SweepRow& row : table.rows) {
        out << format_double(row.param);
        for (double v : row.values) out << "," << format_double(v);
        out << "\n";
    }
}

void write_csv_file(const std::string& path, const SweepTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write CSV file: " + path);
    write_csv(out, table);
}

} // namespace lindmap
