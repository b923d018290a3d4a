#include "lindmap/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace lindmap {

using nlohmann::json;

DensityMatrix read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("state file is not valid JSON: " + std::string(e.what()));
    }
    try {
        const int dim = j.at("dim").get<int>();
        std::vector<int> dims;
        if (j.contains("dims")) dims = j.at("dims").get<std::vector<int>>();
        const auto& rows = j.at("matrix");
        if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
            throw ParseError("matrix row count differs from dim");
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            const auto& row = rows[static_cast<size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                throw ParseError("matrix row length differs from dim");
            for (int k = 0; k < dim; ++k) {
                const auto& cell = row[static_cast<size_t>(k)];
                if (!cell.is_array() || cell.size() != 2)
                    throw ParseError("matrix entries must be [re, im] pairs");
                m(i, k) = Complex(cell[0].get<double>(), cell[1].get<double>());
            }
        }
        return make_density(std::move(m), std::move(dims));
    } catch (const json::exception& e) {
        throw ParseError("state file structure: " + std::string(e.what()));
    }
}

void write_state_file(const std::string& path, const DensityMatrix& dm) {
    json rows = json::array();
    const int dim = dm.matrix.dim();
    for (int i = 0; i < dim; ++i) {
        json row = json::array();
        for (int k = 0; k < dim; ++k) {
            const Complex& v = dm.matrix(i, k);
            row.push_back(json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    json j;
    j["dim"] = dim;
    j["dims"] = dm.dims;
    j["matrix"] = std::move(rows);

    std::ofstream out(path, std::ios::binary);   // binary keeps LF endings
    if (!out) throw ParseError("cannot write state file: " + path);
    out << j.dump(2) << "\n";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace lindmap
