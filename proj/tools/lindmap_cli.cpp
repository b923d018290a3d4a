// lindmap: construct positive-but-not-completely-positive maps, classify
// them, and run entanglement detection on three-qubit states.
//
// Exit codes: 0 success (detection verdicts are output data, not exit
// codes), 1 usage error, 2 data or numerical error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lindmap/gme.hpp"
#include "lindmap/io.hpp"
#include "lindmap/sweep.hpp"

using namespace lindmap;
using ordered_json = nlohmann::ordered_json;

namespace {

// LINDMAP_TOL overrides the detection/positivity decision tolerance.
double decision_tol() {
    const char* s = std::getenv("LINDMAP_TOL");
    if (s && *s) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && v > 0.0) return v;
    }
    return kDetectionThreshold;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write output file: " + path);
    out << text;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < m.dim(); ++k)
            row.push_back(ordered_json::array({m(i, k).real(), m(i, k).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const ordered_json& j) {
    const int dim = j.at("dim").get<int>();
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
    return m;
}

struct AnalyzeArgs {
    std::string family;
    double param = 0.0;
    int samples = 0;
    std::uint64_t seed = kDefaultSeed;
    bool as_json = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
    const MapFamily& fam = find_family(a.family);
    const SuperOp op = fam.make(a.param);
    const ComplexMatrix ch = choi(op);
    const Spectrum spec = eig_hermitian(ch, false);
    const bool positive = fam.positive(a.param);
    const bool cp = fam.completely_positive(a.param);

    std::optional<PureScanResult> scan;
    if (a.samples > 0) scan = min_output_eigenvalue_over_pure(op, a.samples, a.seed);

    if (a.as_json) {
        ordered_json j;
        j["family"] = fam.name;
        j["param"] = a.param;
        j["positive"] = positive;
        j["completely_positive"] = cp;
        j["choi_min_eigenvalue"] = spec.eigenvalues.front();
        j["choi_eigenvalues"] = spec.eigenvalues;
        if (scan) {
            j["scan_min_eigenvalue"] = scan->min_eigenvalue;
            j["scan_positive"] = scan->min_eigenvalue >= -decision_tol();
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::ostringstream out;
    out << "family: " << fam.name << "\n";
    out << "param: " << format_double(a.param) << "\n";
    out << "positive: " << (positive ? "true" : "false") << "\n";
    out << "completely_positive: " << (cp ? "true" : "false") << "\n";
    out << "choi_min_eigenvalue: " << format_double(spec.eigenvalues.front()) << "\n";
    out << "choi_eigenvalues:";
    for (double v : spec.eigenvalues) out << " " << format_double(v);
    out << "\n";
    if (scan) {
        out << "scan_min_eigenvalue: " << format_double(scan->min_eigenvalue) << "\n";
        out << "scan_positive: "
            << (scan->min_eigenvalue >= -decision_tol() ? "true" : "false") << "\n";
    }
    std::cout << out.str();
    return 0;
}

struct DetectArgs {
    std::string state_path;
    double gamma = 0.5;
    bool rotated = false;
    bool with_witness = false;
    bool with_ngme = false;
    double K = 1.0;
};

int cmd_detect(const DetectArgs& a) {
    const DensityMatrix rho = read_state_file(a.state_path);
    DetectionReport r = detect_gme(rho, a.gamma, a.rotated);
    const double tol = decision_tol();
    r.verdict = (r.min_eigenvalue < -tol) ? Verdict::Detected : Verdict::NotDetected;

    ordered_json j;
    j["state"] = a.state_path;
    j["gamma"] = r.gamma;
    j["rotated"] = r.rotated;
    j["c"] = r.c;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["verdict"] = to_string(r.verdict);
    if (a.with_witness) j["witness_value"] = witness_value(gme_witness(), rho);
    if (a.with_ngme) j["n_gme"] = n_gme(rho, a.K);
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct SweepArgs {
    std::string param;
    std::string state_path;
    std::string family;
    double from = 0.0;
    double to = 0.5;
    int steps = 51;
    bool rotated = false;
    bool with_witness = false;
    bool with_ngme = false;
    double K = 1.0;
    std::string out_path;
};

int cmd_sweep(const SweepArgs& a) {
    if (a.steps < 2) throw CLI::ValidationError("sweep", "--steps must be at least 2");
    if (!(a.from < a.to)) throw CLI::ValidationError("sweep", "--from must be below --to");
    const bool has_state = !a.state_path.empty();
    const bool has_family = !a.family.empty();
    if (has_state && has_family)
        throw CLI::ValidationError("sweep", "--state and --family are mutually exclusive");

    SweepTable table;
    if (a.param == "p") {
        if (has_state || has_family)
            throw CLI::ValidationError("sweep", "the p sweep runs on the built-in noisy W family");
        table = noisy_w_p_sweep(a.from, a.to, a.steps, a.K);
    } else if (a.param == "gamma" && has_state) {
        const DensityMatrix rho = read_state_file(a.state_path);
        table = gamma_sweep(rho, a.from, a.to, a.steps, a.rotated, a.with_witness,
                            a.with_ngme, a.K);
    } else if (has_family) {
        const MapFamily& fam = find_family(a.family);
        if (fam.param != a.param)
            throw CLI::ValidationError("sweep", "family " + fam.name + " is parameterized by " +
                                                    fam.param + ", not " + a.param);
        table = family_choi_sweep(fam, a.from, a.to, a.steps);
    } else {
        throw CLI::ValidationError("sweep",
                                   "need --state for gamma sweeps or --family for map sweeps");
    }

    std::ostringstream ss;
    write_csv(ss, table);
    write_text(a.out_path, ss.str());
    return 0;
}

struct StateArgs {
    std::string name;
    std::string in_path;
    double p = 1.0;
    double c1 = 1.0 / 1.4142135623730951;
    double c2 = 1.0 / 1.4142135623730951;
    bool raw = false;
    std::string out_path;
};

int cmd_state(const StateArgs& a) {
    if (a.name.empty() == a.in_path.empty())
        throw CLI::ValidationError("state", "give exactly one of <name> or --in");
    if (a.raw && a.in_path.empty())
        throw CLI::ValidationError("state", "--raw only applies to --in");

    if (!a.in_path.empty() && a.raw) {
        // Raw mode: echo the matrix without density-matrix validation.
        std::ifstream in(a.in_path);
        if (!in) throw ParseError("cannot open state file: " + a.in_path);
        ordered_json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("state file is not valid JSON: " + std::string(e.what()));
        }
        ComplexMatrix m;
        std::vector<int> dims;
        try {
            m = matrix_from_json(j);
            if (j.contains("dims")) dims = j.at("dims").get<std::vector<int>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("state file structure: " + std::string(e.what()));
        }
        if (dims.empty()) dims = {m.dim()};
        ordered_json out;
        out["dim"] = m.dim();
        out["dims"] = dims;
        out["matrix"] = matrix_to_json(m);
        write_text(a.out_path, out.dump(2) + "\n");
        return 0;
    }

    DensityMatrix dm;
    if (!a.in_path.empty()) {
        dm = read_state_file(a.in_path);
    } else if (a.name == "w") {
        dm = w_state();
    } else if (a.name == "w-flipped") {
        dm = w_state_flipped();
    } else if (a.name == "ghz") {
        dm = ghz_state();
    } else if (a.name == "noisy-w") {
        dm = noisy_w(a.p);
    } else if (a.name == "schmidt") {
        dm = schmidt_state(a.c1, a.c2);
    } else if (a.name == "mixed") {
        dm = maximally_mixed({2, 2, 2});
    } else {
        throw CLI::ValidationError(
            "state", "unknown state " + a.name + " (w, w-flipped, ghz, noisy-w, schmidt, mixed)");
    }

    if (!a.out_path.empty()) {
        write_state_file(a.out_path, dm);
        return 0;
    }
    ordered_json j;
    j["dim"] = dm.matrix.dim();
    j["dims"] = dm.dims;
    j["matrix"] = matrix_to_json(dm.matrix);
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct ChoiArgs {
    std::string family;
    double param = 0.0;
    std::string out_path;
};

int cmd_choi(const ChoiArgs& a) {
    const MapFamily& fam = find_family(a.family);
    const ComplexMatrix ch = choi(fam.make(a.param));
    const Spectrum spec = eig_hermitian(ch, false);
    ordered_json j;
    j["family"] = fam.name;
    j["param"] = a.param;
    j["dim"] = ch.dim();
    j["psd"] = spec.eigenvalues.front() >= -decision_tol();
    j["eigenvalues"] = spec.eigenvalues;
    j["matrix"] = matrix_to_json(ch);
    write_text(a.out_path, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lindblad-structured positive map construction and GME detection"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    CLI::App* analyze = app.add_subcommand("analyze", "classify a map family at a parameter");
    analyze->add_option("family", an.family, "family name (lambda-gamma, phi-alpha, phi2-alpha, phiC-beta, choi-F)")
        ->required();
    analyze->add_option("param", an.param, "parameter value")->required();
    analyze->add_option("--samples", an.samples, "also run a pure-state positivity scan with this many samples");
    analyze->add_option("--seed", an.seed, "scan RNG seed");
    analyze->add_flag("--json", an.as_json, "emit a JSON record instead of text");

    DetectArgs de;
    CLI::App* detect = app.add_subcommand("detect", "run GME detection on a three-qubit state file");
    detect->add_option("state", de.state_path, "state JSON file")->required();
    detect->add_option("--gamma", de.gamma, "map parameter (default 0.5)");
    detect->add_flag("--rotated", de.rotated, "conjugate the party map output by sigma_x");
    detect->add_flag("--witness", de.with_witness, "include the witness expectation value");
    detect->add_flag("--ngme", de.with_ngme, "include the GME measure");
    detect->add_option("--K", de.K, "measure normalization constant");

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    sweep->add_option("param", sw.param, "swept parameter: gamma, alpha, beta, or p")
        ->required()
        ->check(CLI::IsMember({"gamma", "alpha", "beta", "p"}));
    sweep->add_option("--state", sw.state_path, "three-qubit state file for lifted gamma sweeps");
    sweep->add_option("--family", sw.family, "map family for Choi-spectrum sweeps");
    sweep->add_option("--from", sw.from, "sweep start")->required();
    sweep->add_option("--to", sw.to, "sweep end")->required();
    sweep->add_option("--steps", sw.steps, "number of grid points (inclusive ends)")->required();
    sweep->add_flag("--rotated", sw.rotated, "rotate the party map in gamma sweeps");
    sweep->add_flag("--witness", sw.with_witness, "add a witness_value column");
    sweep->add_flag("--ngme", sw.with_ngme, "add an n_gme column");
    sweep->add_option("--K", sw.K, "measure normalization constant");
    sweep->add_option("--out", sw.out_path, "write CSV here instead of stdout");

    StateArgs st;
    CLI::App* state = app.add_subcommand("state", "emit or re-validate a state file");
    state->add_option("name", st.name, "w, w-flipped, ghz, noisy-w, schmidt, or mixed");
    state->add_option("--in", st.in_path, "re-emit an existing state file");
    state->add_option("--p", st.p, "noisy-w mixing weight");
    state->add_option("--c1", st.c1, "schmidt coefficient 1");
    state->add_option("--c2", st.c2, "schmidt coefficient 2");
    state->add_flag("--raw", st.raw, "skip density-matrix validation when reading --in");
    state->add_option("--out", st.out_path, "write JSON here instead of stdout");

    ChoiArgs ch;
    CLI::App* choi_cmd = app.add_subcommand("choi", "dump the Choi matrix of a family");
    choi_cmd->add_option("family", ch.family, "family name")->required();
    choi_cmd->add_option("param", ch.param, "parameter value")->required();
    choi_cmd->add_option("--out", ch.out_path, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
        if (*analyze) return cmd_analyze(an);
        if (*detect) return cmd_detect(de);
        if (*sweep) return cmd_sweep(sw);
        if (*state) return cmd_state(st);
        if (*choi_cmd) return cmd_choi(ch);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
