#include "lindmap/gme.hpp"

#include <cmath>
#include <utility>

namespace lindmap {

double default_c(double gamma) {
    return 2.0 * std::abs(gamma);
}

LiftedMap lift(const SuperOp& base, double c,
               const std::optional<ComplexMatrix>& rotation) {
    const int d = base.dim();
    SuperOp party_map = base;
    if (rotation) {
        if (rotation->dim() != d)
            throw DimensionMismatch("lift: rotation dimension differs from base map");
        party_map = SuperOp::conjugation(*rotation) * base;
    }
    const std::vector<int> dims = {d, d, d};
    const int D = d * d * d;

    SuperOp total = embed(party_map, dims, 0);
    total += embed(party_map, dims, 1);
    total += embed(party_map, dims, 2);

    // c tr(rho) I as a rank-one transfer: |vec I><vec I|.
    const std::vector<Complex> vec_id = vec(ComplexMatrix::identity(D));
    ComplexMatrix trace_term = ComplexMatrix::outer(vec_id, vec_id);
    trace_term *= Complex(c, 0.0);
    total += SuperOp(D, trace_term);

    return LiftedMap{base, c, rotation, std::move(total)};
}

ComplexMatrix apply(const LiftedMap& L, const ComplexMatrix& rho) {
    return apply(L.total, rho);
}

const char* to_string(Verdict v) {
    return v == Verdict::Detected ? "GME_DETECTED" : "NOT_DETECTED";
}

namespace {

void require_three_qubits(const DensityMatrix& rho) {
    if (rho.matrix.dim() != 8 || rho.dims != std::vector<int>{2, 2, 2})
        throw DimensionMismatch("expected a three-qubit state");
}

double lifted_min_eig(const DensityMatrix& rho, double gamma, bool rotated) {
    std::optional<ComplexMatrix> rot;
    if (rotated) rot = sigma(1);
    const LiftedMap lm = lift(lambda_gamma(gamma), 1.0, rot);
    return min_eigenvalue(apply(lm, rho.matrix).hermitian_part());
}

} // namespace

DetectionReport detect_gme(const DensityMatrix& rho, double gamma, bool rotated) {
    require_three_qubits(rho);
    DetectionReport r;
    r.gamma = gamma;
    r.rotated = rotated;
    r.c = 1.0;
    r.min_eigenvalue = lifted_min_eig(rho, gamma, rotated);
    r.verdict = (r.min_eigenvalue < -kDetectionThreshold) ? Verdict::Detected
                                                          : Verdict::NotDetected;
    return r;
}

ComplexMatrix gme_witness() {
    static const ComplexMatrix w = [] {
        const LiftedMap lm = lift(lambda_gamma(0.5), 1.0);
        return apply(lm, w_state().matrix).hermitian_part();
    }();
    return w;
}

double witness_value(const ComplexMatrix& witness, const DensityMatrix& rho) {
    if (witness.dim() != rho.matrix.dim())
        throw DimensionMismatch("witness and state dimensions differ");
    return (witness * rho.matrix).trace().real();
}

double n_gme(const DensityMatrix& rho, double K) {
    require_three_qubits(rho);
    if (K <= 0.0) throw ParameterOutOfRange("n_gme: K must be positive");
    static const LiftedMap lifted_t = lift(SuperOp::transposition(2), 1.0);
    ComplexMatrix out = apply(lifted_t, rho.matrix).hermitian_part();
    out *= Complex(1.0 / kNGmeTraceWeight, 0.0);
    const double val = (trace_norm(out) - 1.0) / K;
    return (val <= kMeasureClamp) ? 0.0 : val;
}

double n_gme_unit_w_constant() {
    static const double v = n_gme(w_state(), 1.0);
    return v;
}

double gamma_detection_boundary(const DensityMatrix& rho, bool rotated,
                                double lo, double hi, double tol) {
    require_three_qubits(rho);
    if (!(lo < hi)) throw ParameterOutOfRange("gamma bracket is empty");
    if (tol <= 0.0) throw ParameterOutOfRange("tolerance must be positive");

    double flo = lifted_min_eig(rho, lo, rotated);
    double fhi = lifted_min_eig(rho, hi, rotated);
    if (!(flo > 0.0 && fhi < 0.0) && !(flo < 0.0 && fhi > 0.0))
        throw NoSignChange("minimum eigenvalue does not change sign over the bracket");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = lifted_min_eig(rho, mid, rotated);
        if ((flo > 0.0) == (fmid > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace lindmap
