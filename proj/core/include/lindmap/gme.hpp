#pragma once

#include <optional>

#include "lindmap/families.hpp"
#include "lindmap/states.hpp"
#include "lindmap/superop.hpp"

namespace lindmap {

// A negative output eigenvalue must clear this much to count as detection.
inline constexpr double kDetectionThreshold = 1e-10;
// Measure values at or below this are rounding noise and reported as 0.
inline constexpr double kMeasureClamp = 1e-12;
// The unit-trace weight of the lifted transposition: three party terms plus
// the trace term with c = 1 on an 8-dimensional space gives 3 + 8.
inline constexpr double kNGmeTraceWeight = 11.0;

// Smallest trace coefficient keeping the lifted map nonnegative on
// biseparable states: twice the base map's negativity, 2|g| for the qubit
// family. Detection itself runs at the fixed c = 1 below, the value this
// takes at the transposition point, which is where every reported range and
// threshold holds.
double default_c(double gamma);

// Tripartite lifting: sum of the base map embedded on each party plus
// c tr(rho) I. The optional rotation conjugates the base map's output before
// embedding; conjugating the total output instead would be spectrally inert.
struct LiftedMap {
    SuperOp base;
    double c = 0.0;
    std::optional<ComplexMatrix> rotation;
    SuperOp total;    // full transfer on the tripartite space
};

LiftedMap lift(const SuperOp& base, double c,
               const std::optional<ComplexMatrix>& rotation = std::nullopt);

ComplexMatrix apply(const LiftedMap& L, const ComplexMatrix& rho);

enum class Verdict { Detected, NotDetected };

const char* to_string(Verdict v);

struct DetectionReport {
    double gamma = 0.0;
    bool rotated = false;
    double c = 1.0;
    double min_eigenvalue = 0.0;
    Verdict verdict = Verdict::NotDetected;
};

// Applies the lifted qubit family at c = 1 (sigma_x-rotated when asked) to a
// three-qubit state; Detected iff the output has a negative eigenvalue.
DetectionReport detect_gme(const DensityMatrix& rho, double gamma, bool rotated = false);

// The witness operator: lifted-map image of the W state at g = 1/2, c = 1.
// Its value is nonnegative on every biseparable state; its minimum
// eigenvalue is 1 - 2/sqrt(3), so the corresponding eigenstate is detected.
ComplexMatrix gme_witness();

double witness_value(const ComplexMatrix& witness, const DensityMatrix& rho);

// (|| lifted-transposition(rho)/11 ||_1 - 1) / K, clamped at zero.
// Strictly positive only when rho is GME-detected by the lifted transposition.
double n_gme(const DensityMatrix& rho, double K = 1.0);

// n_gme of the W state at K = 1; dividing K by this normalizes n_gme(W) to 1.
double n_gme_unit_w_constant();

// Bisect min-eigenvalue sign change of the lifted family over gamma.
// Requires opposite signs at the bracket ends; throws NoSignChange otherwise.
double gamma_detection_boundary(const DensityMatrix& rho, bool rotated = false,
                                double lo = 0.0, double hi = 0.5, double tol = 1e-8);

} // namespace lindmap
