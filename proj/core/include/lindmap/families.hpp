#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lindmap/superop.hpp"

namespace lindmap {

// Pauli matrices; k in 0..3, sigma(0) = identity.
ComplexMatrix sigma(int k);

// Standard Gell-Mann matrices, i in 1..8, normalized to tr(g_i g_j) = 2 delta_ij.
ComplexMatrix gell_mann(int i);

// The nine-slot jump list used by the qutrit generators: slots 2..8 hold the
// standard Gell-Mann pairs g1..g7 (shift by one), slot 9 holds the
// unnormalized diagonal diag(1,1,-2) = sqrt(3) g8. Slot 1 carries no weight
// in any family and is filled with g8 to complete the set.
std::vector<ComplexMatrix> qutrit_jump_list();

// Compiles the transposition-point weights {1/2 on slots 2,4,5,7;
// -1/2 on 3,6,8; 1/6 on 9} over `jumps` and checks the result equals the
// transposition map to 1e-12. Throws AssignmentNotFound otherwise; pins down
// the index convention the qutrit generators rely on.
void validate_gellmann_assignment(const std::vector<ComplexMatrix>& jumps);

// One-parameter qubit family: X -> [[x00, 2g*x10], [2g*x01, x11]].
// Transposition at g = 1/2; positive iff |g| <= 1/2; NCP for every g != 0.
SuperOp lambda_gamma(double gamma);
SuperOp lambda_gamma_dissipator(double gamma);   // Id + g D[s1] - g D[s2] + 1/2 D[s3]

// Qutrit family (1-2a) Id + 2a T. Positive on [0, 1/2]; CP only at a = 0.
SuperOp phi_alpha(double alpha);
SuperOp phi_alpha_dissipator(double alpha);

// Symmetrized Choi-type family: diagonal (1-4a) x_ii + 2a (x_jj + x_kk),
// off-diagonal (1-6a) x_ij. Positive on [0, 1/4]; CP on [0, 3/16].
SuperOp phi2_alpha(double alpha);
SuperOp phi2_alpha_dissipator(double alpha);

// Raw generator S1 - b (S2 - S3) built from the cyclic ladder, projector,
// and difference jumps. Traceless output; not a positive map on its own.
SuperOp phiC_generator(double beta);
SuperOp phiC_generator_dissipator(double beta);

// Affine completion Id + 1/2 phiC_generator: the Choi-map family.
// Positive on [0, 1]; CP on [0, 3/4]; at b = 1 half the textbook matrix.
SuperOp choi_family(double beta);
SuperOp choi_family_dissipator(double beta);

// Textbook trace-2 scale: 2 * choi_family(beta); at b = 1 the matrix with
// diagonal x00+x11, x11+x22, x22+x00 and negated off-diagonal.
SuperOp choi_family_printed(double beta);

struct MapFamily {
    std::string name;            // CLI handle
    std::string param;           // parameter symbol
    int dim;
    double advisory_lo;          // advisory parameter domain (not enforced)
    double advisory_hi;
    std::function<SuperOp(double)> make;
    std::function<SuperOp(double)> make_dissipator;
    std::function<bool(double)> positive;             // closed-form window
    std::function<bool(double)> completely_positive;  // closed-form window
};

const std::vector<MapFamily>& map_families();
const MapFamily& find_family(const std::string& name);   // throws UnknownFamily

} // namespace lindmap
