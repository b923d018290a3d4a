#pragma once

#include <vector>

#include "lindmap/matrix.hpp"
#include "lindmap/rng.hpp"

namespace lindmap {

// Density matrix with its subsystem split. Validated on construction:
// Hermitian, unit trace, PSD within tolerance, dims factor the dimension.
struct DensityMatrix {
    ComplexMatrix matrix;
    std::vector<int> dims;
};

DensityMatrix make_density(ComplexMatrix m, std::vector<int> dims,
                           double psd_tol = PSD_TOL);

DensityMatrix pure_density(const std::vector<Complex>& psi, std::vector<int> dims);

// Reorder tensor factors: output factor k is input factor perm[k].
ComplexMatrix permute_subsystems(const ComplexMatrix& M, const std::vector<int>& dims,
                                 const std::vector<int>& perm);

// (|001> + |010> + |100>)/sqrt(3) on three qubits.
DensityMatrix w_state();
// The flipped variant (|011> + |101> + |110>)/sqrt(3); locally equivalent to
// w_state under a global bit flip, which commutes with every lifted map here.
DensityMatrix w_state_flipped();
// (|000> + |111>)/sqrt(2).
DensityMatrix ghz_state();
// p |W><W| + (1-p) I/8.
DensityMatrix noisy_w(double p);
// c1 |00> + c2 |11> on two qubits; coefficients are real here.
DensityMatrix schmidt_state(double c1, double c2);
DensityMatrix maximally_mixed(std::vector<int> dims);

std::vector<Complex> random_pure(Rng& rng, int dim);
// Partial trace of a Haar-random pure state on dim x dim; full rank a.s.
DensityMatrix random_mixed(Rng& rng, int dim);

// Bipartitions of three qubits. Mixed draws one product state per cut and
// combines them with flat Dirichlet weights.
enum class Bipartition { A_BC, B_AC, C_AB, Mixed };

DensityMatrix random_biseparable(Rng& rng, Bipartition cut);

} // namespace lindmap
