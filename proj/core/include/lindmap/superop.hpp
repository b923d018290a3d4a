#pragma once

#include <cstdint>
#include <vector>

#include "lindmap/matrix.hpp"
#include "lindmap/rng.hpp"

namespace lindmap {

// Column-stacking vectorization: entry (i, j) of a d x d matrix lands at
// index j*d + i. Fixed project-wide; X -> A X B has transfer B^T (x) A.
std::vector<Complex> vec(const ComplexMatrix& X);
ComplexMatrix unvec(const std::vector<Complex>& v, int dim);

// Jump operator with its rate: gamma * (J X J† - 1/2 {J J†, X}).
struct DissipatorTerm {
    double gamma;
    ComplexMatrix jump;
};

// Linear map on d x d matrices held as a d² x d² transfer matrix.
class SuperOp {
public:
    SuperOp() : dim_(0) {}
    SuperOp(int dim, ComplexMatrix transfer);

    static SuperOp identity(int dim);
    static SuperOp zero(int dim);
    static SuperOp transposition(int dim);
    // X -> A X B (B defaults to A†), the building block for unitary conjugation.
    static SuperOp sandwich(const ComplexMatrix& A, const ComplexMatrix& B);
    static SuperOp conjugation(const ComplexMatrix& U);   // X -> U X U†

    int dim() const { return dim_; }
    const ComplexMatrix& transfer() const { return transfer_; }

    SuperOp& operator+=(const SuperOp& o);
    SuperOp& operator*=(double s);
    friend SuperOp operator+(SuperOp a, const SuperOp& b) { return a += b; }
    friend SuperOp operator*(double s, SuperOp m) { return m *= s; }
    // Composition: (a * b)(X) = a(b(X)).
    friend SuperOp operator*(const SuperOp& a, const SuperOp& b);

private:
    int dim_;
    ComplexMatrix transfer_;
};

ComplexMatrix apply(const SuperOp& S, const ComplexMatrix& X);

SuperOp dissipator(const DissipatorTerm& term);

// identity_weight * Id + sum of dissipators. The affine Lindblad composition.
SuperOp compose_affine(double identity_weight, const std::vector<DissipatorTerm>& terms);

// Trace-1 Choi matrix: (Id (x) S) applied to the maximally entangled state,
// i.e. Choi[i*d+k][j*d+l] = S(E_ij)[k][l] / d. S is CP iff this is PSD.
ComplexMatrix choi(const SuperOp& S);

bool is_completely_positive(const SuperOp& S, double tol = PSD_TOL);

// Every nonempty principal minor of a Hermitian matrix is >= -tol.
// Equivalent to PSD; kept as an independent check for the action-matrix
// positivity arguments.
bool principal_minors_positive(const ComplexMatrix& M, double tol = PSD_TOL);

struct PureScanResult {
    double min_eigenvalue;
    std::vector<Complex> minimizer;   // pure state achieving it
};

// Minimum eigenvalue of S(|psi><psi|) over Haar-random pure states, with an
// optional stochastic descent polish from the best sample. A positive map
// keeps this >= 0; a non-positive one is certified by any negative value.
PureScanResult min_output_eigenvalue_over_pure(const SuperOp& S,
                                               int samples = 20000,
                                               std::uint64_t seed = kDefaultSeed,
                                               bool refine = true);

// Lift a single-party map to a multipartite space: acts as S on `party`,
// identity elsewhere.
SuperOp embed(const SuperOp& S, const std::vector<int>& dims, int party);

} // namespace lindmap
