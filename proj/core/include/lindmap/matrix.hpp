#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lindmap/errors.hpp"

namespace lindmap {

using Complex = std::complex<double>;

// Project-wide tolerances. All matrices here are O(1) in norm with
// well-separated spectra, so absolute tolerances are safe.
inline constexpr double HERM_TOL = 1e-9;
inline constexpr double EIG_TOL = 1e-10;
inline constexpr double PSD_TOL = 1e-9;

// Documented dimension cap. Nothing in this library needs more than 64
// (transfer matrices of three-qubit maps); 128 leaves headroom.
inline constexpr int MAX_DIM = 128;

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
    static ComplexMatrix diagonal(const std::vector<Complex>& d);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    // u v† for column vectors u, v.
    static ComplexMatrix outer(const std::vector<Complex>& u, const std::vector<Complex>& v);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    bool is_hermitian(double tol = HERM_TOL) const;
    // Symmetrize: (M + M†)/2. Used to scrub rounding noise off known-Hermitian results.
    ComplexMatrix hermitian_part() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    std::vector<Complex> apply_vector(const std::vector<Complex>& x) const;

private:
    int dim_;
    std::vector<Complex> a_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigendecomposition of a Hermitian matrix.
struct Spectrum {
    std::vector<double> eigenvalues;              // ascending
    std::optional<ComplexMatrix> eigenvectors;    // column k pairs with eigenvalues[k]
};

// Cyclic complex Jacobi rotations. Converges when the off-diagonal Frobenius
// mass drops below 1e-14 (scaled by the matrix norm for inputs above unit
// size); throws NoConvergence after 100 sweeps. Dimensions in this library
// never exceed 9 where spectra are consumed, so Jacobi is both simple and fast.
Spectrum eig_hermitian(const ComplexMatrix& M, bool want_vectors = true);

double min_eigenvalue(const ComplexMatrix& M);

// Sum of |eigenvalue| over the Hermitian spectrum.
double trace_norm(const ComplexMatrix& M);

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B);

// Transpose the tensor factor `party` of a multipartite operator.
ComplexMatrix partial_transpose(const ComplexMatrix& M, const std::vector<int>& dims, int party);

// Trace out the tensor factor `party`; remaining factors keep their order.
ComplexMatrix partial_trace(const ComplexMatrix& M, const std::vector<int>& dims, int party);

bool is_psd(const ComplexMatrix& M, double tol = PSD_TOL);

} // namespace lindmap
