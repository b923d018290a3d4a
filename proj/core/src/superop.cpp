#include "lindmap/superop.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace lindmap {

std::vector<Complex> vec(const ComplexMatrix& X) {
    const int d = X.dim();
    std::vector<Complex> v(static_cast<size_t>(d) * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) v[static_cast<size_t>(j) * d + i] = X(i, j);
    return v;
}

ComplexMatrix unvec(const std::vector<Complex>& v, int dim) {
    if (static_cast<int>(v.size()) != dim * dim)
        throw DimensionMismatch("unvec: length is not dim squared");
    ComplexMatrix X(dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) X(i, j) = v[static_cast<size_t>(j) * dim + i];
    return X;
}

SuperOp::SuperOp(int dim, ComplexMatrix transfer) : dim_(dim), transfer_(std::move(transfer)) {
    if (dim <= 0) throw DimensionMismatch("SuperOp dimension must be positive");
    if (transfer_.dim() != dim * dim)
        throw DimensionMismatch("transfer matrix is not dim squared");
}

SuperOp SuperOp::identity(int dim) {
    return SuperOp(dim, ComplexMatrix::identity(dim * dim));
}

SuperOp SuperOp::zero(int dim) {
    return SuperOp(dim, ComplexMatrix::zero(dim * dim));
}

SuperOp SuperOp::transposition(int dim) {
    ComplexMatrix t(dim * dim);
    // vec(X^T)[i*d+j] = vec(X)[j*d+i]: a permutation.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) t(i * dim + j, j * dim + i) = 1.0;
    return SuperOp(dim, t);
}

SuperOp SuperOp::sandwich(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.dim() != B.dim()) throw DimensionMismatch("sandwich: operator dimensions differ");
    return SuperOp(A.dim(), kron(B.transpose(), A));
}

SuperOp SuperOp::conjugation(const ComplexMatrix& U) {
    return sandwich(U, U.adjoint());
}

SuperOp& SuperOp::operator+=(const SuperOp& o) {
    if (dim_ != o.dim_) throw DimensionMismatch("SuperOp dimensions differ");
    transfer_ += o.transfer_;
    return *this;
}

SuperOp& SuperOp::operator*=(double s) {
    transfer_ *= Complex(s, 0.0);
    return *this;
}

SuperOp operator*(const SuperOp& a, const SuperOp& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("SuperOp dimensions differ");
    return SuperOp(a.dim(), a.transfer() * b.transfer());
}

ComplexMatrix apply(const SuperOp& S, const ComplexMatrix& X) {
    if (X.dim() != S.dim()) throw DimensionMismatch("apply: argument dimension differs");
    return unvec(S.transfer().apply_vector(vec(X)), S.dim());
}

SuperOp dissipator(const DissipatorTerm& term) {
    const ComplexMatrix& j = term.jump;
    const int d = j.dim();
    const ComplexMatrix jj = j * j.adjoint();
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    // gamma * (conj(J) (x) J - 1/2 I (x) JJ† - 1/2 (JJ†)^T (x) I)
    ComplexMatrix t = kron(j.conjugate(), j);
    t -= Complex(0.5, 0.0) * kron(eye, jj);
    t -= Complex(0.5, 0.0) * kron(jj.transpose(), eye);
    t *= Complex(term.gamma, 0.0);
    return SuperOp(d, t);
}

SuperOp compose_affine(double identity_weight, const std::vector<DissipatorTerm>& terms) {
    if (terms.empty()) throw DimensionMismatch("compose_affine: no terms and no dimension");
    const int d = terms.front().jump.dim();
    SuperOp s = identity_weight * SuperOp::identity(d);
    for (const DissipatorTerm& term : terms) {
        if (term.jump.dim() != d)
            throw DimensionMismatch("compose_affine: jump dimensions differ");
        s += dissipator(term);
    }
    return s;
}

ComplexMatrix choi(const SuperOp& S) {
    const int d = S.dim();
    const ComplexMatrix& t = S.transfer();
    ComplexMatrix c(d * d);
    // Choi[i*d+k][j*d+l] = S(E_ij)[k][l] / d; vec(E_ij) sits at index j*d+i.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    c(i * d + k, j * d + l) = t(l * d + k, j * d + i) / static_cast<double>(d);
    return c;
}

bool is_completely_positive(const SuperOp& S, double tol) {
    return is_psd(choi(S), tol);
}

namespace {

// Determinant by LU with partial pivoting. Hermitian input gives a real
// determinant; the real part is returned.
double det_real(const ComplexMatrix& M) {
    const int n = M.dim();
    ComplexMatrix a = M;
    Complex det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > best) { best = std::abs(a(r, col)); piv = r; }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / a(col, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det.real();
}

} // namespace

bool principal_minors_positive(const ComplexMatrix& M, double tol) {
    if (!M.is_hermitian()) throw NonHermitianInput("principal_minors_positive: input is not Hermitian");
    const int n = M.dim();
    if (n > 20) throw DimensionMismatch("principal_minors_positive: subset count too large");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) idx.push_back(b);
        const int k = static_cast<int>(idx.size());
        ComplexMatrix sub(k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                sub(r, c) = M(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
        if (det_real(sub) < -tol) return false;
    }
    return true;
}

namespace {

std::vector<Complex> normalized(std::vector<Complex> v) {
    double n2 = 0.0;
    for (const Complex& c : v) n2 += std::norm(c);
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& c : v) c *= inv;
    return v;
}

std::vector<Complex> haar_pure(Rng& rng, int d) {
    std::vector<Complex> v(static_cast<size_t>(d));
    for (Complex& c : v) c = rng.cnormal();
    return normalized(std::move(v));
}

double min_output_eig(const SuperOp& S, const std::vector<Complex>& psi) {
    return min_eigenvalue(apply(S, ComplexMatrix::outer(psi, psi)).hermitian_part());
}

} // namespace

PureScanResult min_output_eigenvalue_over_pure(const SuperOp& S, int samples,
                                               std::uint64_t seed, bool refine) {
    if (samples < 1) throw ParameterOutOfRange("sample count must be positive");
    Rng rng(seed);
    const int d = S.dim();

    std::vector<Complex> best_psi = haar_pure(rng, d);
    double best = min_output_eig(S, best_psi);
    for (int k = 1; k < samples; ++k) {
        std::vector<Complex> psi = haar_pure(rng, d);
        const double val = min_output_eig(S, psi);
        if (val < best) { best = val; best_psi = std::move(psi); }
    }

    if (refine) {
        // Stochastic descent from the best sample; step adapts to acceptance.
        double scale = 0.2;
        for (int it = 0; it < 600 && scale > 1e-10; ++it) {
            std::vector<Complex> cand = best_psi;
            for (Complex& c : cand) c += scale * rng.cnormal();
            cand = normalized(std::move(cand));
            const double val = min_output_eig(S, cand);
            if (val < best) {
                best = val;
                best_psi = std::move(cand);
                scale *= 1.1;
            } else {
                scale *= 0.93;
            }
        }
    }
    return PureScanResult{best, std::move(best_psi)};
}

SuperOp embed(const SuperOp& S, const std::vector<int>& dims, int party) {
    if (party < 0 || party >= static_cast<int>(dims.size()))
        throw DimensionMismatch("embed: party index outside subsystem list");
    const int dp = dims[static_cast<size_t>(party)];
    if (S.dim() != dp) throw DimensionMismatch("embed: map dimension differs from party dimension");
    int dl = 1, dr = 1;
    for (int k = 0; k < party; ++k) dl *= dims[static_cast<size_t>(k)];
    for (size_t k = static_cast<size_t>(party) + 1; k < dims.size(); ++k) dr *= dims[k];
    const int D = dl * dp * dr;

    const ComplexMatrix& t = S.transfer();
    ComplexMatrix full(D * D);
    // Output entry (I,J), input basis E_KL: acts as S on the party component,
    // Kronecker deltas on the rest.
    for (int il = 0; il < dl; ++il)
        for (int ir = 0; ir < dr; ++ir)
            for (int jl = 0; jl < dl; ++jl)
                for (int jr = 0; jr < dr; ++jr)
                    for (int ip = 0; ip < dp; ++ip)
                        for (int jp = 0; jp < dp; ++jp)
                            for (int kp = 0; kp < dp; ++kp)
                                for (int lp = 0; lp < dp; ++lp) {
                                    const Complex val = t(jp * dp + ip, lp * dp + kp);
                                    if (val == Complex(0.0, 0.0)) continue;
                                    const int I = (il * dp + ip) * dr + ir;
                                    const int J = (jl * dp + jp) * dr + jr;
                                    const int K = (il * dp + kp) * dr + ir;
                                    const int L = (jl * dp + lp) * dr + jr;
                                    full(J * D + I, L * D + K) += val;
                                }
    return SuperOp(D, full);
}

} // namespace lindmap
