#include "lindmap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lindmap {

namespace {

void check_dim(int dim) {
    if (dim <= 0) throw DimensionMismatch("matrix dimension must be positive");
    if (dim > MAX_DIM) throw DimensionMismatch("matrix dimension exceeds cap of 128");
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
    a_.assign(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    ComplexMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.dim())
            throw DimensionMismatch("row length differs from row count");
        int j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    if (u.size() != v.size()) throw DimensionMismatch("outer product of unequal vectors");
    ComplexMatrix m(static_cast<int>(u.size()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            m(i, j) = u[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(j, i);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    check_same_dim(*this, o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    check_same_dim(*this, o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Complex> ComplexMatrix::apply_vector(const std::vector<Complex>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("vector length differs from dim");
    std::vector<Complex> y(static_cast<size_t>(dim_), Complex(0.0, 0.0));
    for (int i = 0; i < dim_; ++i) {
        Complex s = 0.0;
        for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

namespace {

double offdiag_mass(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

} // namespace

Spectrum eig_hermitian(const ComplexMatrix& M, bool want_vectors) {
    if (!M.is_hermitian()) throw NonHermitianInput("eig_hermitian: input is not Hermitian");

    const int n = M.dim();
    ComplexMatrix a = M.hermitian_part();   // exact Hermitian working copy
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double target = 1e-14 * std::max(1.0, a.frobenius_norm());
    constexpr int max_sweeps = 100;

    bool converged = offdiag_mass(a) <= target;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double m = std::abs(apq);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (m <= 1e-300 || m <= 1e-20 * (std::abs(app) + std::abs(aqq)))
                    continue;

                // Phase to make the pivot real, then a real Jacobi rotation.
                const Complex phase = apq / m;           // e^{i arg(apq)}
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0)
                    ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Combined unitary G: columns p,q mix with
                //   G(p,p)=c  G(p,q)=s  G(q,p)=-s*conj(phase)  G(q,q)=c*conj(phase)
                const Complex gqp = -s * std::conj(phase);
                const Complex gqq = c * std::conj(phase);

                for (int i = 0; i < n; ++i) {           // A <- A G
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip * c + aiq * gqp;
                    a(i, q) = aip * s + aiq * gqq;
                }
                for (int j = 0; j < n; ++j) {           // A <- G† A
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + std::conj(gqp) * aqj;
                    a(q, j) = s * apj + std::conj(gqq) * aqj;
                }
                a(p, q) = 0.0;                          // rotation zeroes the pivot analytically
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);

                if (want_vectors) {
                    for (int i = 0; i < n; ++i) {       // V <- V G
                        const Complex vip = v(i, p), viq = v(i, q);
                        v(i, p) = vip * c + viq * gqp;
                        v(i, q) = vip * s + viq * gqq;
                    }
                }
            }
        }
        converged = offdiag_mass(a) <= target;
    }
    if (!converged) throw NoConvergence("eig_hermitian: Jacobi sweeps exhausted");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum out;
    out.eigenvalues.reserve(static_cast<size_t>(n));
    for (int k : order) out.eigenvalues.push_back(a(k, k).real());
    if (want_vectors) {
        ComplexMatrix vecs(n);
        for (int col = 0; col < n; ++col)
            for (int i = 0; i < n; ++i) vecs(i, col) = v(i, order[static_cast<size_t>(col)]);
        out.eigenvectors = std::move(vecs);
    }
    return out;
}

double min_eigenvalue(const ComplexMatrix& M) {
    return eig_hermitian(M, false).eigenvalues.front();
}

double trace_norm(const ComplexMatrix& M) {
    const Spectrum s = eig_hermitian(M, false);
    double t = 0.0;
    for (double ev : s.eigenvalues) t += std::abs(ev);
    return t;
}

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B) {
    const int da = A.dim(), db = B.dim();
    ComplexMatrix m(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const Complex aij = A(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    m(i * db + k, j * db + l) = aij * B(k, l);
        }
    return m;
}

namespace {

int product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) p *= d;
    return p;
}

void check_partition(const ComplexMatrix& M, const std::vector<int>& dims, int party) {
    if (dims.empty() || party < 0 || party >= static_cast<int>(dims.size()))
        throw DimensionMismatch("party index outside subsystem list");
    for (int d : dims)
        if (d <= 0) throw DimensionMismatch("subsystem dimension must be positive");
    if (product(dims) != M.dim())
        throw DimensionMismatch("subsystem dimensions do not factor the matrix dimension");
}

// Split a flat index into (left, mid, right) parts around `party`:
// index = (left * dp + mid) * dr + right.
struct IndexSplit {
    int dl, dp, dr;
};

IndexSplit split_dims(const std::vector<int>& dims, int party) {
    IndexSplit s{1, dims[static_cast<size_t>(party)], 1};
    for (int k = 0; k < party; ++k) s.dl *= dims[static_cast<size_t>(k)];
    for (size_t k = static_cast<size_t>(party) + 1; k < dims.size(); ++k)
        s.dr *= dims[k];
    return s;
}

} // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& M, const std::vector<int>& dims, int party) {
    check_partition(M, dims, party);
    const IndexSplit s = split_dims(dims, party);
    ComplexMatrix out(M.dim());
    for (int il = 0; il < s.dl; ++il)
        for (int ip = 0; ip < s.dp; ++ip)
            for (int ir = 0; ir < s.dr; ++ir)
                for (int jl = 0; jl < s.dl; ++jl)
                    for (int jp = 0; jp < s.dp; ++jp)
                        for (int jr = 0; jr < s.dr; ++jr) {
                            const int row = (il * s.dp + ip) * s.dr + ir;
                            const int col = (jl * s.dp + jp) * s.dr + jr;
                            const int prow = (il * s.dp + jp) * s.dr + ir;
                            const int pcol = (jl * s.dp + ip) * s.dr + jr;
                            out(prow, pcol) = M(row, col);
                        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& M, const std::vector<int>& dims, int party) {
    check_partition(M, dims, party);
    if (dims.size() == 1) throw DimensionMismatch("cannot trace out the only subsystem");
    const IndexSplit s = split_dims(dims, party);
    ComplexMatrix out(s.dl * s.dr);
    for (int il = 0; il < s.dl; ++il)
        for (int ir = 0; ir < s.dr; ++ir)
            for (int jl = 0; jl < s.dl; ++jl)
                for (int jr = 0; jr < s.dr; ++jr) {
                    Complex acc = 0.0;
                    for (int k = 0; k < s.dp; ++k)
                        acc += M((il * s.dp + k) * s.dr + ir, (jl * s.dp + k) * s.dr + jr);
                    out(il * s.dr + ir, jl * s.dr + jr) = acc;
                }
    return out;
}

bool is_psd(const ComplexMatrix& M, double tol) {
    if (!M.is_hermitian()) throw NonHermitianInput("is_psd: input is not Hermitian");
    return min_eigenvalue(M) >= -tol;
}

} // namespace lindmap
