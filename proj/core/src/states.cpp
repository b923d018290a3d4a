#include "lindmap/states.hpp"

#include <cmath>
#include <utility>

namespace lindmap {

namespace {

int product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) p *= d;
    return p;
}

} // namespace

DensityMatrix make_density(ComplexMatrix m, std::vector<int> dims, double psd_tol) {
    if (dims.empty()) dims = {m.dim()};
    if (product(dims) != m.dim())
        throw DimensionMismatch("density matrix dims do not factor its dimension");
    if (!m.is_hermitian())
        throw NonHermitianInput("density matrix is not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > 1e-9 || std::abs(m.trace().imag()) > 1e-9)
        throw NotNormalized("density matrix trace is not 1");
    if (!is_psd(m, psd_tol))
        throw ParameterOutOfRange("density matrix has a negative eigenvalue");
    return DensityMatrix{std::move(m), std::move(dims)};
}

DensityMatrix pure_density(const std::vector<Complex>& psi, std::vector<int> dims) {
    double n2 = 0.0;
    for (const Complex& c : psi) n2 += std::norm(c);
    if (std::abs(n2 - 1.0) > 1e-9) throw NotNormalized("state vector is not normalized");
    return make_density(ComplexMatrix::outer(psi, psi), std::move(dims));
}

ComplexMatrix permute_subsystems(const ComplexMatrix& M, const std::vector<int>& dims,
                                 const std::vector<int>& perm) {
    const int n = static_cast<int>(dims.size());
    if (static_cast<int>(perm.size()) != n)
        throw InvalidPartition("permutation length differs from subsystem count");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
            throw InvalidPartition("not a permutation of the subsystems");
        seen[static_cast<size_t>(p)] = true;
    }
    if (product(dims) != M.dim())
        throw DimensionMismatch("subsystem dimensions do not factor the matrix dimension");

    // Strides of each input factor in the flat index.
    std::vector<int> stride(static_cast<size_t>(n), 1);
    for (int k = n - 2; k >= 0; --k)
        stride[static_cast<size_t>(k)] =
            stride[static_cast<size_t>(k) + 1] * dims[static_cast<size_t>(k) + 1];

    const int D = M.dim();
    ComplexMatrix out(D);
    std::vector<int> comp(static_cast<size_t>(n));
    for (int row = 0; row < D; ++row) {
        int rest = row;
        for (int k = 0; k < n; ++k) {
            comp[static_cast<size_t>(k)] = rest / stride[static_cast<size_t>(k)];
            rest %= stride[static_cast<size_t>(k)];
        }
        int prow = 0;
        for (int k = 0; k < n; ++k)
            prow = prow * dims[static_cast<size_t>(perm[static_cast<size_t>(k)])] +
                   comp[static_cast<size_t>(perm[static_cast<size_t>(k)])];

        for (int col = 0; col < D; ++col) {
            rest = col;
            for (int k = 0; k < n; ++k) {
                comp[static_cast<size_t>(k)] = rest / stride[static_cast<size_t>(k)];
                rest %= stride[static_cast<size_t>(k)];
            }
            int pcol = 0;
            for (int k = 0; k < n; ++k)
                pcol = pcol * dims[static_cast<size_t>(perm[static_cast<size_t>(k)])] +
                       comp[static_cast<size_t>(perm[static_cast<size_t>(k)])];
            out(prow, pcol) = M(row, col);
        }
    }
    return out;
}

DensityMatrix w_state() {
    const double a = 1.0 / std::sqrt(3.0);
    std::vector<Complex> psi(8, 0.0);
    psi[1] = a;   // |001>
    psi[2] = a;   // |010>
    psi[4] = a;   // |100>
    return pure_density(psi, {2, 2, 2});
}

DensityMatrix w_state_flipped() {
    const double a = 1.0 / std::sqrt(3.0);
    std::vector<Complex> psi(8, 0.0);
    psi[3] = a;   // |011>
    psi[5] = a;   // |101>
    psi[6] = a;   // |110>
    return pure_density(psi, {2, 2, 2});
}

DensityMatrix ghz_state() {
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<Complex> psi(8, 0.0);
    psi[0] = a;
    psi[7] = a;
    return pure_density(psi, {2, 2, 2});
}

DensityMatrix noisy_w(double p) {
    if (p < 0.0 || p > 1.0) throw ParameterOutOfRange("noisy_w: p must lie in [0, 1]");
    ComplexMatrix m = w_state().matrix;
    m *= Complex(p, 0.0);
    const double bg = (1.0 - p) / 8.0;
    for (int i = 0; i < 8; ++i) m(i, i) += bg;
    return make_density(std::move(m), {2, 2, 2});
}

DensityMatrix schmidt_state(double c1, double c2) {
    std::vector<Complex> psi(4, 0.0);
    psi[0] = c1;
    psi[3] = c2;
    return pure_density(psi, {2, 2});
}

DensityMatrix maximally_mixed(std::vector<int> dims) {
    const int d = product(dims);
    ComplexMatrix m = ComplexMatrix::identity(d);
    m *= Complex(1.0 / d, 0.0);
    return make_density(std::move(m), std::move(dims));
}

std::vector<Complex> random_pure(Rng& rng, int dim) {
    std::vector<Complex> v(static_cast<size_t>(dim));
    double n2 = 0.0;
    for (Complex& c : v) {
        c = rng.cnormal();
        n2 += std::norm(c);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& c : v) c *= inv;
    return v;
}

DensityMatrix random_mixed(Rng& rng, int dim) {
    const std::vector<Complex> psi = random_pure(rng, dim * dim);
    const ComplexMatrix full = ComplexMatrix::outer(psi, psi);
    ComplexMatrix red = partial_trace(full, {dim, dim}, 1).hermitian_part();
    // Renormalize away rounding noise so make_density's trace check passes.
    red *= Complex(1.0 / red.trace().real(), 0.0);
    return make_density(std::move(red), {dim});
}

namespace {

DensityMatrix product_for_cut(Rng& rng, Bipartition cut) {
    const ComplexMatrix single = random_mixed(rng, 2).matrix;
    const ComplexMatrix pair = random_mixed(rng, 4).matrix;
    ComplexMatrix prod = kron(single, pair);   // factor order (X, Y, Z)
    switch (cut) {
        case Bipartition::A_BC:
            break;
        case Bipartition::B_AC:
            prod = permute_subsystems(prod, {2, 2, 2}, {1, 0, 2});
            break;
        case Bipartition::C_AB:
            prod = permute_subsystems(prod, {2, 2, 2}, {1, 2, 0});
            break;
        case Bipartition::Mixed:
            throw InvalidPartition("Mixed is handled by the caller");
    }
    return make_density(std::move(prod), {2, 2, 2});
}

} // namespace

DensityMatrix random_biseparable(Rng& rng, Bipartition cut) {
    if (cut != Bipartition::Mixed) return product_for_cut(rng, cut);

    // Flat Dirichlet weights over the three cuts.
    double w[3];
    double total = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - rng.uniform());
        total += x;
    }
    ComplexMatrix m(8);
    const Bipartition cuts[3] = {Bipartition::A_BC, Bipartition::B_AC, Bipartition::C_AB};
    for (int k = 0; k < 3; ++k) {
        ComplexMatrix part = product_for_cut(rng, cuts[k]).matrix;
        part *= Complex(w[k] / total, 0.0);
        m += part;
    }
    return make_density(std::move(m), {2, 2, 2});
}

} // namespace lindmap
