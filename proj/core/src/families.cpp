#include "lindmap/families.hpp"

#include <cmath>

namespace lindmap {

namespace {

const Complex kI(0.0, 1.0);

} // namespace

ComplexMatrix sigma(int k) {
    switch (k) {
        case 0: return ComplexMatrix::identity(2);
        case 1: return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        case 2: return ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}});
        case 3: return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
        default: throw ParameterOutOfRange("sigma: index must be 0..3");
    }
}

ComplexMatrix gell_mann(int i) {
    const double r3 = std::sqrt(3.0);
    switch (i) {
        case 1: return ComplexMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
        case 2: return ComplexMatrix::from_rows({{0, -kI, 0}, {kI, 0, 0}, {0, 0, 0}});
        case 3: return ComplexMatrix::diagonal({1.0, -1.0, 0.0});
        case 4: return ComplexMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
        case 5: return ComplexMatrix::from_rows({{0, 0, -kI}, {0, 0, 0}, {kI, 0, 0}});
        case 6: return ComplexMatrix::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}});
        case 7: return ComplexMatrix::from_rows({{0, 0, 0}, {0, 0, -kI}, {0, kI, 0}});
        case 8: return ComplexMatrix::diagonal({1.0 / r3, 1.0 / r3, -2.0 / r3});
        default: throw ParameterOutOfRange("gell_mann: index must be 1..8");
    }
}

std::vector<ComplexMatrix> qutrit_jump_list() {
    std::vector<ComplexMatrix> jumps;
    jumps.push_back(gell_mann(8));                         // slot 1, never weighted
    for (int i = 1; i <= 7; ++i) jumps.push_back(gell_mann(i));  // slots 2..8
    jumps.push_back(ComplexMatrix::diagonal({1.0, 1.0, -2.0}));  // slot 9
    return jumps;
}

void validate_gellmann_assignment(const std::vector<ComplexMatrix>& jumps) {
    if (jumps.size() != 9)
        throw AssignmentNotFound("assignment must provide nine jump operators");
    // Transposition-point weights, slot i holds weight[i-1].
    const double w[9] = {0.0, 0.5, -0.5, 0.5, 0.5, -0.5, 0.5, -0.5, 1.0 / 6.0};
    std::vector<DissipatorTerm> terms;
    for (int i = 0; i < 9; ++i) {
        if (jumps[static_cast<size_t>(i)].dim() != 3)
            throw AssignmentNotFound("assignment jumps must be 3-dimensional");
        if (w[i] != 0.0) terms.push_back({w[i], jumps[static_cast<size_t>(i)]});
    }
    const SuperOp compiled = compose_affine(1.0, terms);
    const SuperOp target = SuperOp::transposition(3);
    if (max_abs_diff(compiled.transfer(), target.transfer()) > 1e-12)
        throw AssignmentNotFound("assignment does not reproduce the transposition map");
}

SuperOp lambda_gamma(double gamma) {
    ComplexMatrix t(4);
    t(0, 0) = 1.0;                  // out(0,0) = x00
    t(3, 3) = 1.0;                  // out(1,1) = x11
    t(2, 1) = 2.0 * gamma;          // out(0,1) = 2g x10
    t(1, 2) = 2.0 * gamma;          // out(1,0) = 2g x01
    return SuperOp(2, t);
}

SuperOp lambda_gamma_dissipator(double gamma) {
    return compose_affine(1.0, {{gamma, sigma(1)}, {-gamma, sigma(2)}, {0.5, sigma(3)}});
}

SuperOp phi_alpha(double alpha) {
    return (1.0 - 2.0 * alpha) * SuperOp::identity(3) + 2.0 * alpha * SuperOp::transposition(3);
}

namespace {

std::vector<DissipatorTerm> qutrit_terms(double a2, double a3, double a4, double a5,
                                         double a6, double a7, double a8, double a9) {
    const std::vector<ComplexMatrix> jumps = qutrit_jump_list();
    const double w[9] = {0.0, a2, a3, a4, a5, a6, a7, a8, a9};
    std::vector<DissipatorTerm> terms;
    for (int i = 1; i < 9; ++i) terms.push_back({w[i], jumps[static_cast<size_t>(i)]});
    return terms;
}

} // namespace

SuperOp phi_alpha_dissipator(double alpha) {
    const double a = alpha;
    return compose_affine(1.0, qutrit_terms(a, -a, a, a, -a, a, -a, a / 3.0));
}

SuperOp phi2_alpha(double alpha) {
    ComplexMatrix t(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int out = j * 3 + i;      // vec index of entry (i, j)
            if (i == j) {
                for (int k = 0; k < 3; ++k)
                    t(out, k * 3 + k) = (k == i) ? (1.0 - 4.0 * alpha) : (2.0 * alpha);
            } else {
                t(out, out) = 1.0 - 6.0 * alpha;
            }
        }
    return SuperOp(3, t);
}

SuperOp phi2_alpha_dissipator(double alpha) {
    const double a = alpha;
    return compose_affine(1.0, qutrit_terms(a, a, a, a, a, a, a, a / 3.0));
}

namespace {

std::vector<DissipatorTerm> choi_generator_terms(double beta, double scale) {
    // Ladder jumps |1><2|, |2><3|, |3><1| in zero-based indexing.
    ComplexMatrix a1(3), a2(3), a3(3);
    a1(0, 1) = 1.0;
    a2(1, 2) = 1.0;
    a3(2, 0) = 1.0;
    ComplexMatrix b1(3), b2(3), b3(3);
    b1(0, 0) = 1.0;
    b2(1, 1) = 1.0;
    b3(2, 2) = 1.0;
    const ComplexMatrix c1 = ComplexMatrix::diagonal({1.0, -1.0, 0.0});
    const ComplexMatrix c2 = ComplexMatrix::diagonal({0.0, 1.0, -1.0});
    const ComplexMatrix c3 = ComplexMatrix::diagonal({-1.0, 0.0, 1.0});
    return {
        {scale, a1},          {scale, a2},          {scale, a3},
        {-beta * scale, b1},  {-beta * scale, b2},  {-beta * scale, b3},
        {beta * scale, c1},   {beta * scale, c2},   {beta * scale, c3},
    };
}

} // namespace

SuperOp phiC_generator(double beta) {
    // S1 shifts the diagonal cyclically and subtracts the input; the B and C
    // sums collapse to -2 beta * offdiagonal.
    ComplexMatrix t(9);
    for (int i = 0; i < 3; ++i) {
        const int next = (i + 1) % 3;
        t(i * 3 + i, next * 3 + next) += 1.0;    // out_ii gains x_{i+1,i+1}
        t(i * 3 + i, i * 3 + i) -= 1.0;
        for (int j = 0; j < 3; ++j)
            if (i != j) t(j * 3 + i, j * 3 + i) = -(1.0 + 2.0 * beta);
    }
    return SuperOp(3, t);
}

SuperOp phiC_generator_dissipator(double beta) {
    return compose_affine(0.0, choi_generator_terms(beta, 1.0));
}

SuperOp choi_family(double beta) {
    return SuperOp::identity(3) + 0.5 * phiC_generator(beta);
}

SuperOp choi_family_dissipator(double beta) {
    return compose_affine(1.0, choi_generator_terms(beta, 0.5));
}

SuperOp choi_family_printed(double beta) {
    return 2.0 * choi_family(beta);
}

const std::vector<MapFamily>& map_families() {
    static const std::vector<MapFamily> families = [] {
        std::vector<MapFamily> f;
        f.push_back({"lambda-gamma", "gamma", 2, -0.5, 0.5,
                     [](double g) { return lambda_gamma(g); },
                     [](double g) { return lambda_gamma_dissipator(g); },
                     [](double g) { return std::abs(g) <= 0.5 + 1e-12; },
                     [](double g) { return std::abs(g) <= 1e-12; }});
        f.push_back({"phi-alpha", "alpha", 3, 0.0, 0.5,
                     [](double a) { return phi_alpha(a); },
                     [](double a) { return phi_alpha_dissipator(a); },
                     [](double a) { return a >= -1e-12 && a <= 0.5 + 1e-12; },
                     [](double a) { return std::abs(a) <= 1e-12; }});
        f.push_back({"phi2-alpha", "alpha", 3, 0.0, 0.25,
                     [](double a) { return phi2_alpha(a); },
                     [](double a) { return phi2_alpha_dissipator(a); },
                     [](double a) { return a >= -1e-12 && a <= 0.25 + 1e-12; },
                     [](double a) { return a >= -1e-12 && a <= 3.0 / 16.0 + 1e-12; }});
        f.push_back({"phiC-beta", "beta", 3, 0.0, 1.0,
                     [](double b) { return choi_family(b); },
                     [](double b) { return choi_family_dissipator(b); },
                     [](double b) { return b >= -1e-12 && b <= 1.0 + 1e-12; },
                     [](double b) { return b >= -1e-12 && b <= 0.75 + 1e-12; }});
        f.push_back({"choi-F", "beta", 3, 0.0, 1.0,
                     [](double b) { return choi_family_printed(b); },
                     [](double b) { return 2.0 * choi_family_dissipator(b); },
                     [](double b) { return b >= -1e-12 && b <= 1.0 + 1e-12; },
                     [](double b) { return b >= -1e-12 && b <= 0.75 + 1e-12; }});
        return f;
    }();
    return families;
}

const MapFamily& find_family(const std::string& name) {
    for (const MapFamily& f : map_families())
        if (f.name == name) return f;
    throw UnknownFamily("unknown map family: " + name);
}

} // namespace lindmap
