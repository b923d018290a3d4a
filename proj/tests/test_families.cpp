#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "lindmap/families.hpp"

using namespace lindmap;
using testing_helpers::max_abs_vec_diff;

namespace {

// Boolean bisection for the edge of a parameter window known to be an
// interval containing lo.
double window_edge(bool (*inside)(double), double lo, double hi) {
    REQUIRE(inside(lo));
    REQUIRE_FALSE(inside(hi));
    while (hi - lo > 1e-7) {
        const double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("transposition recovery at the half point") {
    const ComplexMatrix t2 = SuperOp::transposition(2).transfer();
    CHECK(max_abs_diff(lambda_gamma(0.5).transfer(), t2) < 1e-12);
    const ComplexMatrix t3 = SuperOp::transposition(3).transfer();
    CHECK(max_abs_diff(phi_alpha(0.5).transfer(), t3) < 1e-12);
    CHECK(max_abs_diff(phi_alpha_dissipator(0.5).transfer(), t3) < 1e-12);
}

TEST_CASE("dual construction agreement across families") {
    const double params[] = {-0.31, 0.0, 0.08, 0.19, 0.25, 0.4, 0.5, 0.75, 1.0};
    for (double p : params) {
        CHECK(max_abs_diff(lambda_gamma(p).transfer(),
                           lambda_gamma_dissipator(p).transfer()) < 1e-12);
        CHECK(max_abs_diff(phi_alpha(p).transfer(),
                           phi_alpha_dissipator(p).transfer()) < 1e-12);
        CHECK(max_abs_diff(phi2_alpha(p).transfer(),
                           phi2_alpha_dissipator(p).transfer()) < 1e-12);
        CHECK(max_abs_diff(phiC_generator(p).transfer(),
                           phiC_generator_dissipator(p).transfer()) < 1e-12);
        CHECK(max_abs_diff(choi_family(p).transfer(),
                           choi_family_dissipator(p).transfer()) < 1e-12);
    }
}

TEST_CASE("gell-mann basis sanity") {
    for (int i = 1; i <= 8; ++i) {
        const ComplexMatrix g = gell_mann(i);
        CHECK(std::abs(g.trace()) < 1e-15);
        CHECK(g.is_hermitian());
        for (int j = 1; j <= 8; ++j) {
            const double want = (i == j) ? 2.0 : 0.0;
            CHECK(std::abs((gell_mann(i) * gell_mann(j)).trace().real() - want) < 1e-12);
        }
    }
}

TEST_CASE("gell-mann assignment oracle") {
    SUBCASE("default assignment reproduces transposition") {
        CHECK_NOTHROW(validate_gellmann_assignment(qutrit_jump_list()));
    }
    SUBCASE("shifted assignment is rejected") {
        std::vector<ComplexMatrix> shifted = qutrit_jump_list();
        std::rotate(shifted.begin(), shifted.begin() + 2, shifted.end());
        CHECK_THROWS_AS(validate_gellmann_assignment(shifted), AssignmentNotFound);
    }
    SUBCASE("identity-only assignment is rejected") {
        std::vector<ComplexMatrix> ids(9, ComplexMatrix::identity(3));
        CHECK_THROWS_AS(validate_gellmann_assignment(ids), AssignmentNotFound);
    }
    SUBCASE("normalized final diagonal is rejected") {
        std::vector<ComplexMatrix> jumps = qutrit_jump_list();
        jumps[8] = gell_mann(8);   // the normalized version breaks the scaling
        CHECK_THROWS_AS(validate_gellmann_assignment(jumps), AssignmentNotFound);
    }
}

TEST_CASE("qubit family positivity window") {
    const MapFamily& fam = find_family("lambda-gamma");
    CHECK(fam.positive(0.5));
    CHECK(fam.positive(-0.5));
    CHECK_FALSE(fam.positive(0.5001));
    CHECK(fam.completely_positive(0.0));
    CHECK_FALSE(fam.completely_positive(0.01));

    // Scan certification on both sides of the edge.
    CHECK(min_output_eigenvalue_over_pure(lambda_gamma(0.49), 3000).min_eigenvalue >= -1e-9);
    CHECK(min_output_eigenvalue_over_pure(lambda_gamma(0.51), 3000).min_eigenvalue < -1e-4);
}

TEST_CASE("qutrit alpha family windows") {
    // Choi spectrum {1 - 4a/3} + {-2a/3} x3 + {2a/3} x5.
    for (double a : {0.1, 0.25, 0.5}) {
        const Spectrum s = eig_hermitian(choi(phi_alpha(a)));
        std::vector<double> want;
        want.push_back(1.0 - 4.0 * a / 3.0);
        for (int k = 0; k < 3; ++k) want.push_back(-2.0 * a / 3.0);
        for (int k = 0; k < 5; ++k) want.push_back(2.0 * a / 3.0);
        std::sort(want.begin(), want.end());
        CHECK(max_abs_vec_diff(s.eigenvalues, want) < 1e-10);
    }
    CHECK_FALSE(is_completely_positive(phi_alpha(0.05)));
    CHECK(is_completely_positive(phi_alpha(0.0)));
}

TEST_CASE("phi2 family boundaries") {
    SUBCASE("closed-form action matches the printed matrix at the Choi point") {
        // At a = 1/4 the diagonal averages the other two entries and the
        // off-diagonal halves with a sign flip.
        Rng rng(43);
        const ComplexMatrix rho = testing_helpers::random_hermitian(rng, 3);
        const ComplexMatrix out = apply(phi2_alpha(0.25), rho);
        ComplexMatrix want(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                want(i, j) = (i == j)
                    ? 0.5 * (rho((i + 1) % 3, (i + 1) % 3) + rho((i + 2) % 3, (i + 2) % 3))
                    : -0.5 * rho(i, j);
        CHECK(max_abs_diff(out, want) < 1e-13);
    }
    SUBCASE("CP window edge at 3/16") {
        const double edge = window_edge(
            [](double a) { return is_completely_positive(phi2_alpha(a)); }, 0.0, 0.25);
        CHECK(std::abs(edge - 3.0 / 16.0) < 1e-6);
    }
    SUBCASE("Choi spectrum closed form") {
        for (double a : {0.05, 0.1875, 0.21}) {
            const Spectrum s = eig_hermitian(choi(phi2_alpha(a)));
            std::vector<double> want(9, 2.0 * a / 3.0);
            want[0] = (3.0 - 16.0 * a) / 3.0;
            std::sort(want.begin(), want.end());
            CHECK(max_abs_vec_diff(s.eigenvalues, want) < 1e-10);
        }
    }
    SUBCASE("positivity window edge by scan") {
        CHECK(min_output_eigenvalue_over_pure(phi2_alpha(0.25), 4000).min_eigenvalue >= -1e-9);
        CHECK(min_output_eigenvalue_over_pure(phi2_alpha(0.27), 4000).min_eigenvalue < -1e-7);
    }
}

TEST_CASE("choi family boundaries and scale") {
    SUBCASE("generator output is traceless") {
        Rng rng(47);
        const ComplexMatrix rho = testing_helpers::random_hermitian(rng, 3);
        for (double b : {0.0, 0.5, 1.0})
            CHECK(std::abs(apply(phiC_generator(b), rho).trace()) < 1e-13);
    }
    SUBCASE("completion at beta = 1 is half the printed matrix") {
        Rng rng(53);
        const ComplexMatrix rho = testing_helpers::random_hermitian(rng, 3);
        const ComplexMatrix out = apply(choi_family(1.0), rho);
        ComplexMatrix printed(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                printed(i, j) = (i == j)
                    ? rho(i, i) + rho((i + 1) % 3, (i + 1) % 3)
                    : -rho(i, j);
        CHECK(max_abs_diff(Complex(2.0, 0.0) * out, printed) < 1e-12);
        CHECK(max_abs_diff(apply(choi_family_printed(1.0), rho), printed) < 1e-12);
    }
    SUBCASE("CP window edge at 3/4") {
        const double edge = window_edge(
            [](double b) { return is_completely_positive(choi_family(b)); }, 0.0, 1.0);
        CHECK(std::abs(edge - 0.75) < 1e-6);
    }
    SUBCASE("Choi spectrum closed form") {
        for (double b : {0.2, 0.75, 1.0}) {
            const Spectrum s = eig_hermitian(choi(choi_family(b)));
            std::vector<double> want = {(1.5 - 2.0 * b) / 3.0, b / 3.0, b / 3.0,
                                        1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0,
                                        0.0, 0.0, 0.0};
            std::sort(want.begin(), want.end());
            CHECK(max_abs_vec_diff(s.eigenvalues, want) < 1e-10);
        }
    }
    SUBCASE("positivity window edge by scan") {
        CHECK(min_output_eigenvalue_over_pure(choi_family(1.0), 4000).min_eigenvalue >= -1e-9);
        CHECK(min_output_eigenvalue_over_pure(choi_family(1.1), 4000).min_eigenvalue < -1e-7);
    }
}

TEST_CASE("family registry") {
    CHECK(map_families().size() == 5);
    CHECK(find_family("lambda-gamma").dim == 2);
    CHECK(find_family("phi2-alpha").param == "alpha");
    CHECK_THROWS_AS(find_family("nope"), UnknownFamily);

    // The printed-scale family shares windows with the completion.
    const MapFamily& printed = find_family("choi-F");
    CHECK(printed.positive(1.0));
    CHECK_FALSE(printed.positive(1.01));
    CHECK(printed.completely_positive(0.75));
    CHECK_FALSE(printed.completely_positive(0.76));
}
