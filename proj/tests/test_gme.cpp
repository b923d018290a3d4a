#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "helpers.hpp"
#include "lindmap/gme.hpp"

using namespace lindmap;
using testing_helpers::max_abs_vec_diff;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Lifted W-state image spectrum at g = 1/2, c = 1.
std::vector<double> w_image_spectrum() {
    std::vector<double> v = {1.0 - 2.0 / kSqrt3, 1.0, 1.0, 1.0,
                             5.0 / 3.0, 5.0 / 3.0, 1.0 + 2.0 / kSqrt3, 8.0 / 3.0};
    std::sort(v.begin(), v.end());
    return v;
}

ComplexMatrix random_local_unitary(Rng& rng) {
    const Spectrum s = eig_hermitian(testing_helpers::random_hermitian(rng, 2));
    return *s.eigenvectors;
}

} // namespace

TEST_CASE("default_c is twice the negativity of the base map") {
    CHECK(default_c(0.5) == doctest::Approx(1.0));
    CHECK(default_c(-0.3) == doctest::Approx(0.6));
    CHECK(default_c(0.0) == doctest::Approx(0.0));
}

TEST_CASE("lift of the identity-scaled input") {
    // Unital base map: party terms give 3 rho-like pieces; on I/8 the output
    // is (3/8 + c) I.
    const LiftedMap lm = lift(lambda_gamma(0.5), 1.0);
    const ComplexMatrix out = apply(lm, maximally_mixed({2, 2, 2}).matrix);
    ComplexMatrix want = ComplexMatrix::identity(8);
    want *= Complex(11.0 / 8.0, 0.0);
    CHECK(max_abs_diff(out, want) < 1e-13);
}

TEST_CASE("lifted W image spectrum at the transposition point") {
    const LiftedMap lm = lift(lambda_gamma(0.5), 1.0);
    const Spectrum s = eig_hermitian(apply(lm, w_state().matrix).hermitian_part());
    CHECK(max_abs_vec_diff(s.eigenvalues, w_image_spectrum()) < 1e-12);
}

TEST_CASE("W state detection across gamma") {
    const DensityMatrix w = w_state();

    const DetectionReport at_half = detect_gme(w, 0.5);
    CHECK(at_half.verdict == Verdict::Detected);
    CHECK(at_half.min_eigenvalue == doctest::Approx(1.0 - 2.0 / kSqrt3).epsilon(1e-10));

    const DetectionReport at_04 = detect_gme(w, 0.4);
    CHECK(at_04.verdict == Verdict::NotDetected);
    CHECK(at_04.min_eigenvalue == doctest::Approx(0.0762395692965987).epsilon(1e-9));

    // Sign symmetry of the family.
    const DetectionReport at_neg = detect_gme(w, -0.5);
    CHECK(at_neg.verdict == Verdict::Detected);
    CHECK(at_neg.min_eigenvalue == doctest::Approx(1.0 - 2.0 / kSqrt3).epsilon(1e-10));

    // Closed form of the W minimum eigenvalue: 1 - 4g/sqrt(3).
    for (double g : {0.1, 0.25, 0.45}) {
        const double got = detect_gme(w, g).min_eigenvalue;
        CHECK(got == doctest::Approx(1.0 - 4.0 * g / kSqrt3).epsilon(1e-10));
    }
}

TEST_CASE("GHZ needs the rotation") {
    const DensityMatrix ghz = ghz_state();

    CHECK(detect_gme(ghz, 0.5).verdict == Verdict::NotDetected);
    CHECK(detect_gme(ghz, 0.5).min_eigenvalue == doctest::Approx(0.5).epsilon(1e-10));

    const DetectionReport rot = detect_gme(ghz, 0.5, true);
    CHECK(rot.verdict == Verdict::Detected);
    CHECK(rot.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-10));

    CHECK(detect_gme(ghz, 0.3, true).min_eigenvalue == doctest::Approx(0.1).epsilon(1e-10));

    // Closed form: rotated GHZ minimum eigenvalue is 1 - 3g.
    for (double g : {0.1, 1.0 / 3.0, 0.4}) {
        CHECK(detect_gme(ghz, g, true).min_eigenvalue ==
              doctest::Approx(1.0 - 3.0 * g).epsilon(1e-9));
    }
}

TEST_CASE("detection boundaries by bisection") {
    SUBCASE("W boundary at sqrt(3)/4") {
        const double b = gamma_detection_boundary(w_state());
        CHECK(std::abs(b - kSqrt3 / 4.0) < 1e-7);
    }
    SUBCASE("rotated GHZ boundary at 1/3") {
        const double b = gamma_detection_boundary(ghz_state(), true);
        CHECK(std::abs(b - 1.0 / 3.0) < 1e-7);
    }
    SUBCASE("noisy W at p = 0.95") {
        const double b = gamma_detection_boundary(noisy_w(0.95));
        CHECK(std::abs(b - 0.4643491474239454) < 1e-7);
    }
    SUBCASE("noisy W at p = 0.8 never crosses zero") {
        CHECK_THROWS_AS(gamma_detection_boundary(noisy_w(0.8)), NoSignChange);
    }
    SUBCASE("unrotated GHZ never crosses zero") {
        CHECK_THROWS_AS(gamma_detection_boundary(ghz_state()), NoSignChange);
    }
}

TEST_CASE("witness operator") {
    const ComplexMatrix w = gme_witness();
    CHECK(w.is_hermitian());

    const Spectrum s = eig_hermitian(w);
    CHECK(max_abs_vec_diff(s.eigenvalues, w_image_spectrum()) < 1e-12);

    SUBCASE("unit value on the all-zero product state") {
        std::vector<Complex> zero(8, 0.0);
        zero[0] = 1.0;
        CHECK(witness_value(w, pure_density(zero, {2, 2, 2})) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("value on the W state itself is positive") {
        // The witness detects the state built from its negative eigenvector,
        // not the W state: the overlap with W is exactly 8/3.
        CHECK(witness_value(w, w_state()) == doctest::Approx(8.0 / 3.0).epsilon(1e-10));
    }
    SUBCASE("the negative-eigenvector state is detected") {
        const Spectrum full = eig_hermitian(w);
        std::vector<Complex> psi(8);
        for (int i = 0; i < 8; ++i) psi[static_cast<size_t>(i)] = (*full.eigenvectors)(i, 0);
        const double val = witness_value(w, pure_density(psi, {2, 2, 2}));
        CHECK(val == doctest::Approx(1.0 - 2.0 / kSqrt3).epsilon(1e-10));
        CHECK(val < -1e-3);
    }
    SUBCASE("nonnegative on biseparable samples") {
        Rng rng(kDefaultSeed);
        const Bipartition cuts[4] = {Bipartition::A_BC, Bipartition::B_AC,
                                     Bipartition::C_AB, Bipartition::Mixed};
        for (int rep = 0; rep < 30; ++rep)
            for (Bipartition cut : cuts)
                CHECK(witness_value(w, random_biseparable(rng, cut)) >= -1e-10);
    }
}

TEST_CASE("n_gme values") {
    SUBCASE("pinned W value") {
        const double want = (4.0 / kSqrt3 - 2.0) / 11.0;
        CHECK(std::abs(n_gme(w_state()) - want) < 1e-12);
        CHECK(n_gme(w_state()) == doctest::Approx(0.0281273706144096).epsilon(1e-9));
        CHECK(std::abs(n_gme_unit_w_constant() - want) < 1e-12);
    }
    SUBCASE("unit normalization mode") {
        CHECK(n_gme(w_state(), n_gme_unit_w_constant()) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("zero on the maximally mixed state") {
        CHECK(n_gme(maximally_mixed({2, 2, 2})) == 0.0);
    }
    SUBCASE("zero on the GHZ state: the measure has blind spots") {
        CHECK(n_gme(ghz_state()) == 0.0);
    }
    SUBCASE("noisy W frozen values") {
        CHECK(n_gme(noisy_w(0.95)) == doctest::Approx(0.01422100208368926).epsilon(1e-9));
        CHECK(n_gme(noisy_w(0.9)) == doctest::Approx(0.000314633553).epsilon(1e-6));
        CHECK(n_gme(noisy_w(0.7)) == 0.0);
    }
    SUBCASE("threshold sits at the pinned p*") {
        const double p_star = (11.0 / 8.0) / (11.0 / 8.0 + 2.0 / kSqrt3 - 1.0);
        CHECK(std::abs(p_star - 0.8988687429350328) < 1e-12);
        CHECK(n_gme(noisy_w(p_star - 1e-4)) == 0.0);
        CHECK(n_gme(noisy_w(p_star + 1e-4)) > 0.0);
    }
    SUBCASE("positive exactly when the lifted transposition output dips negative") {
        const LiftedMap lt = lift(SuperOp::transposition(2), 1.0);
        for (double p : {0.2, 0.5, 0.85, 0.92, 0.97, 1.0}) {
            const DensityMatrix rho = noisy_w(p);
            const double mineig = min_eigenvalue(apply(lt, rho.matrix).hermitian_part());
            CHECK((n_gme(rho) > 0.0) == (mineig < -1e-9));
        }
    }
    SUBCASE("rejects bad normalization") {
        CHECK_THROWS_AS(n_gme(w_state(), 0.0), ParameterOutOfRange);
    }
}

TEST_CASE("n_gme vanishes on biseparable samples") {
    Rng rng(71);
    const Bipartition cuts[4] = {Bipartition::A_BC, Bipartition::B_AC,
                                 Bipartition::C_AB, Bipartition::Mixed};
    for (int rep = 0; rep < 25; ++rep)
        for (Bipartition cut : cuts)
            CHECK(n_gme(random_biseparable(rng, cut)) == 0.0);
}

TEST_CASE("lifted map is nonnegative on biseparable states at the witness point") {
    Rng rng(73);
    const Bipartition cuts[4] = {Bipartition::A_BC, Bipartition::B_AC,
                                 Bipartition::C_AB, Bipartition::Mixed};
    for (int rep = 0; rep < 25; ++rep)
        for (Bipartition cut : cuts) {
            const DensityMatrix dm = random_biseparable(rng, cut);
            CHECK(detect_gme(dm, 0.5).min_eigenvalue >= -1e-10);
        }
}

TEST_CASE("sign symmetry of the lifted family on symmetric states") {
    const DensityMatrix states[] = {w_state(), ghz_state(), noisy_w(0.9)};
    for (const DensityMatrix& rho : states) {
        for (double g : {0.2, 0.5}) {
            const LiftedMap plus = lift(lambda_gamma(g), 1.0);
            const LiftedMap minus = lift(lambda_gamma(-g), 1.0);
            const Spectrum sp = eig_hermitian(apply(plus, rho.matrix).hermitian_part());
            const Spectrum sm = eig_hermitian(apply(minus, rho.matrix).hermitian_part());
            CHECK(max_abs_vec_diff(sp.eigenvalues, sm.eigenvalues) < 1e-12);
        }
    }
    // Generic states only keep the verdict, not the spectrum.
    Rng rng(79);
    for (int rep = 0; rep < 5; ++rep) {
        const DensityMatrix rho = make_density(random_mixed(rng, 8).matrix, {2, 2, 2});
        CHECK(detect_gme(rho, 0.5).verdict == detect_gme(rho, -0.5).verdict);
    }
}

TEST_CASE("flipped W is spectrally equivalent under the lift") {
    const LiftedMap lm = lift(lambda_gamma(0.5), 1.0);
    const Spectrum a = eig_hermitian(apply(lm, w_state().matrix).hermitian_part());
    const Spectrum b = eig_hermitian(apply(lm, w_state_flipped().matrix).hermitian_part());
    CHECK(max_abs_vec_diff(a.eigenvalues, b.eigenvalues) < 1e-12);
}

TEST_CASE("measure contracts under mixing with biseparable noise") {
    Rng rng(83);
    const DensityMatrix w = w_state();
    for (int rep = 0; rep < 20; ++rep) {
        const DensityMatrix sep = random_biseparable(rng, Bipartition::Mixed);
        const double p = rng.uniform();
        ComplexMatrix mixm = w.matrix;
        mixm *= Complex(p, 0.0);
        ComplexMatrix noise = sep.matrix;
        noise *= Complex(1.0 - p, 0.0);
        mixm += noise;
        const DensityMatrix mix = make_density(mixm, {2, 2, 2});
        CHECK(n_gme(mix) <= p * n_gme(w) + 1e-10);
    }
}

TEST_CASE("measure under local unitaries stays within spot-check tolerance") {
    // Advisory check: exact invariance is not claimed, so violations warn
    // instead of failing.
    Rng rng(89);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityMatrix rho = noisy_w(0.95);
        const ComplexMatrix u = kron(kron(random_local_unitary(rng),
                                          random_local_unitary(rng)),
                                     random_local_unitary(rng));
        const ComplexMatrix rotated = (u * rho.matrix * u.adjoint()).hermitian_part();
        const DensityMatrix moved = make_density(rotated, {2, 2, 2});
        WARN(n_gme(moved) <= n_gme(rho) + 1e-9);
    }
}

TEST_CASE("input validation") {
    const DensityMatrix two = schmidt_state(0.6, 0.8);
    CHECK_THROWS_AS(detect_gme(two, 0.5), DimensionMismatch);
    CHECK_THROWS_AS(n_gme(two), DimensionMismatch);
    CHECK_THROWS_AS(gamma_detection_boundary(w_state(), false, 0.5, 0.5), ParameterOutOfRange);
    CHECK(std::string(to_string(Verdict::Detected)) == "GME_DETECTED");
    CHECK(std::string(to_string(Verdict::NotDetected)) == "NOT_DETECTED");
}
