#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lindmap/matrix.hpp"

namespace lindmap {

// Default seed for every sampling entry point ("lindmap" in ASCII hex).
inline constexpr std::uint64_t kDefaultSeed = 0x6C696E646D6170ULL;

// mt19937_64 with a hand-rolled Box-Muller transform. The standard library's
// normal_distribution is not pinned across implementations; this one is, so
// sampled regression values stay stable for a given libm.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();          // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    Complex cnormal() {
        const double re = normal();
        const double im = normal();
        return Complex(re, im);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace lindmap
