#pragma once

#include <cmath>
#include <vector>

#include "lindmap/matrix.hpp"
#include "lindmap/rng.hpp"

namespace testing_helpers {

using lindmap::Complex;
using lindmap::ComplexMatrix;

inline ComplexMatrix random_hermitian(lindmap::Rng& rng, int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = rng.normal();
        for (int j = i + 1; j < dim; ++j) {
            const Complex v = rng.cnormal();
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

inline double max_abs_vec_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return 1e300;
    double m = 0.0;
    for (size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

} // namespace testing_helpers
