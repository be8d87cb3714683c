#pragma once

#include "qchan/matrix.hpp"
#include "qchan/rng.hpp"

namespace qchan::testing {

// Random matrix with standard-normal complex entries.
inline ComplexMatrix random_matrix(int rows, int cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            double re, im;
            rng.gaussian_pair(re, im);
            m(r, c) = Complex{re, im};
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(int dim, Rng& rng) {
    const ComplexMatrix a = random_matrix(dim, dim, rng);
    return Complex{0.5, 0.0} * (a + a.adjoint());
}

}  // namespace qchan::testing
