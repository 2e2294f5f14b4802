#pragma once

#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// Spectral decomposition m = V diag(lambda) V^dagger of a Hermitian matrix.
// Column k of `eigenvectors` pairs with `eigenvalues[k]`.
struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    ComplexMatrix eigenvectors;       // orthonormal columns
};

// Diagonalizes a Hermitian matrix with cyclic Jacobi rotations. The input
// must be Hermitian within 1e-9 (NonHermitianInput otherwise); the sweep
// budget is 100 (ConvergenceFailure when exhausted).
EigenDecomposition hermitian_eigen(const ComplexMatrix &m);

}  // namespace qcorr
