#pragma once

#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// Hermitian, unit-trace, positive-semidefinite operator. All three
// invariants are checked at construction; violations raise ValidationError
// naming the invariant and the measured defect.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m);

    std::size_t dim() const { return matrix_.dim(); }
    const ComplexMatrix &matrix() const { return matrix_; }

  private:
    ComplexMatrix matrix_;
};

enum class Subsystem { A, B };

// Density matrix on a dimA x dimB product space. The product basis vector
// |i>|j> maps to flat index i*dimB + j (row-major over subsystem A first).
class BipartiteState {
  public:
    BipartiteState(std::size_t dim_a, std::size_t dim_b, DensityMatrix rho);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    const DensityMatrix &rho() const { return rho_; }

    std::size_t flat_index(std::size_t i, std::size_t j) const { return i * dim_b_ + j; }

  private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    DensityMatrix rho_;
};

// One |i j><i j| component of a classical mixture.
struct MixtureTerm {
    double weight;
    std::size_t i;  // subsystem A basis index
    std::size_t j;  // subsystem B basis index
};

// rho = sum_k w_k |i_k j_k><i_k j_k|. Weights must be positive and sum to 1
// within 1e-9 (InvalidWeights); indices must be in range (IndexOutOfRange)
// and the (i, j) pairs distinct (DuplicateTerm).
BipartiteState make_classical_mixture(std::size_t dim_a, std::size_t dim_b,
                                      const std::vector<MixtureTerm> &terms);

// Reduced state of the kept subsystem.
DensityMatrix partial_trace(const BipartiteState &s, Subsystem keep);

}  // namespace qcorr
