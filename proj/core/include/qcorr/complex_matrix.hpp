#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. The substrate for density
// operators, projectors and measurement bases.
class ComplexMatrix {
  public:
    // Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(std::size_t dim);

    // Row-major entries; entries.size() must equal dim*dim and all
    // entries must be finite.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }

    const std::vector<Complex> &entries() const { return entries_; }

    Complex trace() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix scaled(double factor) const;

    // max_ij |a_ij - conj(a_ji)|; zero exactly when the matrix is Hermitian.
    double hermiticity_defect() const;

    ComplexMatrix operator+(const ComplexMatrix &rhs) const;
    ComplexMatrix operator-(const ComplexMatrix &rhs) const;
    ComplexMatrix operator*(const ComplexMatrix &rhs) const;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

// Kronecker product: result[(i*db + k)][(j*db + l)] = a[i][j] * b[k][l].
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

// max_ij |a_ij - b_ij| for equally sized matrices.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace qcorr
