#include "qcorr/states.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "qcorr/eigen.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    const double defect = matrix_.hermiticity_defect();
    if (defect > kValidationTol) {
        std::ostringstream msg;
        msg << "hermitian: max |M[i][j] - conj(M[j][i])| = " << defect << " exceeds "
            << kValidationTol;
        throw ValidationError(msg.str());
    }
    const double trace_defect = std::abs(matrix_.trace() - Complex(1.0, 0.0));
    if (trace_defect > kValidationTol) {
        std::ostringstream msg;
        msg << "unit trace: |Tr(M) - 1| = " << trace_defect << " exceeds " << kValidationTol;
        throw ValidationError(msg.str());
    }
    const EigenDecomposition eig = hermitian_eigen(matrix_);
    const double smallest = eig.eigenvalues.back();
    if (smallest < -kValidationTol) {
        std::ostringstream msg;
        msg << "positive semidefinite: smallest eigenvalue = " << smallest;
        throw ValidationError(msg.str());
    }
}

BipartiteState::BipartiteState(std::size_t dim_a, std::size_t dim_b, DensityMatrix rho)
    : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(rho)) {
    if (dim_a < 1 || dim_a > kMaxSubsystemDim || dim_b < 1 || dim_b > kMaxSubsystemDim) {
        std::ostringstream msg;
        msg << "subsystem dimensions must be between 1 and " << kMaxSubsystemDim << ", got "
            << dim_a << " x " << dim_b;
        throw ValidationError(msg.str());
    }
    if (rho_.dim() != dim_a * dim_b) {
        std::ostringstream msg;
        msg << "dimension product: state has dimension " << rho_.dim() << ", subsystems need "
            << dim_a << " * " << dim_b << " = " << dim_a * dim_b;
        throw ValidationError(msg.str());
    }
}

BipartiteState make_classical_mixture(std::size_t dim_a, std::size_t dim_b,
                                      const std::vector<MixtureTerm> &terms) {
    if (terms.empty()) {
        throw InvalidWeights("mixture needs at least one term");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    double total = 0.0;
    for (const MixtureTerm &term : terms) {
        if (!std::isfinite(term.weight) || term.weight <= 0.0) {
            std::ostringstream msg;
            msg << "mixture weights must be positive, got " << term.weight;
            throw InvalidWeights(msg.str());
        }
        if (term.i >= dim_a || term.j >= dim_b) {
            std::ostringstream msg;
            msg << "mixture term (" << term.i << ", " << term.j << ") out of range for "
                << dim_a << " x " << dim_b;
            throw IndexOutOfRange(msg.str());
        }
        if (!seen.emplace(term.i, term.j).second) {
            std::ostringstream msg;
            msg << "duplicate mixture term for (" << term.i << ", " << term.j << ")";
            throw DuplicateTerm(msg.str());
        }
        total += term.weight;
    }
    if (std::abs(total - 1.0) > kValidationTol) {
        std::ostringstream msg;
        msg << "mixture weights must sum to 1, got " << total;
        throw InvalidWeights(msg.str());
    }

    ComplexMatrix m(dim_a * dim_b);
    for (const MixtureTerm &term : terms) {
        const std::size_t flat = term.i * dim_b + term.j;
        m(flat, flat) = Complex(term.weight, 0.0);
    }
    return BipartiteState(dim_a, dim_b, DensityMatrix(std::move(m)));
}

DensityMatrix partial_trace(const BipartiteState &s, Subsystem keep) {
    const ComplexMatrix &rho = s.rho().matrix();
    const std::size_t da = s.dim_a();
    const std::size_t db = s.dim_b();

    if (keep == Subsystem::A) {
        ComplexMatrix out(da);
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t i2 = 0; i2 < da; ++i2) {
                Complex sum(0.0, 0.0);
                for (std::size_t j = 0; j < db; ++j) {
                    sum += rho(i * db + j, i2 * db + j);
                }
                out(i, i2) = sum;
            }
        }
        return DensityMatrix(std::move(out));
    }

    ComplexMatrix out(db);
    for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t j2 = 0; j2 < db; ++j2) {
            Complex sum(0.0, 0.0);
            for (std::size_t i = 0; i < da; ++i) {
                sum += rho(i * db + j, i * db + j2);
            }
            out(j, j2) = sum;
        }
    }
    return DensityMatrix(std::move(out));
}

}  // namespace qcorr
