#include "qcorr/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

// Stopping threshold on the off-diagonal Frobenius norm, and the sweep
// budget before the iteration is declared stuck.
constexpr double kOffDiagThreshold = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// One Jacobi rotation zeroing a(p, q). The 2x2 pivot block is reduced to a
// real symmetric block by the phase of a(p, q), then rotated by the
// smaller-angle root of t^2 + 2*tau*t - 1 = 0.
void rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const std::size_t n = a.dim();
    const Complex z = a(p, q);
    const double r = std::abs(z);
    if (r < 1e-100) {
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        return;
    }

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex phase = std::conj(z) / r;

    // A <- A R, columns p and q.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * (phase * akq);
        a(k, q) = s * akp + c * (phase * akq);
    }
    // A <- R^dagger A, rows p and q.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * (std::conj(phase) * aqk);
        a(q, k) = s * apk + c * (std::conj(phase) * aqk);
    }
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    // V <- V R.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * (phase * vkq);
        v(k, q) = s * vkp + c * (phase * vkq);
    }
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix &m) {
    const double defect = m.hermiticity_defect();
    if (defect > kValidationTol) {
        std::ostringstream msg;
        msg << "hermitian input required: max |m[i][j] - conj(m[j][i])| = " << defect;
        throw NonHermitianInput(msg.str());
    }

    const std::size_t n = m.dim();
    // Iterate on the exactly Hermitian part (m + m^dagger) / 2.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = off_diagonal_norm(a) <= kOffDiagThreshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
        converged = off_diagonal_norm(a) <= kOffDiagThreshold;
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "Jacobi iteration stuck: off-diagonal norm " << off_diagonal_norm(a) << " after "
            << kMaxSweeps << " sweeps";
        throw ConvergenceFailure(msg.str());
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t row = 0; row < n; ++row) {
            out.eigenvectors(row, k) = v(row, order[k]);
        }
    }
    return out;
}

}  // namespace qcorr
