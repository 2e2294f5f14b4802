#include "qcorr/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

// <u|m|u>, real part (m Hermitian).
double expectation(const ComplexMatrix &m, const std::vector<Complex> &u) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex row(0.0, 0.0);
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row += m(i, j) * u[j];
        }
        acc += std::conj(u[i]) * row;
    }
    return acc.real();
}

// |u><u|
ComplexMatrix projector(const std::vector<Complex> &u) {
    ComplexMatrix out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
            out(i, j) = u[i] * std::conj(u[j]);
        }
    }
    return out;
}

// u ox w under the flat index convention i*dim(w) + k.
std::vector<Complex> kron_vector(const std::vector<Complex> &u, const std::vector<Complex> &w) {
    std::vector<Complex> out(u.size() * w.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            out[i * w.size() + k] = u[i] * w[k];
        }
    }
    return out;
}

double clamp_probability(double p) {
    return p < 0.0 ? 0.0 : p;
}

void check_basis_dims(const BipartiteState &s, const ProjectiveBasis &basis_a,
                      const ProjectiveBasis &basis_b) {
    if (basis_a.dim() != s.dim_a() || basis_b.dim() != s.dim_b()) {
        std::ostringstream msg;
        msg << "basis dimensions " << basis_a.dim() << " x " << basis_b.dim()
            << " do not match subsystem dimensions " << s.dim_a() << " x " << s.dim_b();
        throw DimensionMismatch(msg.str());
    }
}

std::vector<double> marginal_of(const ComplexMatrix &reduced, const ProjectiveBasis &basis) {
    std::vector<double> p(basis.dim());
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        p[k] = clamp_probability(expectation(reduced, basis.vector(k)));
    }
    return p;
}

}  // namespace

ProjectiveBasis::ProjectiveBasis(ComplexMatrix columns, std::optional<std::vector<double>> labels)
    : columns_(std::move(columns)), labels_(std::move(labels)) {
    const std::size_t n = columns_.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex dot(0.0, 0.0);
            for (std::size_t row = 0; row < n; ++row) {
                dot += std::conj(columns_(row, i)) * columns_(row, j);
            }
            const double expected = i == j ? 1.0 : 0.0;
            const double defect = std::abs(dot - Complex(expected, 0.0));
            if (defect > kValidationTol) {
                std::ostringstream msg;
                msg << "orthonormal basis: |<v_" << i << "|v_" << j << "> - "
                    << (i == j ? "1" : "0") << "| = " << defect;
                throw ValidationError(msg.str());
            }
        }
    }
    if (labels_) {
        if (labels_->size() != n) {
            std::ostringstream msg;
            msg << "labels: expected " << n << " outcome labels, got " << labels_->size();
            throw ValidationError(msg.str());
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if ((*labels_)[i] == (*labels_)[j]) {
                    std::ostringstream msg;
                    msg << "labels must be pairwise distinct: label " << (*labels_)[i]
                        << " repeats at outcomes " << i << " and " << j;
                    throw ValidationError(msg.str());
                }
            }
        }
    }
}

ProjectiveBasis ProjectiveBasis::computational(std::size_t dim) {
    return ProjectiveBasis(ComplexMatrix::identity(dim));
}

std::vector<Complex> ProjectiveBasis::vector(std::size_t k) const {
    std::vector<Complex> out(columns_.dim());
    for (std::size_t row = 0; row < columns_.dim(); ++row) {
        out[row] = columns_(row, k);
    }
    return out;
}

JointDistribution::JointDistribution(std::size_t n_a, std::size_t n_b, std::vector<double> table)
    : JointDistribution(n_a, n_b, std::move(table), {}, {}) {
    // Empty marginals are filled from the row/column sums.
}

JointDistribution::JointDistribution(std::size_t n_a, std::size_t n_b, std::vector<double> table,
                                     std::vector<double> p_a, std::vector<double> p_b)
    : n_a_(n_a), n_b_(n_b), table_(std::move(table)), p_a_(std::move(p_a)), p_b_(std::move(p_b)) {
    if (n_a_ == 0 || n_b_ == 0 || table_.size() != n_a_ * n_b_) {
        std::ostringstream msg;
        msg << "joint table must hold " << n_a_ << " x " << n_b_ << " entries, got "
            << table_.size();
        throw NotADistribution(msg.str());
    }
    double total = 0.0;
    for (std::size_t k = 0; k < table_.size(); ++k) {
        if (table_[k] < -kProbFloor || !std::isfinite(table_[k])) {
            std::ostringstream msg;
            msg << "negative probability: p[" << k / n_b_ << "][" << k % n_b_
                << "] = " << table_[k];
            throw NotADistribution(msg.str());
        }
        table_[k] = clamp_probability(table_[k]);
        total += table_[k];
    }
    if (std::abs(total - 1.0) > kValidationTol) {
        std::ostringstream msg;
        msg << "joint probabilities must sum to 1, got " << total;
        throw NotADistribution(msg.str());
    }

    const bool derive_marginals = p_a_.empty() && p_b_.empty();
    if (derive_marginals) {
        p_a_.assign(n_a_, 0.0);
        p_b_.assign(n_b_, 0.0);
        for (std::size_t i = 0; i < n_a_; ++i) {
            for (std::size_t j = 0; j < n_b_; ++j) {
                p_a_[i] += joint(i, j);
                p_b_[j] += joint(i, j);
            }
        }
        return;
    }

    if (p_a_.size() != n_a_ || p_b_.size() != n_b_) {
        throw NotADistribution("marginal sizes do not match the joint table");
    }
    for (double &p : p_a_) {
        p = clamp_probability(p);
    }
    for (double &p : p_b_) {
        p = clamp_probability(p);
    }
    for (std::size_t i = 0; i < n_a_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_b_; ++j) {
            row += joint(i, j);
        }
        if (std::abs(row - p_a_[i]) > kValidationTol) {
            std::ostringstream msg;
            msg << "marginal consistency: row " << i << " sums to " << row << " but p^A[" << i
                << "] = " << p_a_[i];
            throw NotADistribution(msg.str());
        }
    }
    for (std::size_t j = 0; j < n_b_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n_a_; ++i) {
            col += joint(i, j);
        }
        if (std::abs(col - p_b_[j]) > kValidationTol) {
            std::ostringstream msg;
            msg << "marginal consistency: column " << j << " sums to " << col << " but p^B[" << j
                << "] = " << p_b_[j];
            throw NotADistribution(msg.str());
        }
    }
}

std::pair<std::vector<double>, std::vector<double>> outcome_marginals(
    const BipartiteState &s, const ProjectiveBasis &basis_a, const ProjectiveBasis &basis_b) {
    check_basis_dims(s, basis_a, basis_b);
    const DensityMatrix rho_a = partial_trace(s, Subsystem::A);
    const DensityMatrix rho_b = partial_trace(s, Subsystem::B);
    return {marginal_of(rho_a.matrix(), basis_a), marginal_of(rho_b.matrix(), basis_b)};
}

BipartiteState post_measurement_state(const BipartiteState &s, Subsystem side,
                                      const ProjectiveBasis &basis, std::size_t outcome) {
    const std::size_t side_dim = side == Subsystem::A ? s.dim_a() : s.dim_b();
    if (basis.dim() != side_dim) {
        std::ostringstream msg;
        msg << "basis dimension " << basis.dim() << " does not match measured subsystem dimension "
            << side_dim;
        throw DimensionMismatch(msg.str());
    }
    if (outcome >= basis.dim()) {
        std::ostringstream msg;
        msg << "outcome " << outcome << " out of range for a " << basis.dim() << "-outcome basis";
        throw IndexOutOfRange(msg.str());
    }

    const ComplexMatrix proj = projector(basis.vector(outcome));
    const ComplexMatrix embedded = side == Subsystem::A
                                       ? tensor_product(proj, ComplexMatrix::identity(s.dim_b()))
                                       : tensor_product(ComplexMatrix::identity(s.dim_a()), proj);
    const ComplexMatrix collapsed = embedded * s.rho().matrix() * embedded;
    const double p = collapsed.trace().real();
    if (p <= kProbFloor) {
        std::ostringstream msg;
        msg << "outcome " << outcome << " has probability " << p << " at the zero floor";
        throw ZeroProbabilityOutcome(msg.str());
    }
    return BipartiteState(s.dim_a(), s.dim_b(), DensityMatrix(collapsed.scaled(1.0 / p)));
}

JointDistribution joint_distribution(const BipartiteState &s, const ProjectiveBasis &basis_a,
                                     const ProjectiveBasis &basis_b, MeasurementOrder /*order*/) {
    check_basis_dims(s, basis_a, basis_b);
    const std::size_t na = basis_a.dim();
    const std::size_t nb = basis_b.dim();

    std::vector<double> table(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        const std::vector<Complex> u = basis_a.vector(i);
        for (std::size_t j = 0; j < nb; ++j) {
            table[i * nb + j] =
                clamp_probability(expectation(s.rho().matrix(), kron_vector(u, basis_b.vector(j))));
        }
    }
    auto [p_a, p_b] = outcome_marginals(s, basis_a, basis_b);
    return JointDistribution(na, nb, std::move(table), std::move(p_a), std::move(p_b));
}

ConditionalTable conditional_table(const JointDistribution &j, Direction direction) {
    const bool b_given_a = direction == Direction::BGivenA;
    const std::size_t conditioning = b_given_a ? j.n_a() : j.n_b();
    const std::size_t dependent = b_given_a ? j.n_b() : j.n_a();
    const std::vector<double> &weights = b_given_a ? j.p_a() : j.p_b();

    ConditionalTable out{direction, {}};
    out.rows.reserve(conditioning);
    for (std::size_t k = 0; k < conditioning; ++k) {
        if (weights[k] <= kProbFloor) {
            out.rows.emplace_back(std::nullopt);
            continue;
        }
        std::vector<double> row(dependent);
        for (std::size_t l = 0; l < dependent; ++l) {
            row[l] = (b_given_a ? j.joint(k, l) : j.joint(l, k)) / weights[k];
        }
        out.rows.emplace_back(std::move(row));
    }
    return out;
}

bool is_functional(const JointDistribution &j, Direction direction) {
    const ConditionalTable table = conditional_table(j, direction);
    for (const auto &row : table.rows) {
        if (!row) {
            continue;
        }
        const double top = *std::max_element(row->begin(), row->end());
        if (top < 1.0 - kValidationTol) {
            return false;
        }
    }
    return true;
}

}  // namespace qcorr
