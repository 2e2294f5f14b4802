#include "qcorr/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qcorr/eigen.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

// -sum p log2 p over entries above the zero floor. Callers guarantee the
// input is a distribution.
double entropy_of(std::span<const double> p) {
    double h = 0.0;
    for (double value : p) {
        if (value > kProbFloor) {
            h -= value * std::log2(value);
        }
    }
    return h;
}

std::optional<double> ratio_or_undefined(double numerator, double denominator) {
    if (denominator <= kProbFloor) {
        return std::nullopt;
    }
    return numerator / denominator;
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
    std::vector<double> clamped(p.begin(), p.end());
    double total = 0.0;
    for (std::size_t k = 0; k < clamped.size(); ++k) {
        if (clamped[k] < -kProbFloor || !std::isfinite(clamped[k])) {
            std::ostringstream msg;
            msg << "negative probability: p[" << k << "] = " << clamped[k];
            throw NotADistribution(msg.str());
        }
        clamped[k] = std::max(clamped[k], 0.0);
        total += clamped[k];
    }
    if (std::abs(total - 1.0) > kValidationTol) {
        std::ostringstream msg;
        msg << "probabilities must sum to 1, got " << total;
        throw NotADistribution(msg.str());
    }
    return entropy_of(clamped);
}

double conditional_entropy(const JointDistribution &j, Direction direction) {
    const ConditionalTable table = conditional_table(j, direction);
    const std::vector<double> &weights =
        direction == Direction::BGivenA ? j.p_a() : j.p_b();
    double h = 0.0;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        if (table.rows[k]) {
            h += weights[k] * entropy_of(*table.rows[k]);
        }
    }
    return h;
}

double classical_mutual_information(const JointDistribution &j) {
    double mi = 0.0;
    for (std::size_t i = 0; i < j.n_a(); ++i) {
        for (std::size_t k = 0; k < j.n_b(); ++k) {
            const double p = j.joint(i, k);
            if (p <= kProbFloor || j.p_a()[i] <= kProbFloor || j.p_b()[k] <= kProbFloor) {
                continue;
            }
            mi += p * std::log2(p / (j.p_a()[i] * j.p_b()[k]));
        }
    }
    return mi;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const EigenDecomposition eig = hermitian_eigen(rho.matrix());
    double h = 0.0;
    for (double lambda : eig.eigenvalues) {
        // PSD slack within tolerance is clamped so lambda log lambda stays finite.
        const double clamped = std::clamp(lambda, 0.0, 1.0);
        if (clamped > kProbFloor) {
            h -= clamped * std::log2(clamped);
        }
    }
    return h;
}

double quantum_mutual_information(const BipartiteState &s) {
    const double s_a = von_neumann_entropy(partial_trace(s, Subsystem::A));
    const double s_b = von_neumann_entropy(partial_trace(s, Subsystem::B));
    const double s_ab = von_neumann_entropy(s.rho());
    return s_a + s_b - s_ab;
}

std::optional<double> cover_thomas_measure(const JointDistribution &j) {
    if (j.n_a() != j.n_b()) {
        std::ostringstream msg;
        msg << "marginals differ: " << j.n_a() << " vs " << j.n_b() << " outcomes";
        throw MarginalsNotIdentical(msg.str());
    }
    for (std::size_t k = 0; k < j.n_a(); ++k) {
        const double diff = std::abs(j.p_a()[k] - j.p_b()[k]);
        if (diff > kValidationTol) {
            std::ostringstream msg;
            msg << "marginals differ at outcome " << k << ": |p^A - p^B| = " << diff;
            throw MarginalsNotIdentical(msg.str());
        }
    }
    return ratio_or_undefined(classical_mutual_information(j), entropy_of(j.p_a()));
}

std::optional<double> directional_ratio(const JointDistribution &j, Subsystem denominator) {
    const double h = entropy_of(denominator == Subsystem::A ? j.p_a() : j.p_b());
    return ratio_or_undefined(classical_mutual_information(j), h);
}

std::optional<double> correlation_measure(const JointDistribution &j) {
    const double h_min = std::min(entropy_of(j.p_a()), entropy_of(j.p_b()));
    return ratio_or_undefined(classical_mutual_information(j), h_min);
}

std::optional<double> total_correlation(const BipartiteState &s) {
    const double s_a = von_neumann_entropy(partial_trace(s, Subsystem::A));
    const double s_b = von_neumann_entropy(partial_trace(s, Subsystem::B));
    return ratio_or_undefined(quantum_mutual_information(s), std::min(s_a, s_b));
}

CorrelationReport build_report(const BipartiteState &s, const ProjectiveBasis &basis_a,
                               const ProjectiveBasis &basis_b) {
    const JointDistribution joint =
        joint_distribution(s, basis_a, basis_b, MeasurementOrder::AFirst);

    CorrelationReport r;
    r.h_a = shannon_entropy(joint.p_a());
    r.h_b = shannon_entropy(joint.p_b());
    r.h_b_given_a = conditional_entropy(joint, Direction::BGivenA);
    r.h_a_given_b = conditional_entropy(joint, Direction::AGivenB);
    r.mi_classical = classical_mutual_information(joint);

    const double via_b = r.h_b - r.h_b_given_a;
    const double via_a = r.h_a - r.h_a_given_b;
    if (std::abs(r.mi_classical - via_b) > kValidationTol ||
        std::abs(r.mi_classical - via_a) > kValidationTol) {
        std::ostringstream msg;
        msg << "mutual information cross-check: I(A:B) = " << r.mi_classical
            << ", H(B) - H(B|A) = " << via_b << ", H(A) - H(A|B) = " << via_a;
        throw CrossCheckFailure(msg.str());
    }

    r.s_a = von_neumann_entropy(partial_trace(s, Subsystem::A));
    r.s_b = von_neumann_entropy(partial_trace(s, Subsystem::B));
    r.s_ab = von_neumann_entropy(s.rho());
    r.mi_quantum = r.s_a + r.s_b - r.s_ab;

    r.ratio_a = directional_ratio(joint, Subsystem::A);
    r.ratio_b = directional_ratio(joint, Subsystem::B);
    r.c_measure = correlation_measure(joint);
    r.t_measure = total_correlation(s);
    r.functional_b_of_a = is_functional(joint, Direction::BGivenA);
    r.functional_a_of_b = is_functional(joint, Direction::AGivenB);
    return r;
}

bool non_classical_regime(const CorrelationReport &r) {
    return r.t_measure.has_value() && *r.t_measure > 1.0 + kValidationTol;
}

}  // namespace qcorr
