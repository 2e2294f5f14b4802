#pragma once

#include <optional>
#include <span>

#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Shannon entropy in bits, with 0 log 0 := 0. Entries must be >= -1e-12
// (clamped) and sum to 1 within 1e-9 (NotADistribution otherwise).
double shannon_entropy(std::span<const double> p);

// H(B|A) = sum_i p_a[i] H(B|A=i) over defined rows only; AGivenB swaps roles.
double conditional_entropy(const JointDistribution &j, Direction direction);

// I(A:B) = sum_ij p_ij log2(p_ij / (p_a[i] p_b[j])), in bits. Terms with a
// factor at the zero floor contribute 0.
double classical_mutual_information(const JointDistribution &j);

// S(rho) = -sum_k lambda_k log2 lambda_k over the spectrum, eigenvalues
// clamped to [0, 1].
double von_neumann_entropy(const DensityMatrix &rho);

// I(rho) = S(rho^A) + S(rho^B) - S(rho^AB), in bits.
double quantum_mutual_information(const BipartiteState &s);

// I(A:B) / H(A), defined only when the two marginals are elementwise
// identical within 1e-9 (MarginalsNotIdentical otherwise). nullopt when
// H(A) is zero.
std::optional<double> cover_thomas_measure(const JointDistribution &j);

// I(A:B) / H(A) or I(A:B) / H(B); nullopt when the chosen entropy is zero.
std::optional<double> directional_ratio(const JointDistribution &j, Subsystem denominator);

// I(A:B) / min(H(A), H(B)), the larger of the two directional ratios;
// nullopt when either marginal entropy is zero.
std::optional<double> correlation_measure(const JointDistribution &j);

// I(rho) / min(S(rho^A), S(rho^B)); nullopt when either reduced entropy is
// zero. Bounded by 1 for classically correlated states only; see
// non_classical_regime.
std::optional<double> total_correlation(const BipartiteState &s);

// Every entropy, mutual information and correlation measure for one
// state/basis pair. Entropies in bits; nullopt marks ratios whose
// denominator entropy vanishes.
struct CorrelationReport {
    double h_a = 0.0;
    double h_b = 0.0;
    double h_b_given_a = 0.0;
    double h_a_given_b = 0.0;
    double mi_classical = 0.0;
    double s_a = 0.0;
    double s_b = 0.0;
    double s_ab = 0.0;
    double mi_quantum = 0.0;
    std::optional<double> ratio_a;    // I(A:B) / H(A)
    std::optional<double> ratio_b;    // I(A:B) / H(B)
    std::optional<double> c_measure;  // I(A:B) / min(H(A), H(B))
    std::optional<double> t_measure;  // I(rho) / min(S(rho^A), S(rho^B))
    bool functional_b_of_a = false;
    bool functional_a_of_b = false;
};

// Populates a full report and cross-checks I(A:B) against both chain-rule
// forms H(B) - H(B|A) and H(A) - H(A|B) within 1e-9 (CrossCheckFailure).
CorrelationReport build_report(const BipartiteState &s, const ProjectiveBasis &basis_a,
                               const ProjectiveBasis &basis_b);

// True when the total-correlation value exceeds the classical ceiling of 1;
// renderers annotate such values as outside the classically correlated
// regime.
bool non_classical_regime(const CorrelationReport &r);

}  // namespace qcorr
