#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Orthonormal measurement basis for one subsystem; outcome k is the rank-1
// projector onto column k. Labels are optional observable eigenvalues
// attached to the outcomes; they are report metadata and never enter any
// computation.
class ProjectiveBasis {
  public:
    explicit ProjectiveBasis(ComplexMatrix columns,
                             std::optional<std::vector<double>> labels = std::nullopt);

    static ProjectiveBasis computational(std::size_t dim);

    std::size_t dim() const { return columns_.dim(); }
    std::vector<Complex> vector(std::size_t k) const;
    const ComplexMatrix &columns() const { return columns_; }
    const std::optional<std::vector<double>> &labels() const { return labels_; }

  private:
    ComplexMatrix columns_;
    std::optional<std::vector<double>> labels_;
};

// Classical outcome table p[i][j] together with its marginals. Entries in
// [-1e-12, 0) are clamped to zero on construction; the total and the
// row/column marginal consistency are validated within 1e-9
// (NotADistribution otherwise).
class JointDistribution {
  public:
    // Marginals default to the row/column sums of the table.
    JointDistribution(std::size_t n_a, std::size_t n_b, std::vector<double> table);
    JointDistribution(std::size_t n_a, std::size_t n_b, std::vector<double> table,
                      std::vector<double> p_a, std::vector<double> p_b);

    std::size_t n_a() const { return n_a_; }
    std::size_t n_b() const { return n_b_; }
    double joint(std::size_t i, std::size_t j) const { return table_[i * n_b_ + j]; }
    const std::vector<double> &p_a() const { return p_a_; }
    const std::vector<double> &p_b() const { return p_b_; }

  private:
    std::size_t n_a_;
    std::size_t n_b_;
    std::vector<double> table_;
    std::vector<double> p_a_;
    std::vector<double> p_b_;
};

enum class Direction { BGivenA, AGivenB };

// Conditional outcome table. rows[k] holds the distribution of the
// dependent outcome given conditioning outcome k, or nullopt (UNDEFINED)
// when the conditioning probability is at the zero floor.
struct ConditionalTable {
    Direction direction;
    std::vector<std::optional<std::vector<double>>> rows;
};

enum class MeasurementOrder { AFirst, BFirst };

// p_a[i] = Tr(P_i rho^A), p_b[j] = Tr(Q_j rho^B).
std::pair<std::vector<double>, std::vector<double>> outcome_marginals(
    const BipartiteState &s, const ProjectiveBasis &basis_a, const ProjectiveBasis &basis_b);

// Post-measurement state after observing `outcome` on one subsystem:
// (P ox I) rho (P ox I) / p for side A, (I ox Q) rho (I ox Q) / p for side B.
// Raises ZeroProbabilityOutcome when the outcome probability is at the floor.
BipartiteState post_measurement_state(const BipartiteState &s, Subsystem side,
                                      const ProjectiveBasis &basis, std::size_t outcome);

// Joint outcome distribution p[i][j] = Tr[(P_i ox Q_j) rho]. Local
// projectors commute, so the result does not depend on `order`; the flag
// mirrors the two sequential protocols and is carried for report
// provenance only.
JointDistribution joint_distribution(const BipartiteState &s, const ProjectiveBasis &basis_a,
                                     const ProjectiveBasis &basis_b, MeasurementOrder order);

// Defined rows are p_joint[i][.] / p_a[i] (or the transposed analogue);
// rows whose conditioning probability is at the floor are UNDEFINED.
ConditionalTable conditional_table(const JointDistribution &j, Direction direction);

// True iff every defined conditional row is deterministic (one entry within
// 1e-9 of 1): the dependent outcome is a function of the conditioning
// outcome on its support. Direction::BGivenA tests B = f(A).
bool is_functional(const JointDistribution &j, Direction direction);

}  // namespace qcorr
