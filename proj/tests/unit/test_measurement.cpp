#include <doctest.h>

#include <cmath>
#include <vector>

#include "qcorr/errors.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"
#include "test_support.hpp"

using qcorr::BipartiteState;
using qcorr::Complex;
using qcorr::ComplexMatrix;
using qcorr::DensityMatrix;
using qcorr::Direction;
using qcorr::JointDistribution;
using qcorr::MeasurementOrder;
using qcorr::ProjectiveBasis;
using qcorr::Subsystem;

namespace {

BipartiteState qubit_pair(double alpha) {
    return qcorr::make_classical_mixture(2, 2, {{alpha, 0, 0}, {1.0 - alpha, 1, 1}});
}

BipartiteState qutrit_pair() {
    const double third = 1.0 / 3.0;
    return qcorr::make_classical_mixture(3, 3, {{third, 1, 1}, {third, 2, 0}, {third, 2, 2}});
}

JointDistribution computational_joint(const BipartiteState &s) {
    return qcorr::joint_distribution(s, ProjectiveBasis::computational(s.dim_a()),
                                     ProjectiveBasis::computational(s.dim_b()),
                                     MeasurementOrder::AFirst);
}

void check_row(const std::optional<std::vector<double>> &row,
               const std::vector<double> &expected) {
    REQUIRE(row.has_value());
    REQUIRE(row->size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        CHECK(std::abs((*row)[k] - expected[k]) <= 1e-9);
    }
}

}  // namespace

TEST_CASE("projective basis validation") {
    CHECK_NOTHROW(ProjectiveBasis::computational(3));

    ComplexMatrix not_orthonormal(2);
    not_orthonormal(0, 0) = 1.0;
    not_orthonormal(0, 1) = 1.0;
    CHECK_THROWS_WITH_AS((ProjectiveBasis(not_orthonormal)), doctest::Contains("orthonormal"),
                         qcorr::ValidationError);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix hadamard(2);
    hadamard(0, 0) = inv_sqrt2;
    hadamard(1, 0) = inv_sqrt2;
    hadamard(0, 1) = inv_sqrt2;
    hadamard(1, 1) = -inv_sqrt2;
    CHECK_NOTHROW(ProjectiveBasis(hadamard, std::vector<double>{1.0, -1.0}));
    CHECK_THROWS_WITH_AS(ProjectiveBasis(hadamard, std::vector<double>{1.0, 1.0}),
                         doctest::Contains("distinct"), qcorr::ValidationError);
    CHECK_THROWS_AS(ProjectiveBasis(hadamard, std::vector<double>{1.0}), qcorr::ValidationError);
}

TEST_CASE("outcome marginals of the worked examples") {
    const double alpha = 0.3;
    const auto [qubit_a, qubit_b] =
        qcorr::outcome_marginals(qubit_pair(alpha), ProjectiveBasis::computational(2),
                                 ProjectiveBasis::computational(2));
    CHECK(qubit_a[0] == doctest::Approx(alpha));
    CHECK(qubit_a[1] == doctest::Approx(1.0 - alpha));
    CHECK(qubit_b[0] == doctest::Approx(alpha));
    CHECK(qubit_b[1] == doctest::Approx(1.0 - alpha));

    const auto [qutrit_a, qutrit_b] =
        qcorr::outcome_marginals(qutrit_pair(), ProjectiveBasis::computational(3),
                                 ProjectiveBasis::computational(3));
    CHECK(qutrit_a[0] == doctest::Approx(0.0));
    CHECK(qutrit_a[1] == doctest::Approx(1.0 / 3.0));
    CHECK(qutrit_a[2] == doctest::Approx(2.0 / 3.0));
    for (double p : qutrit_b) {
        CHECK(p == doctest::Approx(1.0 / 3.0));
    }
}

TEST_CASE("maximally mixed state has uniform marginals in any basis") {
    const BipartiteState s(2, 2, DensityMatrix(ComplexMatrix::identity(4).scaled(0.25)));
    testsupport::Rng rng(11);
    for (int sample = 0; sample < 10; ++sample) {
        const auto [p_a, p_b] = qcorr::outcome_marginals(s, testsupport::random_basis(rng, 2),
                                                         testsupport::random_basis(rng, 2));
        CHECK(p_a[0] == doctest::Approx(0.5));
        CHECK(p_a[1] == doctest::Approx(0.5));
        CHECK(p_b[0] == doctest::Approx(0.5));
        CHECK(p_b[1] == doctest::Approx(0.5));
    }
}

TEST_CASE("marginals require matching dimensions") {
    CHECK_THROWS_AS(qcorr::outcome_marginals(qubit_pair(0.5), ProjectiveBasis::computational(3),
                                             ProjectiveBasis::computational(2)),
                    qcorr::DimensionMismatch);
}

TEST_CASE("post-measurement state collapses the two-qubit mixture") {
    const BipartiteState post = qcorr::post_measurement_state(
        qubit_pair(0.3), Subsystem::A, ProjectiveBasis::computational(2), 0);

    // Projecting A onto |0> keeps only |00><00|, renormalized to weight 1.
    ComplexMatrix expected(4);
    expected(0, 0) = 1.0;
    CHECK(qcorr::max_abs_diff(post.rho().matrix(), expected) <= 1e-12);
}

TEST_CASE("post-measurement state keeps both branches of outcome 2") {
    const BipartiteState post = qcorr::post_measurement_state(
        qutrit_pair(), Subsystem::A, ProjectiveBasis::computational(3), 2);

    ComplexMatrix expected(9);
    expected(6, 6) = 0.5;  // |20><20|
    expected(8, 8) = 0.5;  // |22><22|
    CHECK(qcorr::max_abs_diff(post.rho().matrix(), expected) <= 1e-12);
}

TEST_CASE("post-measurement on subsystem B") {
    const BipartiteState post = qcorr::post_measurement_state(
        qutrit_pair(), Subsystem::B, ProjectiveBasis::computational(3), 0);

    ComplexMatrix expected(9);
    expected(6, 6) = 1.0;  // only |20><20| assigns B outcome 0
    CHECK(qcorr::max_abs_diff(post.rho().matrix(), expected) <= 1e-12);
}

TEST_CASE("impossible outcomes are rejected") {
    CHECK_THROWS_AS(qcorr::post_measurement_state(qutrit_pair(), Subsystem::A,
                                                  ProjectiveBasis::computational(3), 0),
                    qcorr::ZeroProbabilityOutcome);
    CHECK_THROWS_AS(qcorr::post_measurement_state(qutrit_pair(), Subsystem::A,
                                                  ProjectiveBasis::computational(3), 5),
                    qcorr::IndexOutOfRange);
    CHECK_THROWS_AS(qcorr::post_measurement_state(qutrit_pair(), Subsystem::A,
                                                  ProjectiveBasis::computational(2), 0),
                    qcorr::DimensionMismatch);
}

TEST_CASE("joint distribution of the worked examples") {
    const double alpha = 0.3;
    const JointDistribution qubit_joint = computational_joint(qubit_pair(alpha));
    CHECK(qubit_joint.joint(0, 0) == doctest::Approx(alpha));
    CHECK(qubit_joint.joint(0, 1) == doctest::Approx(0.0));
    CHECK(qubit_joint.joint(1, 0) == doctest::Approx(0.0));
    CHECK(qubit_joint.joint(1, 1) == doctest::Approx(1.0 - alpha));

    const JointDistribution qutrit_joint = computational_joint(qutrit_pair());
    const std::vector<std::vector<double>> expected = {
        {0, 0, 0}, {0, 1.0 / 3.0, 0}, {1.0 / 3.0, 0, 1.0 / 3.0}};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(qutrit_joint.joint(i, j) == doctest::Approx(expected[i][j]));
        }
    }
}

TEST_CASE("product states factorize in any basis") {
    testsupport::Rng rng(333);
    for (int sample = 0; sample < 10; ++sample) {
        const DensityMatrix rho_a = testsupport::random_density(rng, 2);
        const DensityMatrix rho_b = testsupport::random_density(rng, 3);
        const BipartiteState s(
            2, 3, DensityMatrix(testsupport::ref_tensor(rho_a.matrix(), rho_b.matrix())));
        const ProjectiveBasis basis_a = testsupport::random_basis(rng, 2);
        const ProjectiveBasis basis_b = testsupport::random_basis(rng, 3);

        const JointDistribution j =
            qcorr::joint_distribution(s, basis_a, basis_b, MeasurementOrder::AFirst);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t k = 0; k < 3; ++k) {
                CHECK(std::abs(j.joint(i, k) - j.p_a()[i] * j.p_b()[k]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("joint distribution construction validates its table") {
    // A clamped table entry at -1e-13 is fine; -1e-3 is not.
    CHECK_NOTHROW(JointDistribution(2, 2, {0.5, -1e-13, 0.0, 0.5}));
    const JointDistribution clamped(2, 2, {0.5, -1e-13, 0.0, 0.5});
    CHECK(clamped.joint(0, 1) == 0.0);

    CHECK_THROWS_AS(JointDistribution(2, 2, {0.5, -1e-3, 0.0, 0.5}), qcorr::NotADistribution);
    CHECK_THROWS_AS(JointDistribution(2, 2, {0.5, 0.0, 0.0, 0.4}), qcorr::NotADistribution);
    CHECK_THROWS_AS(JointDistribution(2, 2, {0.5, 0.5, 0.0, 0.0}, {0.8, 0.2}, {0.5, 0.5}),
                    qcorr::NotADistribution);
    CHECK_THROWS_AS(JointDistribution(2, 2, {0.5, 0.5, 0.0, 0.0}, {1.0, 0.0}, {0.2, 0.8}),
                    qcorr::NotADistribution);
    CHECK_NOTHROW(JointDistribution(2, 2, {0.5, 0.5, 0.0, 0.0}, {1.0, 0.0}, {0.5, 0.5}));
}

TEST_CASE("conditional tables of the two-qubit mixture are the identity") {
    const JointDistribution j = computational_joint(qubit_pair(0.3));
    const auto b_given_a = qcorr::conditional_table(j, Direction::BGivenA);
    const auto a_given_b = qcorr::conditional_table(j, Direction::AGivenB);
    check_row(b_given_a.rows[0], {1.0, 0.0});
    check_row(b_given_a.rows[1], {0.0, 1.0});
    check_row(a_given_b.rows[0], {1.0, 0.0});
    check_row(a_given_b.rows[1], {0.0, 1.0});
}

TEST_CASE("conditional tables of the two-qutrit mixture") {
    const JointDistribution j = computational_joint(qutrit_pair());

    const auto b_given_a = qcorr::conditional_table(j, Direction::BGivenA);
    CHECK(b_given_a.direction == Direction::BGivenA);
    CHECK_FALSE(b_given_a.rows[0].has_value());
    check_row(b_given_a.rows[1], {0.0, 1.0, 0.0});
    check_row(b_given_a.rows[2], {0.5, 0.0, 0.5});

    const auto a_given_b = qcorr::conditional_table(j, Direction::AGivenB);
    check_row(a_given_b.rows[0], {0.0, 0.0, 1.0});
    check_row(a_given_b.rows[1], {0.0, 1.0, 0.0});
    check_row(a_given_b.rows[2], {0.0, 0.0, 1.0});
}

TEST_CASE("chain consistency on random mixtures") {
    testsupport::Rng rng(777);
    for (int sample = 0; sample < 30; ++sample) {
        const BipartiteState s = testsupport::random_classical_state(rng, 4);
        const JointDistribution j = computational_joint(s);
        const auto cond = qcorr::conditional_table(j, Direction::BGivenA);
        for (std::size_t i = 0; i < j.n_a(); ++i) {
            if (!cond.rows[i]) {
                continue;
            }
            for (std::size_t k = 0; k < j.n_b(); ++k) {
                CHECK(std::abs(j.joint(i, k) - j.p_a()[i] * (*cond.rows[i])[k]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("sequential measurement reproduces the one-shot joint") {
    testsupport::Rng rng(424242);
    for (int sample = 0; sample < 20; ++sample) {
        const BipartiteState s = testsupport::random_classical_state(rng, 3);
        const ProjectiveBasis basis_a = testsupport::random_basis(rng, s.dim_a());
        const ProjectiveBasis basis_b = testsupport::random_basis(rng, s.dim_b());

        const JointDistribution j =
            qcorr::joint_distribution(s, basis_a, basis_b, MeasurementOrder::AFirst);
        for (std::size_t i = 0; i < j.n_a(); ++i) {
            if (j.p_a()[i] <= 1e-12) {
                continue;
            }
            const BipartiteState post = qcorr::post_measurement_state(s, Subsystem::A, basis_a, i);
            const auto [post_a, post_b] = qcorr::outcome_marginals(post, basis_a, basis_b);
            for (std::size_t k = 0; k < j.n_b(); ++k) {
                CHECK(std::abs(j.joint(i, k) - j.p_a()[i] * post_b[k]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("measurement order does not change the joint distribution") {
    testsupport::Rng rng(55001);
    for (int sample = 0; sample < 20; ++sample) {
        const BipartiteState s = testsupport::random_classical_state(rng, 4);
        const ProjectiveBasis basis_a = testsupport::random_basis(rng, s.dim_a());
        const ProjectiveBasis basis_b = testsupport::random_basis(rng, s.dim_b());

        const JointDistribution a_first =
            qcorr::joint_distribution(s, basis_a, basis_b, MeasurementOrder::AFirst);
        const JointDistribution b_first =
            qcorr::joint_distribution(s, basis_a, basis_b, MeasurementOrder::BFirst);
        for (std::size_t i = 0; i < a_first.n_a(); ++i) {
            for (std::size_t k = 0; k < a_first.n_b(); ++k) {
                CHECK(std::abs(a_first.joint(i, k) - b_first.joint(i, k)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("functional dependence of the worked examples") {
    const JointDistribution qubit_joint = computational_joint(qubit_pair(0.3));
    CHECK(qcorr::is_functional(qubit_joint, Direction::BGivenA));
    CHECK(qcorr::is_functional(qubit_joint, Direction::AGivenB));

    const JointDistribution qutrit_joint = computational_joint(qutrit_pair());
    CHECK_FALSE(qcorr::is_functional(qutrit_joint, Direction::BGivenA));
    CHECK(qcorr::is_functional(qutrit_joint, Direction::AGivenB));

    const JointDistribution uniform(2, 2, {0.25, 0.25, 0.25, 0.25});
    CHECK_FALSE(qcorr::is_functional(uniform, Direction::BGivenA));
    CHECK_FALSE(qcorr::is_functional(uniform, Direction::AGivenB));
}
