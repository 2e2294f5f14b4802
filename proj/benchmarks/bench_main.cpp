#include <benchmark/benchmark.h>

#include <random>

#include "qcorr/eigen.hpp"
#include "qcorr/info_measures.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace {

using qcorr::Complex;
using qcorr::ComplexMatrix;

ComplexMatrix random_hermitian(std::mt19937 &rng, std::size_t dim) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Complex(dist(rng), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex z(dist(rng), dist(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

qcorr::BipartiteState qutrit_pair() {
    const double third = 1.0 / 3.0;
    return qcorr::make_classical_mixture(3, 3, {{third, 1, 1}, {third, 2, 0}, {third, 2, 2}});
}

void BM_HermitianEigen(benchmark::State &state) {
    std::mt19937 rng(99);
    const ComplexMatrix m = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcorr::hermitian_eigen(m));
    }
}
BENCHMARK(BM_HermitianEigen)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_TensorProduct(benchmark::State &state) {
    std::mt19937 rng(7);
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = random_hermitian(rng, dim);
    const ComplexMatrix b = random_hermitian(rng, dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcorr::tensor_product(a, b));
    }
}
BENCHMARK(BM_TensorProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_PartialTrace(benchmark::State &state) {
    const qcorr::BipartiteState s = qutrit_pair();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcorr::partial_trace(s, qcorr::Subsystem::A));
    }
}
BENCHMARK(BM_PartialTrace);

void BM_JointDistribution(benchmark::State &state) {
    const qcorr::BipartiteState s = qutrit_pair();
    const auto basis_a = qcorr::ProjectiveBasis::computational(3);
    const auto basis_b = qcorr::ProjectiveBasis::computational(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qcorr::joint_distribution(s, basis_a, basis_b, qcorr::MeasurementOrder::AFirst));
    }
}
BENCHMARK(BM_JointDistribution);

void BM_BuildReport(benchmark::State &state) {
    const qcorr::BipartiteState s = qutrit_pair();
    const auto basis_a = qcorr::ProjectiveBasis::computational(3);
    const auto basis_b = qcorr::ProjectiveBasis::computational(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qcorr::build_report(s, basis_a, basis_b));
    }
}
BENCHMARK(BM_BuildReport);

}  // namespace

int main(int argc, char **argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
