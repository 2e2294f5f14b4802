#pragma once

#include <cstddef>

namespace qcorr {

// Absolute tolerance for all structural validation: hermiticity, unit trace,
// positive semidefiniteness, basis orthonormality and distribution sums.
inline constexpr double kValidationTol = 1e-9;

// Probabilities and eigenvalues at or below this floor are treated as zero
// (skipped in entropy sums, marked UNDEFINED as conditioning outcomes).
inline constexpr double kProbFloor = 1e-12;

// Largest supported dimension per subsystem.
inline constexpr std::size_t kMaxSubsystemDim = 16;

}  // namespace qcorr
