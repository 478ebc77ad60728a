#pragma once

#include <optional>

#include "smatrix/matrix.hpp"

namespace smatrix {

struct InversionResult {
    Matrix inverse;
    // Cheap estimate in [0, 1]: min over the LU diagonal ratio and the
    // 1-norm based 1 / (||A||_1 ||A^-1||_1).
    double reciprocal_condition_estimate = 0.0;
};

// Anything with an estimated reciprocal condition below this throws
// IllConditionedError from invert().
inline constexpr double kIllConditionedFloor = 1e-14;

// LU factorization with partial pivoting.
// Throws DimensionError (non-square), SingularError (exact zero pivot),
// IllConditionedError (estimate below kIllConditionedFloor).
InversionResult invert(const Matrix& a);

// Same computation, but near-singularity is reported as nullopt instead of
// an exception. rcond_floor is the rejection threshold.
std::optional<InversionResult> try_invert(const Matrix& a, double rcond_floor);

// Convenience: ||A^-1||_F via invert().
double inverse_frobenius_norm(const Matrix& a);

}  // namespace smatrix
