#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "smatrix/matrix.hpp"

namespace smatrix {

struct OptimizerConfig {
    std::size_t n = 4;
    std::size_t starts = 32;
    std::size_t max_iters = 2000;
    double step_init = 0.05;
    double step_shrink = 0.5;
    double singularity_floor = 1e-10;  // rcond threshold for step rejection
    std::uint64_t seed = 1;
    double tolerance = 1e-7;           // projected-gradient norm
    bool record_trajectory = false;

    void validate() const;  // DomainError on out-of-range fields
};

struct StartSummary {
    std::size_t start_index = 0;
    double value = 0.0;       // ||A^-1||_F at the start's final point
    std::size_t iterations = 0;
    bool converged = false;
    bool failed = false;      // could not even evaluate the initial point
};

struct OptimizerRun {
    Matrix best_matrix;
    double best_value = 0.0;  // ||A^-1||_F
    double bound = 0.0;       // 2n/(n+1)
    double gap = 0.0;         // best_value - bound; negative = alarm
    std::size_t iterations_used = 0;
    bool converged = false;
    std::size_t start_index = 0;
    std::vector<StartSummary> starts;
    std::vector<double> trajectory;  // objective per accepted step, best start
};

// (||A^-1||_F^2, -2 A^-T A^-1 A^-T). IllConditionedError below the floor.
std::pair<double, Matrix> objective_and_gradient(
    const Matrix& a, double singularity_floor = 1e-10);

// Multi-start projected gradient descent over the box [0,1]^{n x n}.
// Starts are deterministic: identity, the exhaustive binary optimum for
// n <= 3, an S-matrix when one is constructible, then counter-seeded random
// fills. Runs in parallel up to thread_cap(); the result is a pure reduction
// by value with ties to the lowest start index, so output is reproducible.
OptimizerRun projected_gradient_minimize(const OptimizerConfig& config);

// Exhaustive minimum of ||A^-1||_F over invertible binary n x n matrices,
// with the complete minimizer set. Exact rational arithmetic (integer
// adjugate over integer determinant). n <= 4 (SizeCapError).
struct OracleResult {
    double min_value = 0.0;
    std::vector<Matrix> minimizers;
};

OracleResult binary_oracle(std::size_t n);

}  // namespace smatrix
