#include "smatrix/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>

#include "smatrix/bounds.hpp"
#include "smatrix/constructions.hpp"
#include "smatrix/linalg.hpp"
#include "smatrix/parallel.hpp"
#include "smatrix/rng.hpp"

namespace smatrix {

void OptimizerConfig::validate() const {
    if (n < 2) throw DomainError("order must be at least 2");
    if (starts == 0) throw DomainError("need at least one start");
    if (max_iters == 0) throw DomainError("need at least one iteration");
    if (!(step_init > 0.0)) throw DomainError("initial step must be positive");
    if (!(step_shrink > 0.0 && step_shrink < 1.0)) {
        throw DomainError("step shrink must lie in (0, 1)");
    }
    if (!(singularity_floor > 0.0)) {
        throw DomainError("singularity floor must be positive");
    }
    if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
}

std::pair<double, Matrix> objective_and_gradient(const Matrix& a,
                                                 double singularity_floor) {
    if (!a.is_square()) throw DimensionError("objective needs a square matrix");
    const auto result = try_invert(a, singularity_floor);
    if (!result) {
        throw IllConditionedError("iterate is singular or nearly singular");
    }
    const Matrix& inv = result->inverse;
    const double fn = frobenius_norm(inv);
    const Matrix inv_t = transpose(inv);
    return {fn * fn, -2.0 * (inv_t * (inv * inv_t))};
}

namespace {

struct StartOutcome {
    StartSummary summary;
    Matrix point;
    std::vector<double> trajectory;
};

// Deterministic warm starts ahead of the random fills: the identity, the
// exhaustive binary optimum where it is cheap, and an S-matrix whenever the
// order admits the quadratic-residue construction.
Matrix initial_point(const OptimizerConfig& cfg, std::size_t start) {
    const std::size_t n = cfg.n;
    if (start == 0) return Matrix::identity(n);
    if (start == 1 && n <= 3) {
        return binary_oracle(n).minimizers.front();
    }
    if (start == 2 && n % 4 == 3 && is_prime(n)) {
        return quadratic_residue_smatrix(n).body;
    }
    CounterRng rng(cfg.seed, start);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j) = rng.next_unit();
        }
    }
    return a;
}

// Gradient with box-active outward components zeroed: the first-order
// stationarity measure for the [0,1] box.
double projected_gradient_norm(const Matrix& a, const Matrix& grad) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double g = grad(i, j);
            if (a(i, j) <= 0.0 && g > 0.0) continue;
            if (a(i, j) >= 1.0 && g < 0.0) continue;
            s += g * g;
        }
    }
    return std::sqrt(s);
}

Matrix clip_step(const Matrix& a, const Matrix& grad, double step) {
    Matrix next(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            next.at(i, j) = std::clamp(a(i, j) - step * grad(i, j), 0.0, 1.0);
        }
    }
    return next;
}

StartOutcome run_start(const OptimizerConfig& cfg, std::size_t start) {
    StartOutcome out;
    out.summary.start_index = start;
    Matrix a = initial_point(cfg, start);

    double value;
    Matrix grad;
    try {
        std::tie(value, grad) = objective_and_gradient(a, cfg.singularity_floor);
    } catch (const Error&) {
        out.summary.failed = true;
        out.point = std::move(a);
        return out;
    }
    if (cfg.record_trajectory) out.trajectory.push_back(value);

    double step = cfg.step_init;
    std::size_t iters = 0;
    for (; iters < cfg.max_iters; ++iters) {
        if (projected_gradient_norm(a, grad) < cfg.tolerance) {
            out.summary.converged = true;
            break;
        }
        bool accepted = false;
        for (int shrink = 0; shrink < 60; ++shrink) {
            const Matrix candidate = clip_step(a, grad, step);
            try {
                auto [cand_value, cand_grad] =
                    objective_and_gradient(candidate, cfg.singularity_floor);
                if (cand_value <= value) {
                    a = candidate;
                    value = cand_value;
                    grad = std::move(cand_grad);
                    accepted = true;
                    break;
                }
            } catch (const Error&) {
                // singular or ill-conditioned candidate: treat as rejection
            }
            step *= cfg.step_shrink;
        }
        if (!accepted) break;  // stuck: step underflowed without progress
        if (cfg.record_trajectory) out.trajectory.push_back(value);
        step *= 1.3;  // regrow after acceptance so steps adapt both ways
    }
    out.summary.iterations = iters;
    out.summary.value = std::sqrt(value);
    out.point = std::move(a);
    return out;
}

}  // namespace

OptimizerRun projected_gradient_minimize(const OptimizerConfig& config) {
    config.validate();
    std::vector<StartOutcome> outcomes(config.starts);
    std::mutex guard;
    parallel_for(config.starts, [&](std::size_t s) {
        StartOutcome outcome = run_start(config, s);
        std::lock_guard<std::mutex> lock(guard);
        outcomes[s] = std::move(outcome);
    });

    OptimizerRun run;
    run.bound = sloane_coefficient(config.n);
    std::size_t best = config.starts;  // sentinel: no usable start yet
    for (std::size_t s = 0; s < config.starts; ++s) {
        run.starts.push_back(outcomes[s].summary);
        if (outcomes[s].summary.failed) continue;
        if (best == config.starts ||
            outcomes[s].summary.value < outcomes[best].summary.value) {
            best = s;
        }
    }
    if (best == config.starts) {
        throw InternalError("every start failed to evaluate");
    }
    run.best_matrix = outcomes[best].point;
    run.best_value = outcomes[best].summary.value;
    run.gap = run.best_value - run.bound;
    run.iterations_used = outcomes[best].summary.iterations;
    run.converged = outcomes[best].summary.converged;
    run.start_index = best;
    run.trajectory = std::move(outcomes[best].trajectory);
    return run;
}

namespace {

// Exact ||A^-1||_F^2 for an integer matrix as a rational adj^2-sum over
// det^2, so oracle comparisons are free of float ties.
struct ExactInverseNorm {
    __int128 num = 0;  // sum of squared adjugate entries
    __int128 den = 0;  // det^2
};

long long int_det(const std::vector<int>& m, std::size_t n) {
    // Bareiss would be overkill at n <= 4; cofactor expansion is exact and
    // instant. Values stay far inside int64.
    if (n == 1) return m[0];
    if (n == 2) {
        return static_cast<long long>(m[0]) * m[3] -
               static_cast<long long>(m[1]) * m[2];
    }
    long long det = 0;
    std::vector<int> minor((n - 1) * (n - 1));
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c] != 0) {
            std::size_t w = 0;
            for (std::size_t i = 1; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != c) minor[w++] = m[i * n + j];
                }
            }
            const long long cof = int_det(minor, n - 1);
            det += (c % 2 == 0 ? 1LL : -1LL) * m[c] * cof;
        }
    }
    return det;
}

ExactInverseNorm exact_inverse_norm(const std::vector<int>& m, std::size_t n,
                                    long long det) {
    ExactInverseNorm out;
    out.den = static_cast<__int128>(det) * det;
    if (n == 1) {
        out.num = 1;
        return out;
    }
    std::vector<int> minor((n - 1) * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t w = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c != j) minor[w++] = m[r * n + c];
                }
            }
            const long long cof = int_det(minor, n - 1);
            out.num += static_cast<__int128>(cof) * cof;
        }
    }
    return out;
}

// a/b < c/d for positive denominators, cross-multiplied exactly.
bool rational_less(__int128 a, __int128 b, __int128 c, __int128 d) {
    return a * d < c * b;
}

}  // namespace

OracleResult binary_oracle(std::size_t n) {
    if (n < 1) throw DomainError("order must be at least 1");
    if (n > 4) throw SizeCapError("exhaustive enumeration capped at order 4");
    const std::size_t cells = n * n;
    const std::uint64_t total = 1ULL << cells;

    OracleResult result;
    ExactInverseNorm best;
    bool have_best = false;
    std::vector<int> m(cells);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t k = 0; k < cells; ++k) {
            m[k] = static_cast<int>((mask >> k) & 1ULL);
        }
        const long long det = int_det(m, n);
        if (det == 0) continue;
        const ExactInverseNorm norm = exact_inverse_norm(m, n, det);
        const bool better =
            !have_best || rational_less(norm.num, norm.den, best.num, best.den);
        if (better) {
            best = norm;
            have_best = true;
            result.minimizers.clear();
        }
        if (better || (norm.num * best.den == best.num * norm.den)) {
            Matrix a(n, n);
            for (std::size_t k = 0; k < cells; ++k) {
                a.at(k / n, k % n) = static_cast<double>(m[k]);
            }
            result.minimizers.push_back(std::move(a));
        }
    }
    if (!have_best) throw InternalError("no invertible binary matrix found");
    result.min_value = std::sqrt(static_cast<double>(best.num) /
                                 static_cast<double>(best.den));
    return result;
}

}  // namespace smatrix
