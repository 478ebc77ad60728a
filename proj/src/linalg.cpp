#include "smatrix/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace smatrix {

namespace {

double one_norm(const Matrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) col += std::fabs(a(i, j));
        best = std::max(best, col);
    }
    return best;
}

struct Factorization {
    bool exact_zero_pivot = false;
    // |smallest pivot| / |largest pivot|, 0 when a pivot vanished.
    double pivot_ratio = 0.0;
    std::vector<double> lu;        // packed L\U, row-major
    std::vector<std::size_t> perm; // row permutation applied to the input
};

Factorization factorize(const Matrix& a) {
    const std::size_t n = a.rows();
    Factorization f;
    f.lu = a.entries();
    f.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

    double piv_min = 0.0, piv_max = 0.0;
    std::vector<double>& lu = f.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        double best_abs = std::fabs(lu[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(lu[i * n + k]);
            if (v > best_abs) { best_abs = v; best = i; }
        }
        if (best_abs == 0.0) {
            f.exact_zero_pivot = true;
            return f;
        }
        if (best != k) {
            std::swap_ranges(lu.begin() + static_cast<long>(k * n),
                             lu.begin() + static_cast<long>((k + 1) * n),
                             lu.begin() + static_cast<long>(best * n));
            std::swap(f.perm[k], f.perm[best]);
        }
        piv_max = (k == 0) ? best_abs : std::max(piv_max, best_abs);
        piv_min = (k == 0) ? best_abs : std::min(piv_min, best_abs);
        const double pivot = lu[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = lu[i * n + k] / pivot;
            lu[i * n + k] = m;
            if (m == 0.0) continue;
            const double* src = &lu[k * n];
            double* dst = &lu[i * n];
            for (std::size_t j = k + 1; j < n; ++j) dst[j] -= m * src[j];
        }
    }
    f.pivot_ratio = (piv_max > 0.0) ? piv_min / piv_max : 0.0;
    return f;
}

// Solves for all columns of the identity at once: one forward pass and one
// backward pass over the packed factor, with row-contiguous inner loops.
Matrix solve_identity(const Factorization& f, std::size_t n) {
    Matrix x(n, n);
    // Apply the permutation to I: row i of PA corresponds to e_{perm[i]}.
    for (std::size_t i = 0; i < n; ++i) x.at(i, f.perm[i]) = 1.0;
    const std::vector<double>& lu = f.lu;
    // Forward: L y = P I  (unit lower triangular).
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            const double m = lu[i * n + k];
            if (m == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                x.at(i, j) -= m * x(k, j);
            }
        }
    }
    // Backward: U z = y.
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) {
            const double m = lu[ii * n + k];
            if (m == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                x.at(ii, j) -= m * x(k, j);
            }
        }
        const double d = lu[ii * n + ii];
        for (std::size_t j = 0; j < n; ++j) x.at(ii, j) /= d;
    }
    return x;
}

}  // namespace

std::optional<InversionResult> try_invert(const Matrix& a, double rcond_floor) {
    if (!a.is_square()) {
        throw DimensionError("inversion requires a square matrix");
    }
    const std::size_t n = a.rows();
    Factorization f = factorize(a);
    if (f.exact_zero_pivot) return std::nullopt;

    InversionResult out;
    out.inverse = solve_identity(f, n);
    const double na = one_norm(a);
    const double ninv = one_norm(out.inverse);
    double rcond = f.pivot_ratio;
    if (na > 0.0 && ninv > 0.0) {
        rcond = std::min(rcond, 1.0 / (na * ninv));
    }
    out.reciprocal_condition_estimate = std::clamp(rcond, 0.0, 1.0);
    if (!(out.reciprocal_condition_estimate >= rcond_floor)) return std::nullopt;
    return out;
}

InversionResult invert(const Matrix& a) {
    if (!a.is_square()) {
        throw DimensionError("inversion requires a square matrix");
    }
    Factorization f = factorize(a);
    if (f.exact_zero_pivot) {
        throw SingularError("matrix is singular to working precision");
    }
    const std::size_t n = a.rows();
    InversionResult out;
    out.inverse = solve_identity(f, n);
    const double na = one_norm(a);
    const double ninv = one_norm(out.inverse);
    double rcond = f.pivot_ratio;
    if (na > 0.0 && ninv > 0.0) {
        rcond = std::min(rcond, 1.0 / (na * ninv));
    }
    out.reciprocal_condition_estimate = std::clamp(rcond, 0.0, 1.0);
    if (out.reciprocal_condition_estimate < kIllConditionedFloor) {
        throw IllConditionedError(
            "matrix is too ill conditioned for a trustworthy inverse");
    }
    return out;
}

double inverse_frobenius_norm(const Matrix& a) {
    return frobenius_norm(invert(a).inverse);
}

}  // namespace smatrix
