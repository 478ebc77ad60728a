// End-to-end acceptance gate. Each numbered check prints exactly one
// PASS/FAIL line; the process exit code is the number of failures, so a
// zero exit means the whole gate is green.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <numeric>
#include <string>
#include <vector>

#include "smatrix/audit.hpp"
#include "smatrix/bounds.hpp"
#include "smatrix/constructions.hpp"
#include "smatrix/linalg.hpp"
#include "smatrix/numdiff.hpp"
#include "smatrix/optimizer.hpp"
#include "smatrix/rng.hpp"

using namespace smatrix;

namespace {

// Primes q = 3 (mod 4) up to 199: the residue-construction orders.
constexpr std::array<std::size_t, 24> kResiduePrimes = {
    3,   7,   11,  19,  23,  31,  43,  47,  59,  67,  71,  79,
    83,  103, 107, 127, 131, 139, 151, 163, 167, 179, 191, 199};

Matrix random_box(std::size_t n, CounterRng& rng) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j) = rng.next_unit();
        }
    }
    return a;
}

// Uniform [0,1) entries, resampled until comfortably invertible so the
// identity residuals below are dominated by the identities, not by the
// conditioning of the sample.
Matrix random_box_invertible(std::size_t n, std::uint64_t stream) {
    for (std::uint64_t s = stream;; s += 1000003) {
        CounterRng rng(77, s);
        Matrix a = random_box(n, rng);
        if (try_invert(a, 1e-5)) return a;
    }
}

bool close_rel(double got, double want, double rel) {
    return std::fabs(got - want) <= rel * std::max(1.0, std::fabs(want));
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

void report(int number, bool ok, const std::string& what, double secs) {
    std::printf("%s  [%d] %s (%.2f s)\n", ok ? "PASS" : "FAIL", number,
                what.c_str(), secs);
    std::fflush(stdout);
}

// [1] Every residue-constructible 0/1 design of order q <= 199 sits exactly
// on the 2q/(q+1) floor.
bool check_smatrix_equality() {
    for (std::size_t q : kResiduePrimes) {
        const Matrix s = quadratic_residue_smatrix(q).body;
        if (!is_smatrix(s)) return false;
        const double product = inverse_frobenius_norm(s) * max_norm(s);
        if (std::fabs(product - sloane_coefficient(q)) > 1e-9) return false;
    }
    return true;
}

// [2] Every constructed orthogonal +-1 design has ||H^-1||_F * ||H||_max = 1.
bool check_hadamard_equality() {
    for (unsigned k = 1; k <= 10; ++k) {  // orders 2, 4, ..., 1024
        const Matrix h = sylvester_hadamard(k).body;
        if (!is_hadamard(h)) return false;
        const double product = inverse_frobenius_norm(h) * max_norm(h);
        if (std::fabs(product - 1.0) > 1e-9) return false;
    }
    for (std::size_t q : kResiduePrimes) {  // orders q+1 <= 200
        const Matrix h = paley_hadamard(q).body;
        if (!is_hadamard(h)) return false;
        const double product = inverse_frobenius_norm(h) * max_norm(h);
        if (std::fabs(product - 1.0) > 1e-9) return false;
    }
    return true;
}

// [3] The bordered-pair identities and the unconditional structure-audit
// residuals, across >= 1000 random invertible non-negative matrices.
bool check_identity_suite() {
    const std::array<std::size_t, 5> orders = {4, 6, 8, 12, 20};
    for (std::size_t n : orders) {
        const double nn = static_cast<double>(n);
        const double inner_target = nn * (nn * nn - 2.0) / (nn - 2.0);
        for (std::uint64_t trial = 0; trial < 200; ++trial) {
            const Matrix a = random_box_invertible(n, 1000 * n + trial);
            const DrnovsekTriple triple = build_fgh(a);
            const double inner = frobenius_inner(triple.F, triple.G);
            if (!close_rel(inner, inner_target, 1e-8)) return false;

            const double nf = frobenius_norm(triple.F);
            const double inv = inverse_frobenius_norm(a);
            const double nf_target =
                2.0 * nn + nn * nn * nn / (4.0 * (nn - 2.0)) * inv * inv;
            if (!close_rel(nf * nf, nf_target, 1e-8)) return false;

            const PropAudit audit = audit_prop(a);
            if (audit.prop1_residual > 1e-7) return false;
            if (audit.prop3_residual > 1e-7) return false;
        }
    }
    return true;
}

// [4] The quadratic functional stays under its ceiling everywhere on the box,
// exhaustively over binary order 4, and touches it exactly on the matrices
// with every row summing to n/2.
bool check_h_ceiling() {
    const double ceiling = h_upper(4);
    for (unsigned mask = 0; mask < (1u << 16); ++mask) {
        Matrix b(4, 4);
        bool rows_half = true;
        for (std::size_t i = 0; i < 4; ++i) {
            int row_sum = 0;
            for (std::size_t j = 0; j < 4; ++j) {
                const int bit = (mask >> (4 * i + j)) & 1;
                b.at(i, j) = static_cast<double>(bit);
                row_sum += bit;
            }
            rows_half = rows_half && row_sum == 2;
        }
        const double h = h_value(b);
        if (h > ceiling + 1e-9) return false;
        const bool at_ceiling = std::fabs(h - ceiling) <= 1e-9;
        if (at_ceiling != rows_half) return false;
    }
    for (std::size_t n : {4, 6}) {
        const double cap = h_upper(n);
        CounterRng rng(4242, n);
        for (int trial = 0; trial < 50000; ++trial) {
            if (h_value(random_box(n, rng)) > cap + 1e-9) return false;
        }
    }
    return true;
}

// [5] The scalar chain contradicts the assumed bound for every even order in
// [1000, 100000], and the quoted rational constants replay exactly.
bool check_scalar_chain() {
    // Exact integer forms of the three quoted rationals:
    // 50/51 * (124/500)^2 == 1922/31875,
    // 50/51 * 124/500 - 1/25500 == 6199/25500,
    // 50/51 * 126/500 + 1/25500 == 6301/25500.
    if (50LL * 124 * 124 * 31875 != 1922LL * 51 * 500 * 500) return false;
    // 50/51 * 124/500 = 6200/25500; subtracting 1/25500 leaves 6199/25500.
    if (50LL * 124 * 25500 != 6200LL * 51 * 500) return false;
    // 50/51 * 126/500 = 6300/25500; adding 1/25500 gives 6301/25500.
    if (50LL * 126 * 25500 != 6300LL * 51 * 500) return false;

    const auto rows = contradiction_scan(1000, 100000);
    if (rows.size() != 49501) return false;
    for (const ContradictionLedger& row : rows) {
        if (!row.contradiction || !row.ratio_in_range || !row.alpha_gt_39_100) {
            return false;
        }
        if (row.mean_sq_lower != 1922.0 / 31875.0) return false;
        if (row.mean_lo != 6199.0 / 25500.0) return false;
        if (row.mean_hi != 6301.0 / 25500.0) return false;
    }
    // Spot values at the smallest order.
    const ContradictionLedger& first = rows.front();
    if (first.n != 1000) return false;
    if (std::fabs(first.l1_upper - std::sqrt(1000.0 / 7600.0)) > 1e-12) {
        return false;
    }
    if (!(first.l1_upper < 0.37)) return false;
    if (!(first.alpha_lower > 0.39)) return false;
    return true;
}

// [6] Multi-start descent recovers the known minima on small orders and
// never dips below the conjectured floor anywhere in n = 2..16.
bool check_optimizer_recovery() {
    auto run_for = [](std::size_t n, std::size_t starts, std::size_t iters) {
        OptimizerConfig cfg;
        cfg.n = n;
        cfg.starts = starts;
        cfg.max_iters = iters;
        cfg.seed = 20240915;
        return projected_gradient_minimize(cfg);
    };
    auto floor_ok = [](const OptimizerRun& run, std::size_t n) {
        const double floor = 2.0 * static_cast<double>(n) /
                             (static_cast<double>(n) + 1.0);
        if (run.best_value < floor - 1e-6) return false;
        for (const StartSummary& s : run.starts) {
            if (!s.failed && s.value < floor - 1e-6) return false;
        }
        return true;
    };

    const OptimizerRun n2 = run_for(2, 16, 2000);
    if (std::fabs(n2.best_value - std::sqrt(2.0)) > 1e-3) return false;
    if (!floor_ok(n2, 2)) return false;

    const OptimizerRun n3 = run_for(3, 32, 2000);
    if (std::fabs(n3.best_value - 1.5) > 1e-3) return false;
    if (!floor_ok(n3, 3)) return false;

    const OptimizerRun n7 = run_for(7, 64, 2000);
    if (std::fabs(n7.best_value - 1.75) > 1e-3) return false;
    if (!floor_ok(n7, 7)) return false;

    for (std::size_t n = 2; n <= 16; ++n) {
        if (n == 2 || n == 3 || n == 7) continue;
        if (!floor_ok(run_for(n, 8, 1200), n)) return false;
    }
    return true;
}

// [7] The exhaustive binary search returns the exact minimizer sets.
bool check_oracle_sets() {
    auto same_matrix = [](const Matrix& a, const Matrix& b) {
        return a.rows() == b.rows() && a.cols() == b.cols() &&
               max_abs_diff(a, b) == 0.0;
    };
    auto sets_equal = [&](const std::vector<Matrix>& got,
                          std::vector<Matrix> want) {
        if (got.size() != want.size()) return false;
        for (const Matrix& g : got) {
            bool found = false;
            for (std::size_t k = 0; k < want.size(); ++k) {
                if (same_matrix(g, want[k])) {
                    want.erase(want.begin() + static_cast<long>(k));
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return want.empty();
    };

    std::vector<Matrix> perms2;
    perms2.push_back(Matrix{{1.0, 0.0}, {0.0, 1.0}});
    perms2.push_back(Matrix{{0.0, 1.0}, {1.0, 0.0}});
    const OracleResult r2 = binary_oracle(2);
    if (std::fabs(r2.min_value - std::sqrt(2.0)) > 1e-12) return false;
    if (!sets_equal(r2.minimizers, perms2)) return false;

    // Row/column permutations of J - I are exactly {J - P : P permutation}.
    std::vector<Matrix> complements;
    std::array<std::size_t, 3> perm = {0, 1, 2};
    do {
        Matrix m = Matrix::filled(3, 3, 1.0);
        for (std::size_t i = 0; i < 3; ++i) m.at(i, perm[i]) = 0.0;
        complements.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const OracleResult r3 = binary_oracle(3);
    if (std::fabs(r3.min_value - 1.5) > 1e-12) return false;
    if (!sets_equal(r3.minimizers, complements)) return false;
    return true;
}

// [8] The analytic gradient of ||A^-1||_F^2 agrees with central differences
// on well-conditioned samples for every order 2..10.
bool check_gradient() {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            CounterRng rng(88, 1000 * n + trial);
            Matrix a = Matrix::identity(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    a.at(i, j) += 0.3 * rng.next_unit();
                }
            }
            const auto [value, grad] = objective_and_gradient(a);
            (void)value;
            const Matrix fd = finite_diff_gradient(
                [](const Matrix& m) { return objective_and_gradient(m).first; },
                a, 1e-5);
            const double scale = std::max(1.0, max_norm(grad));
            if (max_abs_diff(grad, fd) / scale > 1e-6) return false;
        }
    }
    return true;
}

int run_check(int number, const std::string& what, bool (*fn)()) {
    Timer timer;
    bool ok = false;
    std::string note = what;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        ok = false;
        note += std::string(" -- threw: ") + e.what();
    }
    report(number, ok, note, timer.seconds());
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures += run_check(1, "residue 0/1 designs meet the 2n/(n+1) floor exactly",
                          check_smatrix_equality);
    failures += run_check(2, "orthogonal +-1 designs meet the max-norm floor",
                          check_hadamard_equality);
    failures += run_check(3, "bordered-pair identities on 1000 random matrices",
                          check_identity_suite);
    failures += run_check(4, "quadratic functional ceiling, exhaustive + sampled",
                          check_h_ceiling);
    failures += run_check(5, "scalar chain contradiction over even orders to 100000",
                          check_scalar_chain);
    failures += run_check(6, "multi-start descent recovers known minima, floor holds",
                          check_optimizer_recovery);
    failures += run_check(7, "exhaustive binary minimizer sets match exactly",
                          check_oracle_sets);
    failures += run_check(8, "analytic gradient matches central differences",
                          check_gradient);
    return failures;
}
