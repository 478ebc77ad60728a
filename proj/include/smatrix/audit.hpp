#pragma once

#include <cstdint>
#include <vector>

#include "smatrix/matrix.hpp"

namespace smatrix {

inline constexpr double kAuditTolerance = 1e-9;

// Conditional-structure audit over an even-order non-negative matrix B.
// The residuals of properties (1) and (3) are algebraic identities: they
// vanish (to rounding) whether or not the hypothesis holds. Property (2)
// and 0 <= c < 1 are guaranteed only under the hypothesis, so they are
// reported as a margin plus a flag.
struct PropAudit {
    std::size_t n = 0;
    double c = 0.0;           // h_upper(n) - h(B)
    Vector r;                 // B1 - (n-1)^2/(2(n-2)) 1
    double inv_frobenius = 0.0;
    bool hypothesis_met = false;  // ||B^-1||_F <= 2n/(n+1) and ||B||_max <= 1
    double prop1_residual = 0.0;
    double prop2_margin = 0.0;    // rhs - ||H(B)||_F^2, >= 0 under hypothesis
    double prop3_residual = 0.0;  // max-norm defect of the product identity
};

// Requires B square of even order n > 2, non-negative, invertible.
PropAudit audit_prop(const Matrix& b, double tolerance = kAuditTolerance);

struct IndexEntry {
    std::size_t index = 0;        // 1-based row index
    double score = 0.0;
    double h_column_sq = 0.0;     // sum_j H(B)_{j,i}^2
    double l1_round_gap = 0.0;    // sum_j |B_ij - C_ij|
    double r_i = 0.0;
    long long row_sum_rounded = 0;  // [C 1]_i
    bool bounds_ok = false;         // the four per-index inequalities
};

// The t+1 lowest-score rows with their per-index quantities. When the
// total score is < 1 every selected row must satisfy the per-index bounds;
// the flags record whether they actually do.
struct IndexCertificate {
    std::size_t n = 0;
    int t = 0;
    bool hypothesis_met = false;
    double score_sum = 0.0;
    std::vector<IndexEntry> entries;  // ascending score, ties by index
    bool all_bounds_ok = false;
};

// Requires t >= 3, even n >= 2t, B non-negative with ||B||_max <= 1,
// invertible. DomainError otherwise.
IndexCertificate find_good_indices(const Matrix& b, int t,
                                   double tolerance = kAuditTolerance);

// Projection-gap thresholds, as functions of (n, t).
double lemma_gap_threshold_offdiag(std::size_t n, int t);
double lemma_gap_threshold_diag(std::size_t n, int t);

// Rounded matrix C, the (t+1) x n row restriction C_hat, and the signed
// H-column y, with every check the rounding argument makes about them.
struct RoundedPair {
    std::size_t n = 0;
    int t = 0;
    bool hypothesis_met = false;
    Matrix C;                          // round(B), ties 0.5 -> 1
    Matrix C_hat;                      // rows of C at the certificate indices
    std::vector<std::size_t> indices;  // 1-based, from find_good_indices
    Vector y;                          // (-1)^(n/2+1) * column i_{t+1} of H(B)
    bool gram_ok = false;              // C_hat C_hat^T == ceil(n/4) I + floor(n/4) 11^T
    long long gram_diag_defect = 0;    // max |diagonal deviation|, exact ints
    long long gram_offdiag_defect = 0;
    double y_norm_sq = 0.0;
    bool y_norm_ok = false;            // ||y||^2 <= 1/(4(n-t))
    Vector projection_gaps;            // |[C_hat y]_j - 1/4| (j<=t), |[C_hat y]_{t+1}|
    double offdiag_threshold = 0.0;
    double diag_threshold = 0.0;
    bool gaps_ok = false;
    // Intermediate constants of the rounding argument, replayed for the log.
    double cc_offdiag_estimate = 0.0;  // 5/(4(n-t)) + sqrt(n/(n-t))/2
    bool cc_offdiag_below_7_10 = false;
    double round_dist_bound = 0.0;     // 1/4 + 1/(8n) + 1/(8(n-2))
    bool round_dist_below_3_10 = false;
};

// Requires t >= 4, even n >= 4t, B non-negative with ||B||_max <= 1,
// invertible.
RoundedPair extract_rounded_pair(const Matrix& b, int t,
                                 double tolerance = kAuditTolerance);

// One row of the scalar contradiction chain for a single even n >= 1000.
// alpha_lower and l1_upper are evaluated with outward rounding (one ulp per
// operation) so the recorded contradiction is robust to float noise; the
// quoted rational constants are additionally verified in exact integer
// arithmetic.
struct ContradictionLedger {
    long long n = 0;
    int t = 50;
    double ratio = 0.0;          // (n/4) / ceil(n/4)
    bool ratio_in_range = false; // in [1 - 1/501, 1], checked exactly
    double mean_lo = 0.0;        // 6199/25500
    double mean_hi = 0.0;        // 6301/25500
    double mean_sq_lower = 0.0;  // 1922/31875
    double alpha_lower = 0.0;    // quadratic-root chain value, rounded down
    bool alpha_gt_39_100 = false;
    double l1_upper = 0.0;       // sqrt(n/(8(n-50))), rounded up
    bool contradiction = false;  // alpha_lower - 1/500 > l1_upper
};

// Replays the chain for every even n in [n_min, n_max]. Requires
// n_min >= 1000, n_min <= n_max, both even.
std::vector<ContradictionLedger> contradiction_scan(long long n_min,
                                                    long long n_max);

}  // namespace smatrix
