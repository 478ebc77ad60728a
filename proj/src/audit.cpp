#include "smatrix/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "smatrix/bounds.hpp"
#include "smatrix/linalg.hpp"

namespace smatrix {

namespace {

void require_box(const Matrix& b) {
    for (double v : b.entries()) {
        if (v < 0.0) throw DomainError("matrix has a negative entry");
        if (v > 1.0) throw DomainError("matrix has an entry above 1");
    }
}

Vector shifted_row_sums(const Matrix& b) {
    const std::size_t n = b.rows();
    const double shift = (static_cast<double>(n) - 1.0) *
                         (static_cast<double>(n) - 1.0) /
                         (2.0 * (static_cast<double>(n) - 2.0));
    Vector r = row_sums(b);
    for (std::size_t i = 0; i < n; ++i) r.at(i) -= shift;
    return r;
}

double round_half_up(double v) { return std::floor(v + 0.5); }

Matrix round_matrix(const Matrix& b) {
    Matrix c(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            c.at(i, j) = round_half_up(b(i, j));
        }
    }
    return c;
}

// Directed rounding helpers: every arithmetic step of the scalar chain is
// padded one ulp toward the safe side, so the recorded inequality survives
// any intermediate float rounding.
double down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Exact rational arithmetic for replaying the quoted constants. Everything
// involved is tiny, so int64 with gcd reduction is ample.
struct Rat {
    long long num = 0;
    long long den = 1;
};

Rat rat(long long n, long long d) {
    if (d == 0) throw InternalError("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return {g ? n / g : n, g ? d / g : d};
}

Rat operator+(Rat a, Rat b) { return rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(Rat a, Rat b) { return rat(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat operator*(Rat a, Rat b) { return rat(a.num * b.num, a.den * b.den); }
bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }

// The three rational constants of the scalar chain, rebuilt from their
// defining expressions and compared exactly against the quoted values.
void replay_quoted_rationals() {
    const Rat quarter = rat(1, 4);
    const Rat five_hundredth = rat(1, 500);
    const Rat lo = quarter - five_hundredth;
    const Rat hi = quarter + five_hundredth;
    const Rat w = rat(50, 51);
    const Rat leak = rat(1, 51) * five_hundredth;
    if (!(w * lo * lo == rat(1922, 31875))) {
        throw InternalError("mean-square constant mismatch");
    }
    if (!(w * lo - leak == rat(6199, 25500))) {
        throw InternalError("mean lower constant mismatch");
    }
    if (!(w * hi + leak == rat(6301, 25500))) {
        throw InternalError("mean upper constant mismatch");
    }
}

double h_column_squares(const Matrix& h, std::size_t col) {
    double s = 0.0;
    for (std::size_t j = 0; j < h.rows(); ++j) s += h(j, col) * h(j, col);
    return s;
}

}  // namespace

PropAudit audit_prop(const Matrix& b, double tolerance) {
    if (!b.is_square()) throw DimensionError("audit needs a square matrix");
    const std::size_t n = b.rows();
    if (n <= 2 || n % 2 != 0) {
        throw DomainError("audit needs an even order greater than 2");
    }
    for (double v : b.entries()) {
        if (v < 0.0) throw DomainError("matrix has a negative entry");
    }
    const double nn = static_cast<double>(n);
    const DrnovsekTriple triple = build_fgh(b);

    PropAudit out;
    out.n = n;
    out.c = h_upper(n) - triple.h_value;
    out.r = shifted_row_sums(b);
    out.inv_frobenius = inverse_frobenius_norm(b);
    out.hypothesis_met = out.inv_frobenius <= sloane_coefficient(n) + tolerance &&
                         max_norm(b) <= 1.0 + tolerance;

    double gap_sum = 0.0;  // sum of B_ij (1 - B_ij)
    for (double v : b.entries()) gap_sum += v * (1.0 - v);

    out.prop1_residual = std::fabs(
        norm2_squared(out.r) +
        (nn - 1.0) * (nn - 1.0) / (nn - 2.0) * gap_sum -
        out.c * nn / 4.0 - nn / (4.0 * (nn - 2.0) * (nn - 2.0)));

    const double hn = frobenius_norm(triple.H);
    out.prop2_margin =
        nn * (nn - 2.0) / (4.0 * (nn - 1.0) * (nn - 1.0)) *
            (nn * (nn * nn - 2.0 * nn - 2.0) /
                 ((nn - 2.0) * (nn + 1.0) * (nn + 1.0)) -
             out.c) -
        hn * hn;

    const Vector ones(std::vector<double>(n, 1.0));
    Matrix expected = (nn * nn / (4.0 * (nn - 1.0))) * Matrix::identity(n) +
                      ((nn - 1.0) * (nn - 1.0) * (nn - 1.0) /
                       (4.0 * nn * (nn - 2.0))) *
                          Matrix::filled(n, n, 1.0) +
                      ((nn - 1.0) / (2.0 * nn)) *
                          (outer(out.r, ones) + outer(ones, out.r)) +
                      ((nn - 2.0) / (nn * (nn - 1.0))) * outer(out.r, out.r);
    out.prop3_residual =
        max_abs_diff(b * (transpose(b) + triple.H), expected);
    return out;
}

IndexCertificate find_good_indices(const Matrix& b, int t, double tolerance) {
    if (!b.is_square()) throw DimensionError("selection needs a square matrix");
    const std::size_t n = b.rows();
    if (t < 3) throw DomainError("needs t >= 3");
    if (n % 2 != 0 || n < 2 * static_cast<std::size_t>(t)) {
        throw DomainError("needs even order at least 2t");
    }
    require_box(b);
    const double nn = static_cast<double>(n);
    const double td = static_cast<double>(t);
    const DrnovsekTriple triple = build_fgh(b);
    const Vector r = shifted_row_sums(b);
    const Matrix c = round_matrix(b);
    const double coeff = 4.0 * (nn - 1.0) * (nn - 1.0) / (nn * (nn - 2.0));

    IndexCertificate cert;
    cert.n = n;
    cert.t = t;
    cert.hypothesis_met =
        inverse_frobenius_norm(b) <= sloane_coefficient(n) + tolerance;

    std::vector<std::pair<double, std::size_t>> scored(n);
    for (std::size_t i = 0; i < n; ++i) {
        double gap_row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            gap_row += b(i, j) * (1.0 - b(i, j));
        }
        const double score = 4.0 / nn * r[i] * r[i] + coeff * gap_row +
                             coeff * h_column_squares(triple.H, i);
        scored[i] = {score, i};
        cert.score_sum += score;
    }
    std::sort(scored.begin(), scored.end());

    cert.all_bounds_ok = true;
    for (int k = 0; k <= t; ++k) {
        const std::size_t i = scored[static_cast<std::size_t>(k)].second;
        IndexEntry e;
        e.index = i + 1;
        e.score = scored[static_cast<std::size_t>(k)].first;
        e.h_column_sq = h_column_squares(triple.H, i);
        for (std::size_t j = 0; j < n; ++j) {
            e.l1_round_gap += std::fabs(b(i, j) - c(i, j));
        }
        e.r_i = r[i];
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) row_sum += c(i, j);
        e.row_sum_rounded = std::llround(row_sum);
        e.bounds_ok =
            e.h_column_sq < 1.0 / (4.0 * (nn - td)) + tolerance &&
            e.l1_round_gap <= 1.0 / (4.0 * (nn - td) - 2.0) + tolerance &&
            e.r_i <= 1.0 / (2.0 * (nn - 2.0)) +
                         1.0 / (4.0 * (nn - td) - 2.0) + tolerance &&
            e.row_sum_rounded == static_cast<long long>(n / 2);
        cert.all_bounds_ok = cert.all_bounds_ok && e.bounds_ok;
        cert.entries.push_back(std::move(e));
    }
    return cert;
}

double lemma_gap_threshold_offdiag(std::size_t n, int t) {
    const double nn = static_cast<double>(n);
    const double td = static_cast<double>(t);
    return (nn - 1.0) / (4.0 * (nn - 2.0) * nn) + 5.0 / (4.0 * (nn - td)) +
           1.0 / ((8.0 * (nn - td) - 4.0) * std::sqrt(nn - td));
}

double lemma_gap_threshold_diag(std::size_t n, int t) {
    const double nn = static_cast<double>(n);
    const double td = static_cast<double>(t);
    return (2.0 * nn * nn - 4.0 * nn + 1.0) /
               (4.0 * (nn - 2.0) * (nn - 1.0) * nn) +
           5.0 / (4.0 * (nn - td)) +
           1.0 / ((8.0 * (nn - td) - 4.0) * std::sqrt(nn - td));
}

RoundedPair extract_rounded_pair(const Matrix& b, int t, double tolerance) {
    if (!b.is_square()) throw DimensionError("extraction needs a square matrix");
    const std::size_t n = b.rows();
    if (t < 4) throw DomainError("needs t >= 4");
    if (n % 2 != 0 || n < 4 * static_cast<std::size_t>(t)) {
        throw DomainError("needs even order at least 4t");
    }
    require_box(b);
    const double nn = static_cast<double>(n);
    const double td = static_cast<double>(t);
    const IndexCertificate cert = find_good_indices(b, t, tolerance);
    const DrnovsekTriple triple = build_fgh(b);

    RoundedPair out;
    out.n = n;
    out.t = t;
    out.hypothesis_met = cert.hypothesis_met;
    out.C = round_matrix(b);
    out.C_hat = Matrix(static_cast<std::size_t>(t) + 1, n);
    for (std::size_t k = 0; k < cert.entries.size(); ++k) {
        out.indices.push_back(cert.entries[k].index);
        const std::size_t src = cert.entries[k].index - 1;
        for (std::size_t j = 0; j < n; ++j) {
            out.C_hat.at(k, j) = out.C(src, j);
        }
    }

    const double sign = ((n / 2 + 1) % 2 == 0) ? 1.0 : -1.0;
    const std::size_t last_col = out.indices.back() - 1;
    out.y = Vector(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.y.at(j) = sign * triple.H(j, last_col);
    }

    // Gram identity in exact integers: diagonal ceil(n/4) + floor(n/4),
    // off-diagonal floor(n/4).
    const long long ceil_q = static_cast<long long>((n + 3) / 4);
    const long long floor_q = static_cast<long long>(n / 4);
    const std::size_t m = cert.entries.size();
    out.gram_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            long long dot = 0;
            for (std::size_t k = 0; k < n; ++k) {
                dot += static_cast<long long>(out.C_hat(i, k)) *
                       static_cast<long long>(out.C_hat(j, k));
            }
            if (i == j) {
                const long long defect = std::llabs(dot - (ceil_q + floor_q));
                out.gram_diag_defect = std::max(out.gram_diag_defect, defect);
            } else {
                const long long defect = std::llabs(dot - floor_q);
                out.gram_offdiag_defect = std::max(out.gram_offdiag_defect, defect);
            }
        }
    }
    out.gram_ok = out.gram_diag_defect == 0 && out.gram_offdiag_defect == 0;

    out.y_norm_sq = norm2_squared(out.y);
    out.y_norm_ok = out.y_norm_sq <= 1.0 / (4.0 * (nn - td));

    const Vector projected = out.C_hat * out.y;
    out.projection_gaps = Vector(m);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        out.projection_gaps.at(k) = std::fabs(projected[k] - 0.25);
    }
    out.projection_gaps.at(m - 1) = std::fabs(projected[m - 1]);
    out.offdiag_threshold = lemma_gap_threshold_offdiag(n, t);
    out.diag_threshold = lemma_gap_threshold_diag(n, t);
    out.gaps_ok = true;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        out.gaps_ok = out.gaps_ok && out.projection_gaps[k] < out.offdiag_threshold;
    }
    out.gaps_ok = out.gaps_ok && out.projection_gaps[m - 1] < out.diag_threshold;

    out.cc_offdiag_estimate =
        5.0 / (4.0 * (nn - td)) + 0.5 * std::sqrt(nn / (nn - td));
    out.cc_offdiag_below_7_10 = out.cc_offdiag_estimate < 0.7;
    out.round_dist_bound = 0.25 + 1.0 / (8.0 * nn) + 1.0 / (8.0 * (nn - 2.0));
    out.round_dist_below_3_10 = out.round_dist_bound < 0.3;
    return out;
}

std::vector<ContradictionLedger> contradiction_scan(long long n_min,
                                                    long long n_max) {
    if (n_min < 1000) throw DomainError("scan starts at order 1000");
    if (n_min > n_max) throw DomainError("empty scan range");
    if (n_min % 2 != 0 || n_max % 2 != 0) {
        throw DomainError("scan endpoints must be even");
    }
    replay_quoted_rationals();

    // The alpha chain bounds every n >= 1000 through the worst-case ratio
    // 1 - 1/501, so its value is a constant of the argument. Lower bound:
    // round products down, the subtracted square root up.
    const double w_lo = down(500.0 / 501.0);
    const double first = down(2.0 * down(w_lo * down(6199.0 / 25500.0)));
    const double sq_a = up(1000.0 / (204.0 * 950.0));
    const double sq_b =
        down(4.0 * down(down(500.0 / 501.0) * down(1922.0 / 31875.0)));
    const double q = up(6301.0 / 25500.0);
    const double sq_c = up(4.0 * up(q * q));
    const double root = up(std::sqrt(up(up(sq_a - sq_b) + sq_c)));
    const double alpha_lower = down(first - root);
    const double alpha_minus = down(alpha_lower - up(1.0 / 500.0));

    std::vector<ContradictionLedger> out;
    out.reserve(static_cast<std::size_t>((n_max - n_min) / 2 + 1));
    for (long long n = n_min; n <= n_max; n += 2) {
        ContradictionLedger row;
        row.n = n;
        const long long ceil_q = (n + 3) / 4;
        row.ratio = (static_cast<double>(n) / 4.0) / static_cast<double>(ceil_q);
        // (n/4)/ceil(n/4) in [1 - 1/501, 1], cross-multiplied in integers.
        row.ratio_in_range = 501 * n >= 2000 * ceil_q && n <= 4 * ceil_q;
        row.mean_lo = 6199.0 / 25500.0;
        row.mean_hi = 6301.0 / 25500.0;
        row.mean_sq_lower = 1922.0 / 31875.0;
        row.alpha_lower = alpha_lower;
        row.alpha_gt_39_100 = alpha_lower > up(39.0 / 100.0);
        const double nd = static_cast<double>(n);
        row.l1_upper = up(std::sqrt(up(nd / down(8.0 * (nd - 50.0)))));
        row.contradiction =
            row.ratio_in_range && row.alpha_gt_39_100 && alpha_minus > row.l1_upper;
        out.push_back(row);
    }
    return out;
}

}  // namespace smatrix
