#include "smatrix/bounds.hpp"

#include <cmath>

#include "smatrix/constructions.hpp"
#include "smatrix/linalg.hpp"

namespace smatrix {

namespace {

void require_even_gt2(std::size_t n, const char* what) {
    if (n <= 2 || n % 2 != 0) {
        throw DomainError(std::string(what) + " needs an even order greater than 2");
    }
}

void require_nonnegative(const Matrix& a) {
    for (double v : a.entries()) {
        if (v < 0.0) throw DomainError("matrix has a negative entry");
    }
}

Matrix round_entries(const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r.at(i, j) = std::floor(a(i, j) + 0.5);
        }
    }
    return r;
}

// Structural confirmation for the equality classes: the matrix rescaled by
// its max entry must round to an exact combinatorial witness and sit within
// tol of that rounding.
bool structural_match(const Matrix& a, double max_entry, double tol,
                      bool (*validator)(const Matrix&)) {
    const Matrix scaled = (1.0 / max_entry) * a;
    const Matrix rounded = round_entries(scaled);
    return max_abs_diff(scaled, rounded) <= tol && validator(rounded);
}

}  // namespace

std::string to_string(EqualityClass c) {
    switch (c) {
        case EqualityClass::HadamardEquality: return "hadamard-equality";
        case EqualityClass::SMatrixEquality: return "smatrix-equality";
        case EqualityClass::StrictlyAbove: return "strictly-above";
        case EqualityClass::BelowConjecture: return "below-conjecture";
    }
    throw InternalError("unknown equality class");
}

double sloane_coefficient(std::size_t n) {
    if (n == 0) throw DomainError("order must be positive");
    return 2.0 * static_cast<double>(n) / (static_cast<double>(n) + 1.0);
}

double cheng_even_bound(std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("this bound is defined for even orders >= 2");
    }
    const double nn = static_cast<double>(n);
    return 2.0 * std::sqrt(nn * nn - 2.0 * nn + 2.0) / nn;
}

BoundReport bound_report(const Matrix& a, double tolerance) {
    if (!a.is_square()) throw DimensionError("bound report needs a square matrix");
    require_nonnegative(a);
    const std::size_t n = a.rows();

    BoundReport rep;
    rep.n = n;
    rep.inv_frobenius = inverse_frobenius_norm(a);
    rep.max_entry = max_norm(a);
    rep.hadamard_bound = 1.0 / rep.max_entry;
    rep.sloane_bound = sloane_coefficient(n) * rep.hadamard_bound;
    if (n % 2 == 0) rep.cheng_even_bound = cheng_even_bound(n) * rep.hadamard_bound;
    rep.slack_vs_sloane = rep.inv_frobenius - rep.sloane_bound;

    const double rel_slack = rep.slack_vs_sloane / rep.sloane_bound;
    if (std::fabs(rep.inv_frobenius * rep.max_entry - 1.0) <= tolerance &&
        structural_match(a, rep.max_entry, tolerance, is_hadamard)) {
        rep.equality_class = EqualityClass::HadamardEquality;
    } else if (std::fabs(rel_slack) <= tolerance &&
               structural_match(a, rep.max_entry, tolerance, is_smatrix)) {
        rep.equality_class = EqualityClass::SMatrixEquality;
    } else if (rel_slack < -tolerance) {
        rep.equality_class = EqualityClass::BelowConjecture;
    } else {
        rep.equality_class = EqualityClass::StrictlyAbove;
    }
    return rep;
}

PropositionReport proposition_report(const Matrix& a, double tolerance) {
    if (!a.is_square()) throw DimensionError("report needs a square matrix");
    PropositionReport rep;
    rep.n = a.rows();
    rep.inv_frobenius = inverse_frobenius_norm(a);
    rep.max_entry = max_norm(a);
    rep.product = rep.inv_frobenius * rep.max_entry;
    rep.structural = structural_match(a, rep.max_entry, tolerance, is_hadamard);
    rep.equality = std::fabs(rep.product - 1.0) <= tolerance && rep.structural;
    return rep;
}

DrnovsekTriple build_fgh(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("construction needs a square matrix");
    const std::size_t n = a.rows();
    require_even_gt2(n, "the bordered construction");
    const Matrix inv = invert(a).inverse;
    const double nn = static_cast<double>(n);

    DrnovsekTriple out;
    out.n = n;
    // Lower-right blocks.
    const Matrix f_block = (std::sqrt(nn / (nn - 2.0)) * (nn / 2.0)) * inv;
    Matrix mixer = (-2.0 / nn) * Matrix::filled(n, n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        mixer.at(i, i) += 2.0 * (nn - 1.0) / (nn - 2.0);
    }
    const Matrix g_block = std::sqrt((nn - 2.0) / nn) * (mixer * transpose(a));

    auto bordered = [n](const Matrix& block) {
        Matrix m(n + 1, n + 1);
        for (std::size_t j = 1; j <= n; ++j) {
            m.at(0, j) = 1.0;
            m.at(j, 0) = 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i + 1, j + 1) = block(i, j);
            }
        }
        return m;
    };
    out.F = bordered(f_block);
    out.G = bordered(g_block);
    out.H = (std::sqrt(nn * (nn - 2.0)) / (2.0 * (nn - 1.0))) * (f_block - g_block);
    out.h_value = h_value(a);
    return out;
}

double h_value(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("h needs a square matrix");
    const std::size_t n = a.rows();
    require_even_gt2(n, "h");
    const double nn = static_cast<double>(n);
    double sq = 0.0;
    for (double v : a.entries()) sq += v * v;
    double row_sq = 0.0;
    const Vector sums = row_sums(a);
    for (std::size_t i = 0; i < n; ++i) row_sq += sums[i] * sums[i];
    return 4.0 * (nn - 1.0) * (nn - 1.0) / (nn * (nn - 2.0)) * sq -
           4.0 / nn * row_sq;
}

double h_upper(std::size_t n) {
    require_even_gt2(n, "the h ceiling");
    const double nn = static_cast<double>(n);
    return nn * (nn * nn - 2.0 * nn + 2.0) / (nn - 2.0);
}

ChainReport cauchy_schwarz_chain(const Matrix& a, double tolerance) {
    if (!a.is_square()) throw DimensionError("chain needs a square matrix");
    require_nonnegative(a);
    if (max_norm(a) > 1.0) {
        throw DomainError("chain needs all entries at most 1");
    }
    const std::size_t n = a.rows();
    require_even_gt2(n, "the chain");
    const DrnovsekTriple triple = build_fgh(a);
    const double nn = static_cast<double>(n);

    ChainReport rep;
    rep.inner_FG = frobenius_inner(triple.F, triple.G);
    rep.lhs = nn * nn * (nn * nn - 2.0) * (nn * nn - 2.0) /
              ((nn - 2.0) * (nn - 2.0));
    const double fn = frobenius_norm(triple.F);
    const double gn = frobenius_norm(triple.G);
    rep.normF_sq = fn * fn;
    rep.normG_sq = gn * gn;
    rep.h_upper = h_upper(n);
    rep.chain_holds =
        rep.lhs <= rep.normF_sq * rep.normG_sq * (1.0 + tolerance) &&
        rep.normG_sq <= (2.0 * nn + rep.h_upper) * (1.0 + tolerance);
    return rep;
}

}  // namespace smatrix
