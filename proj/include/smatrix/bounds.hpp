#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "smatrix/matrix.hpp"

namespace smatrix {

inline constexpr double kEqualityTolerance = 1e-8;

enum class EqualityClass {
    HadamardEquality,   // ||A^-1||_F ||A||_max == 1, exact Hadamard structure
    SMatrixEquality,    // ||A^-1||_F == 2n/(n+1) ||A||_max^-1, exact S-matrix
    StrictlyAbove,
    BelowConjecture,    // counterexample alarm
};

std::string to_string(EqualityClass c);

// 2n/(n+1), the conjectured sharp constant.
double sloane_coefficient(std::size_t n);

// 2 sqrt(n^2 - 2n + 2) / n for even n >= 2; DomainError for odd n.
double cheng_even_bound(std::size_t n);

struct BoundReport {
    std::size_t n = 0;
    double inv_frobenius = 0.0;
    double max_entry = 0.0;
    double hadamard_bound = 0.0;               // ||A||_max^-1
    double sloane_bound = 0.0;                 // 2n/(n+1) ||A||_max^-1
    std::optional<double> cheng_even_bound;    // even n only
    double slack_vs_sloane = 0.0;
    EqualityClass equality_class = EqualityClass::StrictlyAbove;
};

// All lower bounds for a non-negative invertible matrix. Equality classes
// need both the value match (relative tolerance) and the exact structural
// check on A rescaled by its max entry.
// DomainError on a negative entry; SingularError via inversion.
BoundReport bound_report(const Matrix& a, double tolerance = kEqualityTolerance);

// The sign-free bound ||A^-1||_F >= ||A||_max^-1 with its equality case.
// This is the path for matrices with negative entries (Hadamard candidates),
// which bound_report rejects.
struct PropositionReport {
    std::size_t n = 0;
    double inv_frobenius = 0.0;
    double max_entry = 0.0;
    double product = 0.0;     // inv_frobenius * max_entry
    bool structural = false;  // rescaled rounded matrix is exactly Hadamard
    bool equality = false;    // product == 1 within tolerance and structural
};

PropositionReport proposition_report(const Matrix& a,
                                     double tolerance = kEqualityTolerance);

// Bordered matrices of the even-n Cauchy-Schwarz argument, all (n+1)x(n+1)
// except H which is n x n.
struct DrnovsekTriple {
    std::size_t n = 0;
    Matrix F;
    Matrix G;
    Matrix H;
    double h_value = 0.0;
};

// Requires even n > 2 and invertible A.
DrnovsekTriple build_fgh(const Matrix& a);

// 4(n-1)^2/(n(n-2)) sum A_ij^2 - 4/n sum_i (row sum_i)^2. Even n > 2.
double h_value(const Matrix& a);

// n(n^2-2n+2)/(n-2), the maximum of h over [0,1] matrices. Even n > 2.
double h_upper(std::size_t n);

struct ChainReport {
    double inner_FG = 0.0;   // <F, G>_F
    double lhs = 0.0;        // n^2 (n^2-2)^2 / (n-2)^2
    double normF_sq = 0.0;
    double normG_sq = 0.0;
    double h_upper = 0.0;    // n(n^2-2n+2)/(n-2)
    bool chain_holds = false;
};

// Requires A non-negative, ||A||_max <= 1 (DomainError), even n > 2,
// invertible. chain_holds checks lhs <= ||F||^2 ||G||^2 and
// ||G||^2 <= 2n + h_upper(n), both within tolerance.
ChainReport cauchy_schwarz_chain(const Matrix& a,
                                 double tolerance = kEqualityTolerance);

}  // namespace smatrix
