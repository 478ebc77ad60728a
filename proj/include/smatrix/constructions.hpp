#pragma once

#include <cstdint>

#include "smatrix/matrix.hpp"

namespace smatrix {

// +-1 matrix with H^T H = order * I. Only produced by the validated
// constructors below; the Gram identity is checked in exact integer
// arithmetic.
struct HadamardMatrix {
    std::size_t order = 0;
    Matrix body;
};

// 0/1 matrix with 4 S^T S = (order+1)(I + 11^T). The constructions here
// exist for order = 3 (mod 4).
struct SMatrix {
    std::size_t order = 0;
    Matrix body;
};

// Largest order any construction will emit.
inline constexpr std::uint64_t kMaxPaleyPrime = 10007;
inline constexpr unsigned kMaxSylvesterExponent = 13;

// Order 2^k by tensor doubling [[H, H], [H, -H]]. k <= 13 (SizeCapError).
HadamardMatrix sylvester_hadamard(unsigned k);

// Order q+1 from the quadratic-residue (Legendre symbol) core bordered by
// ones. Requires q prime (NotPrimeError), q = 3 mod 4 (ResidueClassError),
// q <= 10007 (SizeCapError).
HadamardMatrix paley_hadamard(std::uint64_t q);

// Normalize H so its first row and column are +1, drop them, and map
// +1 -> 0, -1 -> 1. Requires order >= 4 and order = 0 mod 4 (DomainError).
SMatrix smatrix_from_hadamard(const HadamardMatrix& h);

// Circulant built from the quadratic-residue indicator of the first row,
// complemented when the raw indicator fails the Gram identity. Same
// preconditions on q as paley_hadamard.
SMatrix quadratic_residue_smatrix(std::uint64_t q);

// Exact checks (integer arithmetic on the entries; no tolerances).
bool is_hadamard(const Matrix& a);
bool is_smatrix(const Matrix& a);

// True when some row and column permutation maps a onto b. Both matrices
// must be 0/1; intended for construction cross-validation at small orders.
bool permutation_equivalent(const Matrix& a, const Matrix& b);

bool is_prime(std::uint64_t n);

}  // namespace smatrix
