#include <doctest.h>

#include <vector>

#include "smatrix/constructions.hpp"
#include "smatrix/matrix.hpp"

using namespace smatrix;

namespace {

// Primes p = 3 (mod 4) up to 199.
const std::vector<std::uint64_t> kResiduePrimes = {
    3,  7,  11, 19,  23,  31,  43,  47,  59,  67,  71,  79,
    83, 103, 107, 127, 131, 139, 151, 163, 167, 179, 191, 199};

}  // namespace

TEST_CASE("primality test agrees with small ground truth") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(10005));
    CHECK_FALSE(is_prime(10011));
    int count = 0;
    for (std::uint64_t n = 2; n < 100; ++n) count += is_prime(n) ? 1 : 0;
    CHECK(count == 25);
}

TEST_CASE("doubling construction produces orthogonal sign matrices") {
    for (unsigned k = 0; k <= 9; ++k) {
        const HadamardMatrix h = sylvester_hadamard(k);
        CHECK(h.order == (1ULL << k));
        CHECK(h.body.rows() == h.order);
        CHECK(is_hadamard(h.body));
    }
    CHECK_THROWS_AS(sylvester_hadamard(14), SizeCapError);
}

TEST_CASE("residue construction produces orthogonal sign matrices") {
    for (std::uint64_t q : kResiduePrimes) {
        const HadamardMatrix h = paley_hadamard(q);
        CHECK(h.order == q + 1);
        CHECK(is_hadamard(h.body));
    }
    CHECK_THROWS_AS(paley_hadamard(5), ResidueClassError);
    CHECK_THROWS_AS(paley_hadamard(9), NotPrimeError);
    CHECK_THROWS_AS(paley_hadamard(15), NotPrimeError);
    CHECK_THROWS_AS(paley_hadamard(10011), SizeCapError);
}

TEST_CASE("sign-matrix validator is an exact integer check") {
    CHECK(is_hadamard(Matrix{{1.0}}));
    CHECK(is_hadamard(Matrix{{1.0, 1.0}, {1.0, -1.0}}));
    CHECK_FALSE(is_hadamard(Matrix{{1.0, 1.0}, {1.0, 1.0}}));
    CHECK_FALSE(is_hadamard(Matrix::identity(2)));        // has zeros
    CHECK_FALSE(is_hadamard(Matrix(2, 3)));               // not square
    CHECK_FALSE(is_hadamard(Matrix{{0.9999999, 1.0}, {1.0, -1.0}}));
}

TEST_CASE("binary gram validator accepts exactly the right matrices") {
    const Matrix j_minus_i{{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}};
    CHECK(is_smatrix(j_minus_i));
    CHECK(is_smatrix(Matrix{{1.0}}));
    CHECK_FALSE(is_smatrix(Matrix::identity(3)));
    CHECK_FALSE(is_smatrix(Matrix::filled(3, 3, 1.0)));
    CHECK_FALSE(is_smatrix(Matrix{{0.5}}));
    // No even order can pass: the cross-multiplied identity needs 4 | 2(n+1).
    CHECK_FALSE(is_smatrix(Matrix::identity(4)));
    CHECK_FALSE(is_smatrix(Matrix{{1.0, 1.0, 0.0, 0.0},
                                  {0.0, 1.0, 1.0, 0.0},
                                  {0.0, 0.0, 1.0, 1.0},
                                  {1.0, 0.0, 0.0, 1.0}}));
}

TEST_CASE("hadamard-to-binary conversion yields validated matrices") {
    for (unsigned k = 2; k <= 8; ++k) {
        const SMatrix s = smatrix_from_hadamard(sylvester_hadamard(k));
        CHECK(s.order == (1ULL << k) - 1);
        CHECK(is_smatrix(s.body));
    }
    for (std::uint64_t q : kResiduePrimes) {
        const SMatrix s = smatrix_from_hadamard(paley_hadamard(q));
        CHECK(s.order == q);
        CHECK(is_smatrix(s.body));
    }
    CHECK_THROWS_AS(smatrix_from_hadamard(sylvester_hadamard(1)), DomainError);
}

TEST_CASE("circulant residue matrices pass the gram identity") {
    for (std::uint64_t q : kResiduePrimes) {
        const SMatrix s = quadratic_residue_smatrix(q);
        CHECK(s.order == q);
        CHECK(is_smatrix(s.body));
        const Vector sums = row_sums(s.body);
        for (std::size_t i = 0; i < s.order; ++i) {
            CHECK(sums[i] == static_cast<double>((q + 1) / 2));
        }
    }
    CHECK_THROWS_AS(quadratic_residue_smatrix(13), ResidueClassError);
    CHECK_THROWS_AS(quadratic_residue_smatrix(25), NotPrimeError);
    CHECK_THROWS_AS(quadratic_residue_smatrix(10011), SizeCapError);
}

TEST_CASE("the two binary constructions agree up to permutation") {
    for (std::uint64_t q : {3ULL, 7ULL, 11ULL, 19ULL, 23ULL}) {
        const SMatrix direct = quadratic_residue_smatrix(q);
        const SMatrix derived = smatrix_from_hadamard(paley_hadamard(q));
        CHECK(permutation_equivalent(direct.body, derived.body));
    }
}

TEST_CASE("permutation equivalence is a faithful matcher") {
    const Matrix a{{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}};
    Matrix b(3, 3);  // a with rows cycled and columns swapped
    const std::size_t rot[3] = {1, 2, 0};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            b.at(i, j) = a(rot[i], 2 - j);
        }
    }
    CHECK(permutation_equivalent(a, b));
    CHECK_FALSE(permutation_equivalent(a, Matrix::identity(3)));
    CHECK_FALSE(permutation_equivalent(a, Matrix(3, 2)));
    CHECK_THROWS_AS(permutation_equivalent(a, Matrix::filled(3, 3, 0.5)),
                    DomainError);
}
