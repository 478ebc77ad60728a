#include "smatrix/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace smatrix {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Legendre symbol (a | p) for odd prime p via Euler's criterion.
int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    const std::uint64_t e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// Round to nearest integer and reject anything that is not an exact integer
// representation; these validators are meant for genuinely integral inputs.
bool integer_entries(const Matrix& a, std::vector<std::int64_t>& out) {
    out.clear();
    out.reserve(a.entries().size());
    for (double v : a.entries()) {
        const double r = std::nearbyint(v);
        if (v != r || std::fabs(r) > 9.0e18) return false;
        out.push_back(static_cast<std::int64_t>(r));
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin; this base set is exact below 3.3 * 10^24.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

HadamardMatrix sylvester_hadamard(unsigned k) {
    if (k > kMaxSylvesterExponent) {
        throw SizeCapError("doubling exponent exceeds cap of " +
                           std::to_string(kMaxSylvesterExponent));
    }
    std::size_t n = 1;
    Matrix h{{1.0}};
    for (unsigned step = 0; step < k; ++step) {
        Matrix next(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double v = h(i, j);
                next.at(i, j) = v;
                next.at(i, j + n) = v;
                next.at(i + n, j) = v;
                next.at(i + n, j + n) = -v;
            }
        }
        h = std::move(next);
        n *= 2;
    }
    return {n, std::move(h)};
}

HadamardMatrix paley_hadamard(std::uint64_t q) {
    if (q > kMaxPaleyPrime) {
        throw SizeCapError("modulus exceeds cap of " +
                           std::to_string(kMaxPaleyPrime));
    }
    if (!is_prime(q)) {
        throw NotPrimeError(std::to_string(q) + " is not prime");
    }
    if (q % 4 != 3) {
        throw ResidueClassError(std::to_string(q) + " is not 3 mod 4");
    }
    const std::size_t n = static_cast<std::size_t>(q) + 1;
    // chi[d] = Legendre symbol (d | q); chi[i - j mod q] fills the core.
    std::vector<int> chi(q);
    chi[0] = 0;
    for (std::uint64_t d = 1; d < q; ++d) chi[d] = legendre(d, q);

    // H = I + C with C = [[0, 1^T], [-1, Q]]: skew-type Paley construction.
    Matrix h(n, n);
    h.at(0, 0) = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
        h.at(0, j) = 1.0;
        h.at(j, 0) = -1.0;
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            if (i == j) {
                h.at(i, j) = 1.0;
            } else {
                const std::uint64_t d = (i + q - j) % q;
                h.at(i, j) = static_cast<double>(chi[d]);
            }
        }
    }
    return {n, std::move(h)};
}

SMatrix smatrix_from_hadamard(const HadamardMatrix& had) {
    const std::size_t n = had.order;
    if (n < 4 || n % 4 != 0) {
        throw DomainError("conversion needs order to be a positive multiple of 4");
    }
    Matrix h = had.body;
    // Negate columns whose first-row entry is -1, then rows whose
    // first-column entry is -1; both preserve the Gram identity.
    for (std::size_t j = 0; j < n; ++j) {
        if (h(0, j) < 0.0) {
            for (std::size_t i = 0; i < n; ++i) h.at(i, j) = -h(i, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (h(i, 0) < 0.0) {
            for (std::size_t j = 0; j < n; ++j) h.at(i, j) = -h(i, j);
        }
    }
    Matrix s(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            s.at(i - 1, j - 1) = h(i, j) > 0.0 ? 0.0 : 1.0;
        }
    }
    return {n - 1, std::move(s)};
}

SMatrix quadratic_residue_smatrix(std::uint64_t q) {
    if (q > kMaxPaleyPrime) {
        throw SizeCapError("modulus exceeds cap of " +
                           std::to_string(kMaxPaleyPrime));
    }
    if (!is_prime(q)) {
        throw NotPrimeError(std::to_string(q) + " is not prime");
    }
    if (q % 4 != 3) {
        throw ResidueClassError(std::to_string(q) + " is not 3 mod 4");
    }
    const std::size_t n = static_cast<std::size_t>(q);
    std::vector<int> chi(q);
    chi[0] = 0;
    for (std::uint64_t d = 1; d < q; ++d) chi[d] = legendre(d, q);

    // Circulant residue indicator P_ij = [chi(i - j) == 1].
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t d = (i + q - j) % q;
            p.at(i, j) = chi[d] == 1 ? 1.0 : 0.0;
        }
    }
    // The raw indicator and three complement variants; exactly one passes
    // the Gram identity for each residue class of q.
    const Matrix ones = Matrix::filled(n, n, 1.0);
    const Matrix eye = Matrix::identity(n);
    const Matrix candidates[] = {p, ones - p, p + eye, ones - p - eye};
    for (const Matrix& c : candidates) {
        if (is_smatrix(c)) return {n, c};
    }
    throw InternalError("no residue-indicator variant satisfies the Gram identity");
}

bool is_hadamard(const Matrix& a) {
    if (!a.is_square()) return false;
    const std::size_t n = a.rows();
    std::vector<std::int64_t> e;
    if (!integer_entries(a, e)) return false;
    for (std::int64_t v : e) {
        if (v != 1 && v != -1) return false;
    }
    // Gram identity H^T H = n I, checked row against row (equivalent by
    // symmetry of the +-1 structure: H H^T = n I iff H^T H = n I).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::int64_t dot = 0;
            for (std::size_t k = 0; k < n; ++k) {
                dot += e[i * n + k] * e[j * n + k];
            }
            const std::int64_t want = (i == j) ? static_cast<std::int64_t>(n) : 0;
            if (dot != want) return false;
        }
    }
    return true;
}

bool is_smatrix(const Matrix& a) {
    if (!a.is_square()) return false;
    const std::size_t n = a.rows();
    std::vector<std::int64_t> e;
    if (!integer_entries(a, e)) return false;
    for (std::int64_t v : e) {
        if (v != 0 && v != 1) return false;
    }
    // 4 S^T S = (n+1)(I + 11^T), cross-multiplied so everything stays in
    // exact integers. Column dot products live in [0, n] so int64 is ample.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::int64_t dot = 0;
            for (std::size_t k = 0; k < n; ++k) {
                dot += e[k * n + i] * e[k * n + j];
            }
            const std::int64_t want =
                static_cast<std::int64_t>(n + 1) * ((i == j) ? 2 : 1);
            if (4 * dot != want) return false;
        }
    }
    return true;
}

namespace {

// Backtracking search for a row permutation sigma and column permutation tau
// with a[sigma(i)][tau(j)] == b[i][j]. Rows of b are mapped one at a time
// while a paired partition of the columns is refined: columns can only map
// within a class, so each class must split evenly under every new row.
// Once every row is mapped with balanced classes, any class-wise bijection
// of columns works — no explicit column search is needed.
struct ColumnClass {
    std::vector<std::size_t> a_cols;
    std::vector<std::size_t> b_cols;
};

bool refine_columns(const std::vector<std::int64_t>& ea,
                    const std::vector<std::int64_t>& eb, std::size_t m,
                    std::size_t a_row, std::size_t b_row,
                    const std::vector<ColumnClass>& in,
                    std::vector<ColumnClass>& out) {
    out.clear();
    for (const ColumnClass& cls : in) {
        ColumnClass zero, one;
        for (std::size_t c : cls.a_cols) {
            (ea[a_row * m + c] ? one : zero).a_cols.push_back(c);
        }
        for (std::size_t j : cls.b_cols) {
            (eb[b_row * m + j] ? one : zero).b_cols.push_back(j);
        }
        if (zero.a_cols.size() != zero.b_cols.size()) return false;
        if (one.a_cols.size() != one.b_cols.size()) return false;
        if (!zero.a_cols.empty()) out.push_back(std::move(zero));
        if (!one.a_cols.empty()) out.push_back(std::move(one));
    }
    return true;
}

bool match_rows(const std::vector<std::int64_t>& ea,
                const std::vector<std::int64_t>& eb, std::size_t n,
                std::size_t m, std::size_t depth, std::vector<bool>& used,
                const std::vector<ColumnClass>& classes,
                const std::vector<std::int64_t>& sums_a,
                const std::vector<std::int64_t>& sums_b) {
    if (depth == n) return true;
    std::vector<ColumnClass> next;
    for (std::size_t r = 0; r < n; ++r) {
        if (used[r] || sums_a[r] != sums_b[depth]) continue;
        if (!refine_columns(ea, eb, m, r, depth, classes, next)) continue;
        used[r] = true;
        if (match_rows(ea, eb, n, m, depth + 1, used, next, sums_a, sums_b)) {
            return true;
        }
        used[r] = false;
    }
    return false;
}

}  // namespace

bool permutation_equivalent(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::vector<std::int64_t> ea, eb;
    if (!integer_entries(a, ea) || !integer_entries(b, eb)) {
        throw DomainError("permutation equivalence requires integer matrices");
    }
    for (std::int64_t v : ea) {
        if (v != 0 && v != 1) throw DomainError("entries must be 0 or 1");
    }
    for (std::int64_t v : eb) {
        if (v != 0 && v != 1) throw DomainError("entries must be 0 or 1");
    }
    // Cheap invariants before the search.
    if (std::accumulate(ea.begin(), ea.end(), std::int64_t{0}) !=
        std::accumulate(eb.begin(), eb.end(), std::int64_t{0})) {
        return false;
    }
    const std::size_t n = a.rows(), m = a.cols();
    std::vector<std::int64_t> sums_a(n, 0), sums_b(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            sums_a[i] += ea[i * m + j];
            sums_b[i] += eb[i * m + j];
        }
    }
    std::vector<std::int64_t> sorted_a = sums_a, sorted_b = sums_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;

    std::vector<bool> used(n, false);
    ColumnClass all;
    for (std::size_t c = 0; c < m; ++c) {
        all.a_cols.push_back(c);
        all.b_cols.push_back(c);
    }
    return match_rows(ea, eb, n, m, 0, used, {all}, sums_a, sums_b);
}

}  // namespace smatrix
