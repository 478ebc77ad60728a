#include "smatrix/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace smatrix {

namespace {

void check_finite(const std::vector<double>& entries) {
    for (double e : entries) {
        if (!std::isfinite(e)) {
            throw DomainError("non-finite entry in construction");
        }
    }
}

}  // namespace

Vector::Vector(std::initializer_list<double> init) : entries_(init) {
    check_finite(entries_);
}

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
    check_finite(entries_);
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    if (entries_.size() != rows * cols) {
        throw DimensionError("entry count does not match dimensions");
    }
    check_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> nested) {
    rows_ = nested.size();
    cols_ = rows_ ? nested.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    entries_.reserve(rows_ * cols_);
    for (const auto& row : nested) {
        if (row.size() != cols_) {
            throw DimensionError("ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::filled(std::size_t rows, std::size_t cols, double value) {
    Matrix m(rows, cols);
    for (double& e : m.entries_) e = value;
    check_finite(m.entries_);
    return m;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t.at(j, i) = a(i, j);
        }
    }
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch in addition");
    }
    Matrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        c.at(k / a.cols(), k % a.cols()) = a.entries()[k] + b.entries()[k];
    }
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch in subtraction");
    }
    Matrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        c.at(k / a.cols(), k % a.cols()) = a.entries()[k] - b.entries()[k];
    }
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("shape mismatch in product");
    }
    Matrix c(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous in row-major storage.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.at(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        c.at(k / a.cols(), k % a.cols()) = s * a.entries()[k];
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) {
        throw DimensionError("shape mismatch in matrix-vector product");
    }
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y.at(i) = s;
    }
    return y;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double e : a.entries()) s += e * e;
    return std::sqrt(s);
}

double max_norm(const Matrix& a) {
    double m = 0.0;
    for (double e : a.entries()) m = std::max(m, std::fabs(e));
    return m;
}

double frobenius_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch in Frobenius inner product");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        s += a.entries()[k] * b.entries()[k];
    }
    return s;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch in comparison");
    }
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::fabs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

Vector row_sums(const Matrix& a) {
    Vector s(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j);
        s.at(i) = acc;
    }
    return s;
}

Matrix outer(const Vector& u, const Vector& v) {
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m.at(i, j) = u[i] * v[j];
        }
    }
    return m;
}

double norm2_squared(const Vector& v) {
    double s = 0.0;
    for (double e : v.entries()) s += e * e;
    return s;
}

double norm1(const Vector& v) {
    double s = 0.0;
    for (double e : v.entries()) s += std::fabs(e);
    return s;
}

}  // namespace smatrix
