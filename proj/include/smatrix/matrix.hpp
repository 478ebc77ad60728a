#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "smatrix/errors.hpp"

namespace smatrix {

// Dense real vector. Entries are validated finite on construction.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t len) : entries_(len, 0.0) {}
    Vector(std::initializer_list<double> init);
    explicit Vector(std::vector<double> entries);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    double& at(std::size_t i) { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

private:
    std::vector<double> entries_;
};

// Dense row-major n x m matrix of doubles. Values are treated as immutable:
// every operation below returns a fresh matrix. Entries are validated finite
// on construction.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> nested);

    static Matrix identity(std::size_t n);
    static Matrix filled(std::size_t rows, std::size_t cols, double value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    // Mutable access for builders; public functions never mutate arguments.
    double& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

Matrix transpose(const Matrix& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);

// sqrt of the sum of squared entries, == sqrt(trace(A^T A)).
double frobenius_norm(const Matrix& a);
// Largest |entry|.
double max_norm(const Matrix& a);
// trace(B^T A) = sum_ij A_ij B_ij. Throws DimensionError on shape mismatch.
double frobenius_inner(const Matrix& a, const Matrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);
Vector row_sums(const Matrix& a);
Matrix outer(const Vector& u, const Vector& v);

double norm2_squared(const Vector& v);
double norm1(const Vector& v);

}  // namespace smatrix
