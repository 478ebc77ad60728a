#pragma once

#include <functional>

#include "smatrix/matrix.hpp"

namespace smatrix {

// Entrywise central differences (f(A + h E_ij) - f(A - h E_ij)) / (2h).
// Exceptions raised by f propagate. h must be positive.
Matrix finite_diff_gradient(const std::function<double(const Matrix&)>& f,
                            const Matrix& a, double h);

}  // namespace smatrix
