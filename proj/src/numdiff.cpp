#include "smatrix/numdiff.hpp"

namespace smatrix {

Matrix finite_diff_gradient(const std::function<double(const Matrix&)>& f,
                            const Matrix& a, double h) {
    if (!(h > 0.0)) {
        throw DomainError("finite difference step must be positive");
    }
    Matrix g(a.rows(), a.cols());
    Matrix work = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double orig = work(i, j);
            work.at(i, j) = orig + h;
            const double up = f(work);
            work.at(i, j) = orig - h;
            const double down = f(work);
            work.at(i, j) = orig;
            g.at(i, j) = (up - down) / (2.0 * h);
        }
    }
    return g;
}

}  // namespace smatrix
