#pragma once

#include <cstddef>
#include <vector>

namespace sigband::detail {

// Dense row-major matrix just big enough for the small systems here
// (Savitzky-Golay normal equations, 2x2 Gauss-Newton steps).
class SmallMatrix {
public:
    SmallMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

// Solves A x = b by Gaussian elimination with partial pivoting.
// Returns false when A is singular to working precision. A and b are
// consumed as scratch.
bool solve_linear(SmallMatrix a, std::vector<double> b, std::vector<double>& x);

}  // namespace sigband::detail
