#pragma once

#include <vector>

namespace weyl {

// Dense row-major matrix sized for the desk-scale problems in this project
// (a few dozen rows/columns at most).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);

// Numerical rank of the column set via Householder QR with column pivoting;
// a column is counted while its residual norm exceeds tol * (largest norm).
int column_rank(const Matrix& m, double tol = 1e-9);

// Least-squares solution of A x = b (A rows >= cols, full column rank assumed)
// by Householder QR. Throws NumericError when a pivot collapses.
std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b);

// Orthonormal basis of the span of `count` independent standard-Gaussian
// columns plus its orthogonal complement: returns a d x d orthogonal matrix
// whose first `count` columns span the same subspace as the input columns.
// Throws DegenerateSampleError on rank collapse.
Matrix orthonormal_frame(const Matrix& cols, int count);

}  // namespace weyl
