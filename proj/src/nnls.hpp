#pragma once

#include <vector>

#include "linalg.hpp"

namespace weyl {

struct NnlsResult {
    std::vector<double> coefficients;  // lambda >= 0, one per column
    std::vector<double> projection;    // V lambda
    int face_dimension = 0;            // rank of the active column set
    int iterations = 0;
};

inline constexpr double kActivityTol = 1e-9;

// Metric projection onto pos(columns of v): solves min |point - V lambda|,
// lambda >= 0, by the Lawson-Hanson active-set method. face_dimension is the
// rank of the columns with lambda > kActivityTol. Iteration cap 100 * cols.
NnlsResult nnls_project(const Matrix& v, const std::vector<double>& point);

}  // namespace weyl
