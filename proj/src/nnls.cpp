#include "nnls.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace weyl {

namespace {

Matrix columns_subset(const Matrix& v, const std::vector<int>& idx) {
    Matrix sub(v.rows, static_cast<int>(idx.size()));
    for (int j = 0; j < sub.cols; ++j)
        for (int i = 0; i < v.rows; ++i) sub.at(i, j) = v.at(i, idx[j]);
    return sub;
}

}  // namespace

NnlsResult nnls_project(const Matrix& v, const std::vector<double>& point) {
    int d = v.rows, m = v.cols;
    NnlsResult res;
    res.coefficients.assign(m, 0.0);
    res.projection.assign(d, 0.0);

    std::vector<bool> passive(m, false);
    std::vector<bool> banned(m, false);  // columns dropped for rank deficiency
    std::vector<double> x(m, 0.0);
    std::vector<double> residual = point;  // point - V x, x = 0 initially

    double bnorm = norm2(point);
    double kkt_tol = kActivityTol * std::max(1.0, bnorm);
    int cap = 100 * std::max(1, m);

    auto recompute_residual = [&]() {
        residual = point;
        for (int j = 0; j < m; ++j) {
            if (x[j] != 0.0) {
                for (int i = 0; i < d; ++i) residual[i] -= x[j] * v.at(i, j);
            }
        }
    };

    for (; res.iterations < cap; ++res.iterations) {
        // Dual feasibility check on the active set.
        int best = -1;
        double best_w = kkt_tol;
        for (int j = 0; j < m; ++j) {
            if (passive[j] || banned[j]) continue;
            double w = 0.0;
            for (int i = 0; i < d; ++i) w += v.at(i, j) * residual[i];
            if (w > best_w) {
                best_w = w;
                best = j;
            }
        }
        if (best < 0) break;
        passive[best] = true;

        // Inner loop: restricted least squares, clipping at the boundary.
        for (;;) {
            std::vector<int> pidx;
            for (int j = 0; j < m; ++j) {
                if (passive[j]) pidx.push_back(j);
            }
            std::vector<double> z;
            try {
                z = least_squares(columns_subset(v, pidx), point);
            } catch (const NumericError&) {
                // Rank-deficient passive set: drop the newest column for the
                // remainder of this solve.
                passive[best] = false;
                banned[best] = true;
                z.clear();
            }
            if (z.empty()) break;
            bool all_positive = true;
            for (double zi : z) {
                if (zi <= kActivityTol) {
                    all_positive = false;
                    break;
                }
            }
            if (all_positive) {
                std::fill(x.begin(), x.end(), 0.0);
                for (std::size_t t = 0; t < pidx.size(); ++t) x[pidx[t]] = z[t];
                break;
            }
            double alpha = 1.0;
            for (std::size_t t = 0; t < pidx.size(); ++t) {
                if (z[t] <= kActivityTol) {
                    double xi = x[pidx[t]];
                    double denom = xi - z[t];
                    if (denom > 0.0) alpha = std::min(alpha, xi / denom);
                }
            }
            for (std::size_t t = 0; t < pidx.size(); ++t) {
                double xi = x[pidx[t]];
                x[pidx[t]] = xi + alpha * (z[t] - xi);
            }
            for (int j = 0; j < m; ++j) {
                if (passive[j] && x[j] <= kActivityTol) {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
        }
        recompute_residual();
    }
    if (res.iterations >= cap) throw NumericError("nnls_project: iteration cap exceeded");

    res.coefficients = x;
    for (int j = 0; j < m; ++j) {
        if (x[j] != 0.0) {
            for (int i = 0; i < d; ++i) res.projection[i] += x[j] * v.at(i, j);
        }
    }
    std::vector<int> active;
    for (int j = 0; j < m; ++j) {
        if (x[j] > kActivityTol) active.push_back(j);
    }
    res.face_dimension = active.empty() ? 0 : column_rank(columns_subset(v, active));
    return res;
}

}  // namespace weyl
