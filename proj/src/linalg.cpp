#include "linalg.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace weyl {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

int column_rank(const Matrix& m, double tol) {
    // Modified Gram-Schmidt with column pivoting on the working copy.
    int r = m.rows, c = m.cols;
    std::vector<std::vector<double>> cols(c, std::vector<double>(r));
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < r; ++i) cols[j][i] = m.at(i, j);

    double max_norm = 0.0;
    for (auto& col : cols) max_norm = std::max(max_norm, norm2(col));
    if (max_norm == 0.0) return 0;
    double thresh = tol * max_norm;

    int rank = 0;
    for (int step = 0; step < std::min(r, c); ++step) {
        int best = -1;
        double best_norm = thresh;
        for (int j = rank; j < c; ++j) {
            double nj = norm2(cols[j]);
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (best < 0) break;
        std::swap(cols[rank], cols[best]);
        double inv = 1.0 / best_norm;
        for (auto& v : cols[rank]) v *= inv;
        for (int j = rank + 1; j < c; ++j) {
            double proj = dot(cols[j], cols[rank]);
            for (int i = 0; i < r; ++i) cols[j][i] -= proj * cols[rank][i];
        }
        ++rank;
    }
    return rank;
}

std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b) {
    int m = a.rows, n = a.cols;
    Matrix r = a;
    std::vector<double> rhs = b;
    // Householder QR, reflectors applied to rhs on the fly.
    for (int k = 0; k < n; ++k) {
        double alpha = 0.0;
        for (int i = k; i < m; ++i) alpha += r.at(i, k) * r.at(i, k);
        alpha = std::sqrt(alpha);
        if (alpha < 1e-13) throw NumericError("least_squares: rank-deficient column");
        if (r.at(k, k) > 0) alpha = -alpha;
        std::vector<double> v(m - k);
        v[0] = r.at(k, k) - alpha;
        for (int i = k + 1; i < m; ++i) v[i - k] = r.at(i, k);
        double vnorm2 = 0.0;
        for (double x : v) vnorm2 += x * x;
        if (vnorm2 < 1e-300) continue;
        for (int j = k; j < n; ++j) {
            double s = 0.0;
            for (int i = k; i < m; ++i) s += v[i - k] * r.at(i, j);
            s *= 2.0 / vnorm2;
            for (int i = k; i < m; ++i) r.at(i, j) -= s * v[i - k];
        }
        double s = 0.0;
        for (int i = k; i < m; ++i) s += v[i - k] * rhs[i];
        s *= 2.0 / vnorm2;
        for (int i = k; i < m; ++i) rhs[i] -= s * v[i - k];
    }
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = rhs[i];
        for (int j = i + 1; j < n; ++j) s -= r.at(i, j) * x[j];
        double diag = r.at(i, i);
        if (std::fabs(diag) < 1e-13) throw NumericError("least_squares: singular triangle");
        x[i] = s / diag;
    }
    return x;
}

Matrix orthonormal_frame(const Matrix& cols, int count) {
    int d = cols.rows;
    Matrix q(d, d);
    std::vector<std::vector<double>> basis;
    basis.reserve(d);
    auto add_vector = [&](const std::vector<double>& v, bool required) {
        std::vector<double> w = v;
        for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
            for (const auto& e : basis) {
                double proj = dot(w, e);
                for (int i = 0; i < d; ++i) w[i] -= proj * e[i];
            }
        }
        double nw = norm2(w);
        if (nw < 1e-9) {
            if (required) throw DegenerateSampleError("orthonormal_frame: rank collapse");
            return false;
        }
        for (auto& x : w) x /= nw;
        basis.push_back(std::move(w));
        return true;
    };
    for (int j = 0; j < count; ++j) {
        std::vector<double> v(d);
        for (int i = 0; i < d; ++i) v[i] = cols.at(i, j);
        add_vector(v, true);
    }
    // Complete to a full frame with coordinate vectors.
    for (int j = 0; j < d && static_cast<int>(basis.size()) < d; ++j) {
        std::vector<double> e(d, 0.0);
        e[j] = 1.0;
        add_vector(e, false);
    }
    if (static_cast<int>(basis.size()) != d) {
        throw DegenerateSampleError("orthonormal_frame: completion failed");
    }
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) q.at(i, j) = basis[j][i];
    return q;
}

}  // namespace weyl
