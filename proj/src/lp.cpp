#include "lp.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace weyl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tableau {
    int m = 0;                      // rows
    int n = 0;                      // columns excluding rhs
    std::vector<std::vector<double>> t;  // m rows of n+1 (rhs last)
    std::vector<double> cost;       // current objective row (reduced costs), n+1
    std::vector<int> basis;         // basic column per row
    std::vector<bool> banned;       // artificial columns excluded in phase 2

    void pivot(int row, int col) {
        double piv = t[row][col];
        for (int j = 0; j <= n; ++j) t[row][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            double f = t[i][col];
            if (f == 0.0) continue;
            for (int j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
        }
        double f = cost[col];
        if (f != 0.0) {
            for (int j = 0; j <= n; ++j) cost[j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Minimize with Bland's rule. Returns false when unbounded.
    bool iterate() {
        for (int iter = 0; iter < 20000; ++iter) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (!banned[j] && cost[j] < -kLpTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;  // optimal
            int leave = -1;
            double best = kInf;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] > kLpTol) {
                    double ratio = t[i][n] / t[i][enter];
                    if (ratio < best - kLpTol ||
                        (ratio < best + kLpTol && (leave < 0 || basis[i] < basis[leave]))) {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
        }
        throw NumericError("simplex: iteration cap exceeded");
    }
};

}  // namespace

LpResult solve_lp(const LpProblem& p) {
    int n0 = p.nvars;
    // Shift/flip variables so that every working variable is >= 0.
    // flip[j] = false: x_j = lower_j + y_j ; flip[j] = true: x_j = upper_j - y_j.
    std::vector<bool> flip(n0, false);
    std::vector<double> base(n0, 0.0), range(n0, kInf);
    for (int j = 0; j < n0; ++j) {
        double lo = p.lower[j], up = p.upper[j];
        if (std::isfinite(lo)) {
            base[j] = lo;
            range[j] = up - lo;
        } else if (std::isfinite(up)) {
            flip[j] = true;
            base[j] = up;
            range[j] = kInf;
        } else {
            throw std::invalid_argument("solve_lp: every variable needs a finite bound");
        }
    }

    struct WorkRow {
        std::vector<double> a;
        LpRel rel;
        double rhs;
    };
    std::vector<WorkRow> work;
    work.reserve(p.rows.size() + static_cast<std::size_t>(n0));
    for (const auto& row : p.rows) {
        WorkRow w{std::vector<double>(n0, 0.0), row.rel, row.rhs};
        for (int j = 0; j < n0; ++j) {
            double aj = row.a[j];
            if (aj == 0.0) continue;
            w.rhs -= aj * base[j];
            w.a[j] = flip[j] ? -aj : aj;
        }
        work.push_back(std::move(w));
    }
    for (int j = 0; j < n0; ++j) {
        if (std::isfinite(range[j])) {
            WorkRow w{std::vector<double>(n0, 0.0), LpRel::Le, range[j]};
            w.a[j] = 1.0;
            work.push_back(std::move(w));
        }
    }

    int m = static_cast<int>(work.size());
    // Normalize rhs >= 0.
    for (auto& w : work) {
        if (w.rhs < 0.0) {
            for (auto& v : w.a) v = -v;
            w.rhs = -w.rhs;
            if (w.rel == LpRel::Le) w.rel = LpRel::Ge;
            else if (w.rel == LpRel::Ge) w.rel = LpRel::Le;
        }
    }

    int n_slack = 0;
    for (const auto& w : work) {
        if (w.rel != LpRel::Eq) ++n_slack;
    }
    int n_art = 0;
    for (const auto& w : work) {
        if (w.rel != LpRel::Le) ++n_art;
    }

    Tableau tab;
    tab.m = m;
    tab.n = n0 + n_slack + n_art;
    tab.t.assign(m, std::vector<double>(tab.n + 1, 0.0));
    tab.basis.assign(m, -1);
    tab.banned.assign(tab.n, false);

    int slack_at = n0, art_at = n0 + n_slack;
    for (int i = 0; i < m; ++i) {
        const auto& w = work[i];
        for (int j = 0; j < n0; ++j) tab.t[i][j] = w.a[j];
        tab.t[i][tab.n] = w.rhs;
        if (w.rel == LpRel::Le) {
            tab.t[i][slack_at] = 1.0;
            tab.basis[i] = slack_at++;
        } else if (w.rel == LpRel::Ge) {
            tab.t[i][slack_at++] = -1.0;
            tab.t[i][art_at] = 1.0;
            tab.basis[i] = art_at++;
        } else {
            tab.t[i][art_at] = 1.0;
            tab.basis[i] = art_at++;
        }
    }

    LpResult res;
    // Phase 1: minimize the sum of artificials.
    if (n_art > 0) {
        tab.cost.assign(tab.n + 1, 0.0);
        for (int j = n0 + n_slack; j < tab.n; ++j) tab.cost[j] = 1.0;
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] >= n0 + n_slack) {
                for (int j = 0; j <= tab.n; ++j) tab.cost[j] -= tab.t[i][j];
            }
        }
        if (!tab.iterate()) throw NumericError("simplex: phase 1 unbounded");
        if (-tab.cost[tab.n] > 1e-7) {
            res.status = LpStatus::Infeasible;
            return res;
        }
        // Drive residual artificial basics out of the basis.
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] >= n0 + n_slack) {
                int col = -1;
                for (int j = 0; j < n0 + n_slack; ++j) {
                    if (std::fabs(tab.t[i][j]) > kLpTol) {
                        col = j;
                        break;
                    }
                }
                if (col >= 0) tab.pivot(i, col);
            }
        }
        for (int j = n0 + n_slack; j < tab.n; ++j) tab.banned[j] = true;
    }

    // Phase 2: minimize -objective over the working variables.
    tab.cost.assign(tab.n + 1, 0.0);
    for (int j = 0; j < n0; ++j) {
        double cj = -(flip[j] ? -p.objective[j] : p.objective[j]);
        tab.cost[j] = cj;
    }
    for (int i = 0; i < m; ++i) {
        int b = tab.basis[i];
        double cb = tab.cost[b];
        if (cb != 0.0) {
            for (int j = 0; j <= tab.n; ++j) tab.cost[j] -= cb * tab.t[i][j];
            tab.cost[b] = 0.0;
        }
    }
    if (!tab.iterate()) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    std::vector<double> y(tab.n, 0.0);
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= 0) y[tab.basis[i]] = tab.t[i][tab.n];
    }
    res.x.assign(n0, 0.0);
    for (int j = 0; j < n0; ++j) {
        res.x[j] = flip[j] ? base[j] - y[j] : base[j] + y[j];
    }
    res.objective = 0.0;
    for (int j = 0; j < n0; ++j) res.objective += p.objective[j] * res.x[j];
    res.status = LpStatus::Optimal;
    return res;
}

}  // namespace weyl
