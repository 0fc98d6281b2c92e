#pragma once

#include <limits>
#include <vector>

namespace weyl {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class LpRel { Le, Ge, Eq };

struct LpRow {
    std::vector<double> a;
    LpRel rel;
    double rhs;
};

// maximize c.x  subject to  rows, lower <= x <= upper.
// Every variable needs at least one finite bound.
struct LpProblem {
    int nvars = 0;
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<double> lower;
    std::vector<double> upper;

    explicit LpProblem(int n)
        : nvars(n),
          objective(n, 0.0),
          lower(n, 0.0),
          upper(n, std::numeric_limits<double>::infinity()) {}
    void add_row(std::vector<double> a, LpRel rel, double rhs) {
        rows.push_back({std::move(a), rel, rhs});
    }
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
};

// Dense two-phase primal simplex with Bland's rule; feasibility tolerance
// 1e-9. Deterministic. Sized for the tiny LPs this project generates.
LpResult solve_lp(const LpProblem& p);

inline bool lp_feasible(const LpProblem& p) { return solve_lp(p).status != LpStatus::Infeasible; }

inline constexpr double kLpTol = 1e-9;

}  // namespace weyl
