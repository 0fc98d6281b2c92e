#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "cone_type.hpp"

namespace weyl {

// Triangle of Stirling numbers of the first kind (type A) or their
// B-analogues: coefficients of t(t+1)...(t+n-1), resp. (t+1)(t+3)...(t+2n-1).
// Immutable after construction; safe for unrestricted concurrent reads.
class StirlingTable {
public:
    StirlingTable(ConeVariant variant, int max_n);

    ConeVariant variant() const { return variant_; }
    int max_n() const { return max_n_; }

    // Out-of-range k yields 0 (the summation convention). n must be in range.
    const BigNat& entry(int n, int k) const;
    const std::vector<BigNat>& row(int n) const;

    // Row sum = value of the defining polynomial at t = 1 (n! resp. 2^n n!).
    BigNat row_sum(int n) const;

    // D(n,d) = 2 * [entry(n, n-d+1) + entry(n, n-d+3) + ...], exact.
    // Requires 1 <= d <= n <= max_n.
    BigNat chamber_count(int n, int d) const;

    // (even-index sum, odd-index sum) of row n; both equal n!/(2 sigma^n) for
    // n >= 2. Requires 2 <= n <= max_n.
    std::pair<BigNat, BigNat> parity_sums(int n) const;

private:
    ConeVariant variant_;
    int max_n_;
    std::vector<std::vector<BigNat>> rows_;
    static const BigNat kZero;
};

// Process-wide cache of immutable tables, one per variant, grown on demand.
// Returned tables are shared snapshots; concurrent readers never block.
std::shared_ptr<const StirlingTable> shared_stirling_table(ConeVariant variant, int min_n);

// Default table size kept exact before the float fallback engages.
inline constexpr int kDefaultTableMaxN = 600;

}  // namespace weyl
