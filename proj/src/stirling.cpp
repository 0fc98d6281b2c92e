#include "stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace weyl {

const BigNat StirlingTable::kZero{};

StirlingTable::StirlingTable(ConeVariant variant, int max_n) : variant_(variant), max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("StirlingTable: max_n must be nonnegative");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[0] = {BigNat(1)};
    for (int n = 1; n <= max_n; ++n) {
        auto& row = rows_[n];
        const auto& prev = rows_[n - 1];
        row.assign(static_cast<std::size_t>(n) + 1, BigNat{});
        // A(n,k) = A(n-1,k-1) + (n-1) A(n-1,k);  B(n,k) = B(n-1,k-1) + (2n-1) B(n-1,k)
        uint32_t mult = variant_ == ConeVariant::A ? static_cast<uint32_t>(n - 1)
                                                   : static_cast<uint32_t>(2 * n - 1);
        for (int k = 0; k <= n; ++k) {
            BigNat v;
            if (k <= n - 1) {
                v = prev[k];
                v.mul_u32(mult);
            }
            if (k >= 1) v += prev[k - 1];
            row[k] = std::move(v);
        }
    }
}

const BigNat& StirlingTable::entry(int n, int k) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("StirlingTable::entry: n out of range");
    if (k < 0 || k > n) return kZero;
    return rows_[n][k];
}

const std::vector<BigNat>& StirlingTable::row(int n) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("StirlingTable::row: n out of range");
    return rows_[n];
}

BigNat StirlingTable::row_sum(int n) const {
    const auto& r = row(n);
    BigNat s;
    for (const auto& v : r) s += v;
    return s;
}

BigNat StirlingTable::chamber_count(int n, int d) const {
    if (d < 1) throw std::invalid_argument("chamber_count: d must be >= 1");
    if (d > n) throw std::invalid_argument("chamber_count: requires d <= n");
    if (n > max_n_) throw std::out_of_range("chamber_count: n exceeds table size");
    BigNat s;
    for (int k = n - d + 1; k <= n; k += 2) {
        if (k >= 0) s += rows_[n][k];
    }
    s.mul_u32(2);
    return s;
}

std::pair<BigNat, BigNat> StirlingTable::parity_sums(int n) const {
    if (n < 2) throw std::invalid_argument("parity_sums: identity stated for n >= 2");
    if (n > max_n_) throw std::out_of_range("parity_sums: n exceeds table size");
    BigNat even, odd;
    for (int k = 0; k <= n; ++k) {
        if (k % 2 == 0) even += rows_[n][k];
        else odd += rows_[n][k];
    }
    return {std::move(even), std::move(odd)};
}

namespace {
std::mutex g_table_mutex;
std::shared_ptr<const StirlingTable> g_tables[2];
}  // namespace

std::shared_ptr<const StirlingTable> shared_stirling_table(ConeVariant variant, int min_n) {
    if (min_n < 0) throw std::invalid_argument("shared_stirling_table: min_n must be nonnegative");
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto& slot = g_tables[static_cast<int>(variant)];
    if (!slot || slot->max_n() < min_n) {
        int target = std::max(min_n, std::min(kDefaultTableMaxN, 64));
        if (slot && slot->max_n() > target) target = slot->max_n();
        slot = std::make_shared<const StirlingTable>(variant, target);
    }
    return slot;
}

}  // namespace weyl
