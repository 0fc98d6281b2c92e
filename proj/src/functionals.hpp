#pragma once

#include <vector>

#include "cone_type.hpp"
#include "rational.hpp"
#include "stirling.hpp"

namespace weyl {

enum class FunctionalKind : int { IntrinsicVolumes = 0, Quermassintegrals = 1, FaceNumbers = 2 };

inline const char* functional_kind_name(FunctionalKind k) {
    switch (k) {
        case FunctionalKind::IntrinsicVolumes: return "iv";
        case FunctionalKind::Quermassintegrals: return "quermass";
        default: return "faces";
    }
}

// One exact expected-functional vector for a cone family at (n, d).
// values[i] belongs to index k = k_first + i.
struct FunctionalTable {
    int n = 0;
    int d = 0;
    ConeVariant variant = ConeVariant::A;
    ConeSide cone = ConeSide::Weyl;
    FunctionalKind kind = FunctionalKind::IntrinsicVolumes;
    int k_first = 0;
    std::vector<BigRational> values;

    int k_last() const { return k_first + static_cast<int>(values.size()) - 1; }
    const BigRational& at_k(int k) const { return values.at(static_cast<std::size_t>(k - k_first)); }
};

// All four requiring 1 <= d <= n-1 and a table covering n.

// Weyl: v_k = entry(n, n-d+k)/D(n,d) for k in {1..d},
//       v_0 = (D(n,d) - D(n,d-1)) / (2 D(n,d)).
// Dual: v_k = entry(n, n-k)/D(n,d) for k in {0..d-1}, v_d as the Weyl v_0.
FunctionalTable expected_intrinsic_volumes(int n, int d, ConeVariant variant, ConeSide cone,
                                           const StirlingTable& table);

// Weyl: U_k = D(n, d-k) / (2 D(n,d)), k in {0..d-1}, with D(n,0) := 0.
// Dual: U_k = (D(n,d) - D(n,k)) / (2 D(n,d)), k in {1..d}.
FunctionalTable expected_quermassintegrals(int n, int d, ConeVariant variant, ConeSide cone,
                                           const StirlingTable& table);

// Weyl: f_k = C(n+1-2s, d-k) D(n-d+k, k) / (s^{d-k} D(n,d)) * n!/(n-d+k)!, k in {1..d}.
// Dual: f_k = C(n+1-2s, k) D(n-k, d-k) / (s^k D(n,d)) * n!/(n-k)!, k in {0..d-1}.
FunctionalTable expected_face_numbers(int n, int d, ConeVariant variant, ConeSide cone,
                                      const StirlingTable& table);

// sum_{l=0..d} (d-l) entry(n, n-l) / D(n,d); equals sum_k k v_k(Weyl).
BigRational expected_statistical_dimension(int n, int d, ConeVariant variant,
                                           const StirlingTable& table);

// The same via the intrinsic-volume route; used as an internal cross-check.
BigRational statistical_dimension_via_iv(int n, int d, ConeVariant variant,
                                         const StirlingTable& table);

}  // namespace weyl
