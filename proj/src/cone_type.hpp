#pragma once

#include <string>

#include "rational.hpp"

namespace weyl {

// The two reflection families. Type A carries sigma = 1, type B sigma = 1/2;
// sigma is the Bernoulli weight scale that threads through every formula.
enum class ConeVariant : int { A = 0, B = 1 };

inline double sigma_of(ConeVariant v) { return v == ConeVariant::A ? 1.0 : 0.5; }
inline int sigma_den_of(ConeVariant v) { return v == ConeVariant::A ? 1 : 2; }
inline BigRational sigma_rational(ConeVariant v) {
    return v == ConeVariant::A ? BigRational(1) : BigRational(1, BigNat(1), BigNat(2));
}
inline const char* variant_name(ConeVariant v) { return v == ConeVariant::A ? "A" : "B"; }

// Which cone of the dual pair a functional refers to: the uniformly chosen
// tessellation cell (Weyl) or its dual, the conditioned positive hull.
enum class ConeSide : int { Weyl = 0, DualWeyl = 1 };

inline const char* cone_side_name(ConeSide s) { return s == ConeSide::Weyl ? "weyl" : "dual"; }

}  // namespace weyl
