#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cone_type.hpp"
#include "linalg.hpp"
#include "sampling.hpp"

namespace weyl {

// Central hyperplane arrangement built from sampled points: normals
// Y_i - Y_j (type A), plus Y_i + Y_j and Y_i (type B), unit-normalized.
struct HyperplaneArrangement {
    int d = 0;
    ConeVariant variant = ConeVariant::A;
    int source_n = 0;
    std::vector<std::vector<double>> normals;
    bool degenerate = false;  // parallel normals were detected (and deduplicated)
};

// A full-dimensional cell: sign per hyperplane plus a strict interior witness.
struct Chamber {
    std::vector<int8_t> signs;
    std::vector<double> witness;
};

inline constexpr int kMaxArrangementHyperplanes = 40;
inline constexpr long long kMaxChambers = 1000000;
inline constexpr int kChamberFaceMaxDim = 3;
inline constexpr int kChamberFaceMaxHyperplanes = 12;

// Builds and unit-normalizes all normals. A zero normal raises
// DegenerateSampleError; pairwise-parallel normals set `degenerate` and are
// deduplicated. Requires n >= 2 (A) / n >= 1 (B) and d >= 1.
HyperplaneArrangement build_weyl_arrangement(const std::vector<std::vector<double>>& points,
                                             ConeVariant variant);

// Breadth-first sign-flip enumeration from a random generic witness; each
// candidate sign vector is certified nonempty by an LP. The chamber set is
// independent of seed and starting witness. Guards: <= 40 hyperplanes and
// <= 1e6 chambers.
std::vector<Chamber> enumerate_chambers(const HyperplaneArrangement& arr, uint64_t seed = 0);

// Uniform pick among the enumerated chambers.
Chamber uniform_chamber(const HyperplaneArrangement& arr, uint64_t seed);
// Same, with the picking randomness drawn from an explicit stream.
Chamber uniform_chamber_from_stream(const HyperplaneArrangement& arr, uint64_t seed,
                                    uint64_t stream);

// Number of k-faces of the chamber cone {u : signs_j <u, n_j> >= 0}, counted
// by tight-set enumeration with LP relative-interior witnesses. Hard guards:
// d <= 3 and <= 12 hyperplanes. When the arrangement has a lineality space
// there is no 0-face and the count for k = 0 is 0.
long long count_chamber_faces(const Chamber& chamber, const HyperplaneArrangement& arr, int k);

struct ChamberVerification {
    std::string expected;                // formula value, decimal
    std::vector<long long> enumerated;   // one count per seed
    std::vector<uint64_t> seeds;
    int redraws = 0;                     // degenerate samples redrawn
    bool all_match = false;
};

// Samples points per seed, enumerates, compares against the exact chamber
// count D(n,d). Degenerate draws are redrawn (counted, not patched).
ChamberVerification verify_chamber_count(int n, int d, ConeVariant variant,
                                         const std::vector<uint64_t>& seeds,
                                         SampleDistribution distribution);

// Metric projection of a point onto the chamber cone via the polar
// decomposition; returns the projection and the dimension of the face whose
// relative interior contains it.
struct ChamberProjection {
    std::vector<double> projection;
    int face_dimension = 0;
};
ChamberProjection project_onto_chamber(const HyperplaneArrangement& arr, const Chamber& chamber,
                                       const std::vector<double>& point);

// True when the chamber meets the column span of `subspace` (d x w,
// orthonormal) in more than the origin.
bool chamber_meets_subspace(const HyperplaneArrangement& arr, const Chamber& chamber,
                            const Matrix& subspace_basis, int w);

}  // namespace weyl
