#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cone_type.hpp"
#include "linalg.hpp"
#include "sampling.hpp"

namespace weyl {

enum class GeneratorProvenance { TypeA_differences, TypeB_differences_plus_last, Explicit };

// A sampled cone as its generator matrix (columns in R^d).
struct ConeGenerators {
    int d = 0;
    int m = 0;
    Matrix columns;  // d x m
    ConeVariant variant = ConeVariant::A;
    GeneratorProvenance provenance = GeneratorProvenance::Explicit;

    std::vector<double> column(int j) const {
        std::vector<double> c(d);
        for (int i = 0; i < d; ++i) c[i] = columns.at(i, j);
        return c;
    }
};

struct ProjectionResult {
    std::vector<double> projection;
    std::vector<double> coefficients;
    int face_dimension = 0;
};

struct MCEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long long samples = 0;  // independent top-level samples (clusters)
    std::optional<double> accepted_fraction;
    uint64_t seed = 0;
};

inline constexpr int kFaceCountMaxGenerators = 14;
inline constexpr long long kDefaultAttemptCap = 1000000;

// Difference generators: Y_1-Y_2, ..., Y_{n-1}-Y_n (type A), with Y_n
// appended for type B. Throws DegenerateSampleError on a zero column.
ConeGenerators build_generators(const std::vector<std::vector<double>>& points,
                                ConeVariant variant);

// pos(columns) == R^d, decided through the dual cone: it is {0} iff every
// +-coordinate objective over {V^T u <= 0, -1 <= u <= 1} stays below 1e-9.
bool is_full_space(const ConeGenerators& gens);

// Rejection-samples point sets until the positive hull is a proper cone.
struct SampledCone {
    ConeGenerators generators;
    long long attempts = 0;
};
SampledCone sample_dual_weyl_cone(const SamplerConfig& cfg, ConeVariant variant,
                                  uint64_t sample_index = 0,
                                  long long attempt_cap = kDefaultAttemptCap);

// Number of k-faces of pos(columns): k-subsets spanning k dimensions that
// admit a strictly supporting hyperplane. Guards: m <= 14, 1 <= k <= d-1.
// Raises DegenerateSampleError when the cone is not pointed.
long long count_faces(const ConeGenerators& gens, int k);

// Nearest point of the cone; Lawson-Hanson NNLS under the hood.
ProjectionResult metric_projection(const ConeGenerators& gens,
                                   const std::vector<double>& point);

// Monte Carlo estimators. All deterministic given (cfg.seed, sample count);
// results are independent of the thread count.
std::vector<MCEstimate> mc_intrinsic_volumes(const SamplerConfig& cfg, ConeVariant variant,
                                             long long cone_samples, int gaussians_per_cone,
                                             int threads = 1);

enum class QuermassSource { DualWeyl, WeylChamber };
MCEstimate mc_quermassintegral(const SamplerConfig& cfg, ConeVariant variant, int k,
                               QuermassSource source, long long samples, int threads = 1);

MCEstimate mc_face_numbers(const SamplerConfig& cfg, ConeVariant variant, int k,
                           long long samples, int threads = 1);

struct StatDimEstimate {
    MCEstimate face_dimension;  // primary: mean projected-face dimension
    MCEstimate norm_squared;    // cross-check: mean squared projection norm
};
StatDimEstimate mc_statistical_dimension(const SamplerConfig& cfg, ConeVariant variant,
                                         long long samples, int threads = 1);

}  // namespace weyl
