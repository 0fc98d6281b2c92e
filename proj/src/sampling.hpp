#pragma once

#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace weyl {

enum class SampleDistribution : int { StandardGaussian = 0, UniformSphere = 1 };

inline const char* distribution_name(SampleDistribution d) {
    return d == SampleDistribution::StandardGaussian ? "gaussian" : "sphere";
}

struct SamplerConfig {
    SampleDistribution distribution = SampleDistribution::StandardGaussian;
    uint64_t seed = 0;
    int d = 0;  // ambient dimension
    int n = 0;  // number of points
};

// n i.i.d. points in R^d, deterministic given (cfg, stream). Gaussian
// coordinates, optionally normalized to the unit sphere (zero vectors are
// redrawn inside the same stream).
std::vector<std::vector<double>> sample_points_stream(const SamplerConfig& cfg, uint64_t stream);

inline std::vector<std::vector<double>> sample_points(const SamplerConfig& cfg) {
    return sample_points_stream(cfg, 0);
}

std::vector<double> gaussian_vector(Rng& rng, int d);

}  // namespace weyl
