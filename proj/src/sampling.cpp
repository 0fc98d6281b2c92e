#include "sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace weyl {

std::vector<double> gaussian_vector(Rng& rng, int d) {
    std::vector<double> v(d);
    for (int i = 0; i < d; ++i) v[i] = rng.next_gaussian();
    return v;
}

std::vector<std::vector<double>> sample_points_stream(const SamplerConfig& cfg, uint64_t stream) {
    if (cfg.d < 1) throw std::invalid_argument("sample_points: d must be >= 1");
    if (cfg.n < 0) throw std::invalid_argument("sample_points: n must be nonnegative");
    Rng rng(cfg.seed, stream);
    std::vector<std::vector<double>> pts;
    pts.reserve(cfg.n);
    for (int i = 0; i < cfg.n; ++i) {
        std::vector<double> v = gaussian_vector(rng, cfg.d);
        if (cfg.distribution == SampleDistribution::UniformSphere) {
            double nv = 0.0;
            for (double x : v) nv += x * x;
            while (nv == 0.0) {  // astronomically unlikely; stay in-stream
                v = gaussian_vector(rng, cfg.d);
                nv = 0.0;
                for (double x : v) nv += x * x;
            }
            nv = std::sqrt(nv);
            for (double& x : v) x /= nv;
        }
        pts.push_back(std::move(v));
    }
    return pts;
}

}  // namespace weyl
