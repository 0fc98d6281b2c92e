#include "arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "lp.hpp"
#include "nnls.hpp"
#include "stirling.hpp"

namespace weyl {

namespace {

constexpr double kParallelTol = 1e-9;
constexpr double kWitnessMargin = 1e-9;
constexpr double kBigBox = 1e6;

std::vector<double> unit_normal(std::vector<double> v) {
    double n = norm2(v);
    if (n < 1e-12) throw DegenerateSampleError("arrangement: zero normal");
    for (double& x : v) x /= n;
    return v;
}

bool parallel(const std::vector<double>& a, const std::vector<double>& b) {
    return std::fabs(std::fabs(dot(a, b)) - 1.0) < kParallelTol;
}

}  // namespace

HyperplaneArrangement build_weyl_arrangement(const std::vector<std::vector<double>>& points,
                                             ConeVariant variant) {
    int n = static_cast<int>(points.size());
    int min_n = variant == ConeVariant::A ? 2 : 1;
    if (n < min_n) throw std::invalid_argument("build_weyl_arrangement: too few points");
    int d = static_cast<int>(points[0].size());
    if (d < 1) throw std::invalid_argument("build_weyl_arrangement: d must be >= 1");

    HyperplaneArrangement arr;
    arr.d = d;
    arr.variant = variant;
    arr.source_n = n;
    auto push = [&](std::vector<double> v) {
        v = unit_normal(std::move(v));
        for (const auto& existing : arr.normals) {
            if (parallel(existing, v)) {
                arr.degenerate = true;
                return;  // deduplicate the flagged parallel
            }
        }
        arr.normals.push_back(std::move(v));
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<double> diff(d);
            for (int t = 0; t < d; ++t) diff[t] = points[i][t] - points[j][t];
            push(std::move(diff));
            if (variant == ConeVariant::B) {
                std::vector<double> sum(d);
                for (int t = 0; t < d; ++t) sum[t] = points[i][t] + points[j][t];
                push(std::move(sum));
            }
        }
    }
    if (variant == ConeVariant::B) {
        for (int i = 0; i < n; ++i) push(points[i]);
    }
    return arr;
}

namespace {

// Nonemptiness certificate from the normalization signs_j <u, n_j> >= 1 over
// a large box; the feasible point doubles as an interior witness with
// absolute margin >= 1 against every (unit) normal.
LpResult chamber_certificate(const HyperplaneArrangement& arr,
                             const std::vector<int8_t>& signs) {
    int d = arr.d;
    LpProblem p(d);
    for (int i = 0; i < d; ++i) {
        p.lower[i] = -kBigBox;
        p.upper[i] = kBigBox;
    }
    for (std::size_t j = 0; j < arr.normals.size(); ++j) {
        std::vector<double> row(d);
        for (int i = 0; i < d; ++i) row[i] = signs[j] * arr.normals[j][i];
        p.add_row(std::move(row), LpRel::Ge, 1.0);
    }
    return solve_lp(p);
}

bool strictly_satisfies(const HyperplaneArrangement& arr, const std::vector<int8_t>& signs,
                        const std::vector<double>& u, double margin) {
    for (std::size_t j = 0; j < arr.normals.size(); ++j) {
        if (signs[j] * dot(u, arr.normals[j]) <= margin) return false;
    }
    return true;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const HyperplaneArrangement& arr, uint64_t seed) {
    int m = static_cast<int>(arr.normals.size());
    if (m > kMaxArrangementHyperplanes) {
        throw GuardError("enumerate_chambers: hyperplane guard exceeded");
    }
    if (m == 0) throw std::invalid_argument("enumerate_chambers: empty arrangement");

    // Generic starting witness.
    Rng rng(seed, stream_id(0x57A7u, 0));
    std::vector<double> u;
    std::vector<int8_t> start(m);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 256) throw NumericError("enumerate_chambers: no generic start witness");
        u = gaussian_vector(rng, arr.d);
        bool generic = true;
        for (int j = 0; j < m; ++j) {
            double s = dot(u, arr.normals[j]);
            if (std::fabs(s) <= kWitnessMargin) {
                generic = false;
                break;
            }
            start[j] = s > 0 ? 1 : -1;
        }
        if (generic) break;
    }

    std::map<std::vector<int8_t>, Chamber> seen;
    std::set<std::vector<int8_t>> rejected;
    std::queue<std::vector<int8_t>> frontier;

    // `hint`, when it already strictly satisfies the candidate sign vector,
    // certifies nonemptiness without an LP (reflection fast path).
    auto admit = [&](const std::vector<int8_t>& signs,
                     const std::vector<double>* hint) -> bool {
        if (seen.count(signs) || rejected.count(signs)) return false;
        Chamber c;
        c.signs = signs;
        if (hint && strictly_satisfies(arr, signs, *hint, 1e-7)) {
            c.witness = *hint;
        } else {
            LpResult w = chamber_certificate(arr, signs);
            if (w.status != LpStatus::Optimal) {
                rejected.insert(signs);
                return false;
            }
            c.witness = std::move(w.x);
        }
        seen.emplace(signs, std::move(c));
        frontier.push(signs);
        return true;
    };

    if (!admit(start, &u)) throw NumericError("enumerate_chambers: start chamber rejected");
    while (!frontier.empty()) {
        std::vector<int8_t> cur = frontier.front();
        frontier.pop();
        const std::vector<double>& w = seen.at(cur).witness;
        for (int j = 0; j < m; ++j) {
            cur[j] = static_cast<int8_t>(-cur[j]);
            // Mirror the witness across hyperplane j as the neighbor hint.
            double s = dot(w, arr.normals[j]);
            std::vector<double> mirrored(w);
            for (int i = 0; i < arr.d; ++i) mirrored[i] -= 2.0 * s * arr.normals[j][i];
            admit(cur, &mirrored);
            cur[j] = static_cast<int8_t>(-cur[j]);
        }
        if (static_cast<long long>(seen.size()) > kMaxChambers) {
            throw GuardError("enumerate_chambers: chamber guard exceeded");
        }
    }

    std::vector<Chamber> out;
    out.reserve(seen.size());
    for (auto& [signs, chamber] : seen) out.push_back(std::move(chamber));
    return out;
}

Chamber uniform_chamber_from_stream(const HyperplaneArrangement& arr, uint64_t seed,
                                    uint64_t stream) {
    auto chambers = enumerate_chambers(arr, seed);
    Rng rng(seed, stream);
    return chambers[rng.next_index(chambers.size())];
}

Chamber uniform_chamber(const HyperplaneArrangement& arr, uint64_t seed) {
    return uniform_chamber_from_stream(arr, seed, stream_id(0xC4A3u, 1));
}

long long count_chamber_faces(const Chamber& chamber, const HyperplaneArrangement& arr, int k) {
    int d = arr.d;
    int m = static_cast<int>(arr.normals.size());
    if (d > kChamberFaceMaxDim) throw GuardError("count_chamber_faces: dimension guard");
    if (m > kChamberFaceMaxHyperplanes) throw GuardError("count_chamber_faces: hyperplane guard");
    if (k < 0 || k > d) throw std::invalid_argument("count_chamber_faces: k out of range");

    long long count = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        // Tight set T = mask; the candidate face has dimension d - rank(T).
        Matrix tight(d, static_cast<int>(std::popcount(mask)));
        int col = 0;
        for (int j = 0; j < m; ++j) {
            if (mask & (uint32_t{1} << j)) {
                for (int i = 0; i < d; ++i) tight.at(i, col) = arr.normals[j][i];
                ++col;
            }
        }
        int rank = col == 0 ? 0 : column_rank(tight);
        if (rank != d - k) continue;

        LpProblem p(d);
        for (int i = 0; i < d; ++i) {
            p.lower[i] = -kBigBox;
            p.upper[i] = kBigBox;
        }
        for (int j = 0; j < m; ++j) {
            std::vector<double> row(arr.normals[j]);
            if (mask & (uint32_t{1} << j)) {
                p.add_row(std::move(row), LpRel::Eq, 0.0);
            } else {
                for (double& v : row) v *= chamber.signs[j];
                p.add_row(std::move(row), LpRel::Ge, 1.0);
            }
        }
        if (lp_feasible(p)) ++count;
    }
    return count;
}

ChamberVerification verify_chamber_count(int n, int d, ConeVariant variant,
                                         const std::vector<uint64_t>& seeds,
                                         SampleDistribution distribution) {
    auto table = shared_stirling_table(variant, n);
    ChamberVerification out;
    out.expected = table->chamber_count(n, d).to_decimal();
    out.seeds = seeds;
    out.all_match = true;
    for (uint64_t seed : seeds) {
        SamplerConfig cfg{distribution, seed, d, n};
        long long enumerated = -1;
        for (uint64_t attempt = 0; attempt < 64; ++attempt) {
            try {
                auto pts = sample_points_stream(cfg, attempt);
                auto arr = build_weyl_arrangement(pts, variant);
                if (arr.degenerate) throw DegenerateSampleError("parallel normals");
                enumerated = static_cast<long long>(enumerate_chambers(arr, seed).size());
                break;
            } catch (const DegenerateSampleError&) {
                ++out.redraws;
            }
        }
        out.enumerated.push_back(enumerated);
        if (std::to_string(enumerated) != out.expected) out.all_match = false;
    }
    return out;
}

ChamberProjection project_onto_chamber(const HyperplaneArrangement& arr, const Chamber& chamber,
                                       const std::vector<double>& point) {
    int d = arr.d;
    int m = static_cast<int>(arr.normals.size());
    // The chamber C = {u : s_j <u, n_j> >= 0} is the polar of
    // K = pos{-s_j n_j}; project onto K and use x = P_K x + P_C x.
    Matrix gens(d, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < d; ++i) gens.at(i, j) = -chamber.signs[j] * arr.normals[j][i];
    NnlsResult onto_k = nnls_project(gens, point);
    ChamberProjection out;
    out.projection.resize(d);
    for (int i = 0; i < d; ++i) out.projection[i] = point[i] - onto_k.projection[i];

    double pn = norm2(out.projection);
    if (pn < 1e-12) {
        out.face_dimension = 0;
        return out;
    }
    std::vector<int> tight_idx;
    double tol = 1e-8 * std::max(1.0, pn);
    for (int j = 0; j < m; ++j) {
        if (std::fabs(dot(out.projection, arr.normals[j])) <= tol) tight_idx.push_back(j);
    }
    if (tight_idx.empty()) {
        out.face_dimension = d;
        return out;
    }
    Matrix tight(d, static_cast<int>(tight_idx.size()));
    for (int c = 0; c < tight.cols; ++c)
        for (int i = 0; i < d; ++i) tight.at(i, c) = arr.normals[tight_idx[c]][i];
    out.face_dimension = d - column_rank(tight);
    return out;
}

bool chamber_meets_subspace(const HyperplaneArrangement& arr, const Chamber& chamber,
                            const Matrix& subspace_basis, int w) {
    int d = arr.d;
    int m = static_cast<int>(arr.normals.size());
    if (w <= 0) return false;   // the zero subspace
    if (w >= d) return true;    // full space always meets a full-dimensional cone
    // y parametrizes the subspace; the cone meets it nontrivially iff
    // {y : B y >= 0} is larger than {0}, B_{j.} = s_j n_j^T Q.
    Matrix b(m, w);
    for (int j = 0; j < m; ++j) {
        for (int c = 0; c < w; ++c) {
            double s = 0.0;
            for (int i = 0; i < d; ++i) s += arr.normals[j][i] * subspace_basis.at(i, c);
            b.at(j, c) = chamber.signs[j] * s;
        }
    }
    for (int c = 0; c < w; ++c) {
        for (int sgn = -1; sgn <= 1; sgn += 2) {
            LpProblem p(w);
            for (int i = 0; i < w; ++i) {
                p.lower[i] = -1.0;
                p.upper[i] = 1.0;
            }
            p.objective[c] = sgn;
            for (int j = 0; j < m; ++j) {
                std::vector<double> row(w);
                for (int i = 0; i < w; ++i) row[i] = b.at(j, i);
                p.add_row(std::move(row), LpRel::Ge, 0.0);
            }
            LpResult r = solve_lp(p);
            if (r.status == LpStatus::Optimal && std::fabs(r.objective) > 1e-9) return true;
        }
    }
    return false;
}

}  // namespace weyl
