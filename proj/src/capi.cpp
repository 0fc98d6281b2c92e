#include "weylcone.h"

#include <cmath>
#include <cstring>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "arrangement.hpp"
#include "errors.hpp"
#include "functionals.hpp"
#include "geometry.hpp"
#include "limit_theorems.hpp"
#include "parallel.hpp"
#include "sdist.hpp"
#include "special_functions.hpp"
#include "stirling.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

wc_status fail(wc_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// Exceptions map onto status codes here; the C boundary never throws.
template <typename Fn>
wc_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(WC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(WC_ERR_OUT_OF_RANGE, e.what());
    } catch (const weyl::GuardError& e) {
        return fail(WC_ERR_GUARD, e.what());
    } catch (const weyl::NumericError& e) {
        return fail(WC_ERR_NUMERIC, e.what());
    } catch (const weyl::DegenerateSampleError& e) {
        return fail(WC_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(WC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(WC_ERR_INTERNAL, "unknown error");
    }
}

wc_status write_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
    if (needed) *needed = s.size();
    if (!buf) return fail(WC_ERR_INVALID_ARGUMENT, "null output buffer");
    if (cap < s.size() + 1) return fail(WC_ERR_BUFFER_TOO_SMALL, "buffer too small");
    std::memcpy(buf, s.data(), s.size());
    buf[s.size()] = '\0';
    return WC_OK;
}

weyl::ConeVariant to_variant(wc_cone_type t) {
    return t == WC_TYPE_A ? weyl::ConeVariant::A : weyl::ConeVariant::B;
}

weyl::SampleDistribution to_distribution(wc_distribution d) {
    return d == WC_DIST_GAUSSIAN ? weyl::SampleDistribution::StandardGaussian
                                 : weyl::SampleDistribution::UniformSphere;
}

}  // namespace

struct wc_stirling_table {
    std::shared_ptr<const weyl::StirlingTable> table;
};

struct wc_pmf {
    weyl::PmfVector pmf;
};

struct wc_functionals {
    weyl::FunctionalTable table;
};

struct wc_sweep {
    weyl::ConvergenceReport report;
};

struct wc_verify {
    std::vector<weyl::CriterionResult> results;
};

extern "C" {

const char* wc_version(void) { return "1.0.0"; }

const char* wc_last_error(void) { return g_last_error.c_str(); }

const char* wc_status_name(wc_status s) {
    switch (s) {
        case WC_OK: return "ok";
        case WC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case WC_ERR_OUT_OF_RANGE: return "out of range";
        case WC_ERR_NUMERIC: return "numeric failure";
        case WC_ERR_GUARD: return "guard exceeded";
        case WC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        default: return "internal error";
    }
}

wc_status wc_stirling_table_create(wc_cone_type type, int32_t max_n, wc_stirling_table** out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null output pointer");
        auto table = weyl::shared_stirling_table(to_variant(type), max_n);
        *out = new wc_stirling_table{std::move(table)};
        return WC_OK;
    });
}

void wc_stirling_table_destroy(wc_stirling_table* t) { delete t; }

int32_t wc_stirling_table_max_n(const wc_stirling_table* t) {
    return t ? t->table->max_n() : -1;
}

wc_status wc_stirling_entry(const wc_stirling_table* t, int32_t n, int32_t k, char* buf,
                            size_t cap, size_t* needed) {
    return guarded([&]() -> wc_status {
        if (!t) return fail(WC_ERR_INVALID_ARGUMENT, "null table");
        return write_string(t->table->entry(n, k).to_decimal(), buf, cap, needed);
    });
}

wc_status wc_chamber_count(const wc_stirling_table* t, int32_t n, int32_t d, char* buf, size_t cap,
                           size_t* needed) {
    return guarded([&]() -> wc_status {
        if (!t) return fail(WC_ERR_INVALID_ARGUMENT, "null table");
        return write_string(t->table->chamber_count(n, d).to_decimal(), buf, cap, needed);
    });
}

wc_status wc_parity_sums(const wc_stirling_table* t, int32_t n, char* even_buf, size_t even_cap,
                         size_t* even_needed, char* odd_buf, size_t odd_cap, size_t* odd_needed) {
    return guarded([&]() -> wc_status {
        if (!t) return fail(WC_ERR_INVALID_ARGUMENT, "null table");
        auto [even, odd] = t->table->parity_sums(n);
        wc_status s = write_string(even.to_decimal(), even_buf, even_cap, even_needed);
        if (s != WC_OK) return s;
        return write_string(odd.to_decimal(), odd_buf, odd_cap, odd_needed);
    });
}

wc_status wc_pmf_create(wc_cone_type type, int32_t n, wc_pmf** out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null output pointer");
        *out = new wc_pmf{weyl::pmf(n, to_variant(type))};
        return WC_OK;
    });
}

void wc_pmf_destroy(wc_pmf* p) { delete p; }

int32_t wc_pmf_length(const wc_pmf* p) { return p ? static_cast<int32_t>(p->pmf.probs.size()) : -1; }

wc_status wc_pmf_probs(const wc_pmf* p, double* out, size_t cap) {
    return guarded([&]() -> wc_status {
        if (!p || !out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        if (cap < p->pmf.probs.size()) return fail(WC_ERR_BUFFER_TOO_SMALL, "buffer too small");
        std::memcpy(out, p->pmf.probs.data(), p->pmf.probs.size() * sizeof(double));
        return WC_OK;
    });
}

wc_status wc_pmf_odd_tail(const wc_pmf* p, int32_t m, double* out) {
    return guarded([&]() -> wc_status {
        if (!p || !out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        *out = weyl::odd_tail_sum(p->pmf, m);
        return WC_OK;
    });
}

wc_status wc_pmf_moments(wc_cone_type type, int32_t n, double* mean, double* variance) {
    return guarded([&]() -> wc_status {
        if (!mean || !variance) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        auto m = weyl::moment_summary(n, to_variant(type));
        *mean = m.mean;
        *variance = m.variance;
        return WC_OK;
    });
}

wc_status wc_mgf_ratio(wc_cone_type type, int32_t n, double z, double* out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        *out = weyl::mgf_ratio(n, z, to_variant(type));
        return WC_OK;
    });
}

wc_status wc_psi_limit(wc_cone_type type, double z, double* out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        *out = weyl::psi_limit(z, to_variant(type));
        return WC_OK;
    });
}

wc_status wc_clt_kolmogorov(wc_cone_type type, int32_t n, double* out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        *out = weyl::clt_kolmogorov_distance(n, to_variant(type));
        return WC_OK;
    });
}

wc_status wc_normal_cdf(double x, double* out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        *out = weyl::normal_cdf(x);
        return WC_OK;
    });
}

wc_status wc_asymptotic_point(wc_cone_type type, int32_t n, double z, int32_t ell, double* out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        *out = weyl::asymptotic_point(n, z, ell, to_variant(type));
        return WC_OK;
    });
}

wc_status wc_asymptotic_odd_tail(wc_cone_type type, int32_t n, double z, double* out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        *out = weyl::asymptotic_odd_tail(n, z, to_variant(type));
        return WC_OK;
    });
}

wc_status wc_functionals_create(wc_cone_type type, int32_t n, int32_t d, wc_cone_side side,
                                wc_functional_kind kind, wc_functionals** out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null output pointer");
        auto variant = to_variant(type);
        auto cone = side == WC_CONE_WEYL ? weyl::ConeSide::Weyl : weyl::ConeSide::DualWeyl;
        auto table = weyl::shared_stirling_table(variant, n);
        weyl::FunctionalTable ft;
        switch (kind) {
            case WC_FUNC_INTRINSIC_VOLUMES:
                ft = weyl::expected_intrinsic_volumes(n, d, variant, cone, *table);
                break;
            case WC_FUNC_QUERMASSINTEGRALS:
                ft = weyl::expected_quermassintegrals(n, d, variant, cone, *table);
                break;
            default:
                ft = weyl::expected_face_numbers(n, d, variant, cone, *table);
                break;
        }
        *out = new wc_functionals{std::move(ft)};
        return WC_OK;
    });
}

void wc_functionals_destroy(wc_functionals* f) { delete f; }

int32_t wc_functionals_count(const wc_functionals* f) {
    return f ? static_cast<int32_t>(f->table.values.size()) : -1;
}

int32_t wc_functionals_k_first(const wc_functionals* f) { return f ? f->table.k_first : -1; }

wc_status wc_functionals_value(const wc_functionals* f, int32_t index, char* buf, size_t cap,
                               size_t* needed) {
    return guarded([&]() -> wc_status {
        if (!f) return fail(WC_ERR_INVALID_ARGUMENT, "null table");
        if (index < 0 || index >= static_cast<int32_t>(f->table.values.size())) {
            return fail(WC_ERR_OUT_OF_RANGE, "index out of range");
        }
        return write_string(f->table.values[index].to_string(), buf, cap, needed);
    });
}

wc_status wc_functionals_value_double(const wc_functionals* f, int32_t index, double* out) {
    return guarded([&]() -> wc_status {
        if (!f || !out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        if (index < 0 || index >= static_cast<int32_t>(f->table.values.size())) {
            return fail(WC_ERR_OUT_OF_RANGE, "index out of range");
        }
        *out = f->table.values[index].to_double();
        return WC_OK;
    });
}

wc_status wc_stat_dim(wc_cone_type type, int32_t n, int32_t d, char* buf, size_t cap,
                      size_t* needed, double* value) {
    return guarded([&]() -> wc_status {
        auto variant = to_variant(type);
        auto table = weyl::shared_stirling_table(variant, n);
        auto sd = weyl::expected_statistical_dimension(n, d, variant, *table);
        if (value) *value = sd.to_double();
        if (buf || needed) return write_string(sd.to_string(), buf, cap, needed);
        return WC_OK;
    });
}

namespace {

std::map<std::string, std::string> parse_params(const char* params) {
    std::map<std::string, std::string> out;
    if (!params) return out;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("params: expected key=value");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

weyl::RegimeSpec build_spec(const std::string& theorem, weyl::ConeVariant variant,
                            const std::map<std::string, std::string>& kv) {
    weyl::RegimeSpec spec;
    spec.variant = variant;
    auto get = [&](const char* key, double fallback, bool* present = nullptr) {
        auto it = kv.find(key);
        if (present) *present = it != kv.end();
        return it == kv.end() ? fallback : std::stod(it->second);
    };
    bool has_x = false, has_c = false, has_alpha = false;
    double x = get("x", 0.0, &has_x);
    double c = get("c", 0.0, &has_c);
    double alpha = get("alpha", 0.0, &has_alpha);
    spec.x = x;
    spec.c = c;
    spec.alpha = alpha;
    spec.y = get("y", 0.0);
    spec.k = static_cast<int>(get("k", 1.0));

    if (theorem == "4.1") {
        spec.kind = weyl::RegimeKind::FaceRatio;
        auto mode = kv.find("mode");
        if (mode != kv.end()) {
            if (mode->second == "sublinear") spec.k_mode = weyl::FaceKMode::Sublinear;
            else if (mode->second == "linear") spec.k_mode = weyl::FaceKMode::Linear;
            else if (mode->second == "nearn") spec.k_mode = weyl::FaceKMode::NearN;
            else if (mode->second == "critical") spec.k_mode = weyl::FaceKMode::Critical;
            else throw std::invalid_argument("unknown k mode: " + mode->second);
        } else if (has_c) {
            spec.k_mode = weyl::FaceKMode::NearN;
        } else if (has_alpha) {
            spec.k_mode = x > 1.0 ? weyl::FaceKMode::Linear : weyl::FaceKMode::Critical;
        } else {
            spec.k_mode = weyl::FaceKMode::Sublinear;
        }
    } else if (theorem == "4.2") {
        spec.kind = weyl::RegimeKind::FaceLdp;
    } else if (theorem == "5.1") {
        spec.kind = weyl::RegimeKind::IvLdp;
    } else if (theorem == "5.3") {
        spec.kind = weyl::RegimeKind::IvLaw;
        if (!has_x && has_c) {
            spec.critical = true;
            spec.crit_c = c;
        }
    } else if (theorem == "5.4") {
        spec.kind = weyl::RegimeKind::QuermassFixedK;
    } else if (theorem == "5.5") {
        spec.kind = weyl::RegimeKind::QuermassGrowingK;
    } else if (theorem == "6.1") {
        spec.kind = weyl::RegimeKind::StatDim;
        if (!has_x && has_c) {
            spec.critical = true;
            spec.crit_c = c;
        }
    } else {
        throw std::invalid_argument("unknown theorem: " + theorem);
    }
    return spec;
}

}  // namespace

wc_status wc_sweep_create(const char* theorem, wc_cone_type type, const char* params,
                          const int64_t* n_list, size_t n_count, wc_sweep** out) {
    return guarded([&]() -> wc_status {
        if (!out || !theorem) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        auto kv = parse_params(params);
        auto spec = build_spec(theorem, to_variant(type), kv);
        std::vector<long long> ns;
        for (size_t i = 0; i < n_count; ++i) ns.push_back(n_list[i]);
        auto report = weyl::convergence_sweep(spec, ns, weyl::global_pmf_cache());
        *out = new wc_sweep{std::move(report)};
        return WC_OK;
    });
}

void wc_sweep_destroy(wc_sweep* s) { delete s; }

size_t wc_sweep_row_count(const wc_sweep* s) { return s ? s->report.rows.size() : 0; }

wc_status wc_sweep_get_row(const wc_sweep* s, size_t index, wc_sweep_row* out) {
    return guarded([&]() -> wc_status {
        if (!s || !out) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        if (index >= s->report.rows.size()) return fail(WC_ERR_OUT_OF_RANGE, "row out of range");
        const auto& row = s->report.rows[index];
        out->n = row.n;
        out->d = row.realized.d;
        out->k = row.realized.has_k ? row.realized.k : -1;
        out->realized_x = row.realized.realized_x;
        out->realized_y = row.realized.realized_y;
        out->realized_c = row.realized.realized_c;
        out->realized_alpha = row.realized.realized_alpha;
        out->clamped = row.realized.clamped ? 1 : 0;
        out->finite_value = row.finite_value;
        out->predicted_limit = row.predicted_limit;
        out->gap = row.gap;
        out->gap_is_relative = row.gap_is_relative ? 1 : 0;
        out->ok = row.ok ? 1 : 0;
        return WC_OK;
    });
}

wc_status wc_sweep_row_message(const wc_sweep* s, size_t index, char* buf, size_t cap,
                               size_t* needed) {
    return guarded([&]() -> wc_status {
        if (!s) return fail(WC_ERR_INVALID_ARGUMENT, "null sweep");
        if (index >= s->report.rows.size()) return fail(WC_ERR_OUT_OF_RANGE, "row out of range");
        return write_string(s->report.rows[index].message, buf, cap, needed);
    });
}

wc_status wc_simulate(wc_cone_type type, int32_t n, int32_t d, const char* functional, int32_t k,
                      wc_cone_side side, int64_t samples, uint64_t seed, int32_t threads,
                      wc_distribution dist, wc_mc_estimate* out, size_t cap, size_t* written) {
    return guarded([&]() -> wc_status {
        if (!functional || !out || !written) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        auto variant = to_variant(type);
        weyl::SamplerConfig cfg{to_distribution(dist), seed, d, n};
        int t = threads > 0 ? threads : weyl::default_thread_count();
        std::string fn(functional);
        std::vector<wc_mc_estimate> rows;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        bool exact_available = n <= weyl::kDefaultTableMaxN;
        std::shared_ptr<const weyl::StirlingTable> table;
        if (exact_available) table = weyl::shared_stirling_table(variant, n);

        auto convert = [&](const weyl::MCEstimate& e, int32_t idx, double exact, bool has_exact) {
            wc_mc_estimate row;
            row.k = idx;
            row.mean = e.mean;
            row.std_error = e.stderr_;
            row.samples = e.samples;
            row.accepted_fraction = e.accepted_fraction.value_or(nan);
            row.seed = e.seed;
            row.exact_value = has_exact ? exact : nan;
            row.has_exact = has_exact ? 1 : 0;
            return row;
        };

        if (fn == "iv") {
            int gpc = 100;
            long long cones = std::max<long long>(2, samples / gpc);
            auto est = weyl::mc_intrinsic_volumes(cfg, variant, cones, gpc, t);
            weyl::FunctionalTable ft;
            if (exact_available) {
                ft = weyl::expected_intrinsic_volumes(n, d, variant, weyl::ConeSide::DualWeyl,
                                                      *table);
            }
            for (int j = 0; j <= d; ++j) {
                double exact = exact_available ? ft.at_k(j).to_double() : nan;
                rows.push_back(convert(est[j], j, exact, exact_available));
            }
        } else if (fn == "faces") {
            auto est = weyl::mc_face_numbers(cfg, variant, k, samples, t);
            double exact = nan;
            if (exact_available) {
                exact = weyl::expected_face_numbers(n, d, variant, weyl::ConeSide::DualWeyl, *table)
                            .at_k(k)
                            .to_double();
            }
            rows.push_back(convert(est, k, exact, exact_available));
        } else if (fn == "quermass") {
            auto source = side == WC_CONE_WEYL ? weyl::QuermassSource::WeylChamber
                                               : weyl::QuermassSource::DualWeyl;
            auto est = weyl::mc_quermassintegral(cfg, variant, k, source, samples, t);
            double exact = nan;
            if (exact_available) {
                auto cone = side == WC_CONE_WEYL ? weyl::ConeSide::Weyl : weyl::ConeSide::DualWeyl;
                auto ft = weyl::expected_quermassintegrals(n, d, variant, cone, *table);
                if (k >= ft.k_first && k <= ft.k_last()) exact = ft.at_k(k).to_double();
            }
            rows.push_back(convert(est, k, exact, exact_available && !std::isnan(exact)));
        } else if (fn == "statdim") {
            auto est = weyl::mc_statistical_dimension(cfg, variant, samples, t);
            double exact = nan;
            if (exact_available) {
                exact = weyl::expected_statistical_dimension(n, d, variant, *table).to_double();
            }
            rows.push_back(convert(est.face_dimension, -1, exact, exact_available));
            rows.push_back(convert(est.norm_squared, -2, exact, exact_available));
        } else {
            return fail(WC_ERR_INVALID_ARGUMENT, "unknown functional: " + fn);
        }

        *written = rows.size();
        if (cap < rows.size()) return fail(WC_ERR_BUFFER_TOO_SMALL, "estimate buffer too small");
        std::memcpy(out, rows.data(), rows.size() * sizeof(wc_mc_estimate));
        return WC_OK;
    });
}

wc_status wc_tessellate_count(wc_cone_type type, int32_t n, int32_t d, uint64_t seed,
                              wc_distribution dist, int64_t* chambers) {
    return guarded([&]() -> wc_status {
        if (!chambers) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        weyl::SamplerConfig cfg{to_distribution(dist), seed, d, n};
        for (uint64_t attempt = 0; attempt < 64; ++attempt) {
            try {
                auto pts = weyl::sample_points_stream(cfg, attempt);
                auto arr = weyl::build_weyl_arrangement(pts, to_variant(type));
                if (arr.degenerate) continue;
                *chambers = static_cast<int64_t>(weyl::enumerate_chambers(arr, seed).size());
                return WC_OK;
            } catch (const weyl::DegenerateSampleError&) {
            }
        }
        return fail(WC_ERR_NUMERIC, "persistent degenerate samples");
    });
}

wc_status wc_tessellate_verify(wc_cone_type type, int32_t n, int32_t d, const uint64_t* seeds,
                               size_t n_seeds, wc_distribution dist, int32_t* all_match,
                               int64_t* counts) {
    return guarded([&]() -> wc_status {
        if (!seeds || !all_match) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        std::vector<uint64_t> sv(seeds, seeds + n_seeds);
        auto res = weyl::verify_chamber_count(n, d, to_variant(type), sv, to_distribution(dist));
        *all_match = res.all_match ? 1 : 0;
        if (counts) {
            for (size_t i = 0; i < n_seeds; ++i) counts[i] = res.enumerated[i];
        }
        return WC_OK;
    });
}

wc_status wc_tessellate_signs(wc_cone_type type, int32_t n, int32_t d, uint64_t seed,
                              wc_distribution dist, char* buf, size_t cap, size_t* needed) {
    return guarded([&]() -> wc_status {
        weyl::SamplerConfig cfg{to_distribution(dist), seed, d, n};
        auto pts = weyl::sample_points_stream(cfg, 0);
        auto arr = weyl::build_weyl_arrangement(pts, to_variant(type));
        auto chambers = weyl::enumerate_chambers(arr, seed);
        std::string text;
        for (const auto& ch : chambers) {
            for (int8_t s : ch.signs) text += s > 0 ? '+' : '-';
            text += '\n';
        }
        return write_string(text, buf, cap, needed);
    });
}

wc_status wc_tessellate_face_average(wc_cone_type type, int32_t n, int32_t d, int32_t k,
                                     uint64_t seed, wc_distribution dist, double* average,
                                     int64_t* chambers) {
    return guarded([&]() -> wc_status {
        if (!average) return fail(WC_ERR_INVALID_ARGUMENT, "null argument");
        weyl::SamplerConfig cfg{to_distribution(dist), seed, d, n};
        auto pts = weyl::sample_points_stream(cfg, 0);
        auto arr = weyl::build_weyl_arrangement(pts, to_variant(type));
        auto cells = weyl::enumerate_chambers(arr, seed);
        long long total = 0;
        for (const auto& cell : cells) total += weyl::count_chamber_faces(cell, arr, k);
        *average = static_cast<double>(total) / static_cast<double>(cells.size());
        if (chambers) *chambers = static_cast<int64_t>(cells.size());
        return WC_OK;
    });
}

wc_status wc_verify_run(uint64_t seed, int32_t threads, int32_t verbose, wc_verify** out) {
    return guarded([&]() -> wc_status {
        if (!out) return fail(WC_ERR_INVALID_ARGUMENT, "null output pointer");
        weyl::AcceptanceOptions opt;
        if (seed != 0) opt.seed = seed;
        opt.threads = threads;
        auto results = weyl::run_acceptance(opt, verbose ? &std::cerr : nullptr);
        *out = new wc_verify{std::move(results)};
        return WC_OK;
    });
}

void wc_verify_destroy(wc_verify* v) { delete v; }

size_t wc_verify_count(const wc_verify* v) { return v ? v->results.size() : 0; }

wc_status wc_verify_item(const wc_verify* v, size_t index, int32_t* id, int32_t* passed,
                         double* seconds, char* name_buf, size_t name_cap, size_t* name_needed,
                         char* detail_buf, size_t detail_cap, size_t* detail_needed) {
    return guarded([&]() -> wc_status {
        if (!v) return fail(WC_ERR_INVALID_ARGUMENT, "null handle");
        if (index >= v->results.size()) return fail(WC_ERR_OUT_OF_RANGE, "index out of range");
        const auto& r = v->results[index];
        if (id) *id = r.id;
        if (passed) *passed = r.passed ? 1 : 0;
        if (seconds) *seconds = r.seconds;
        if (name_buf || name_needed) {
            wc_status s = write_string(r.name, name_buf, name_cap, name_needed);
            if (s != WC_OK) return s;
        }
        if (detail_buf || detail_needed) {
            return write_string(r.detail, detail_buf, detail_cap, detail_needed);
        }
        return WC_OK;
    });
}

int32_t wc_verify_all_passed(const wc_verify* v) {
    if (!v) return 0;
    for (const auto& r : v->results) {
        if (!r.passed) return 0;
    }
    return 1;
}

}  // extern "C"
