// weylcone command-line front end. Talks to the library exclusively through
// the C API in weylcone.h.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylcone.h"

using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(wc_status s) {
    if (s != WC_OK) {
        throw CliError(std::string(wc_status_name(s)) + ": " + wc_last_error());
    }
}

template <typename F>
std::string wc_string(F&& f) {
    std::string buf(128, '\0');
    size_t needed = 0;
    wc_status s = f(buf.data(), buf.size(), &needed);
    if (s == WC_ERR_BUFFER_TOO_SMALL) {
        buf.resize(needed + 1);
        s = f(buf.data(), buf.size(), &needed);
    }
    check(s);
    buf.resize(needed);
    return buf;
}

std::string format_double(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof(tmp), "%.17g", v);
    return tmp;
}

// One output table: ordered column names plus rows of preformatted cells.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::initializer_list<std::string> cells) { rows.emplace_back(cells); }

    std::string to_csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "") << columns[i];
        }
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
        return os.str();
    }

    std::string to_json() const {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }
};

struct CommonOpts {
    std::string format = "csv";
    std::string out_path;
    uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
};

uint64_t env_seed() {
    const char* env = std::getenv("WEYLCONE_SEED");
    if (!env) return 0;
    return std::strtoull(env, nullptr, 10);
}

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// The manifest travels next to the output (file mode) or to stderr; replaying
// the recorded parameters reproduces the output bytes.
void emit(const CommonOpts& opts, const std::string& subcommand,
          const std::map<std::string, std::string>& params, const std::string& payload) {
    json manifest;
    manifest["subcommand"] = subcommand;
    manifest["parameters"] = params;
    manifest["seed"] = opts.seed;
    manifest["artifact_version"] = wc_version();
    manifest["timestamp"] = iso_timestamp();

    if (opts.out_path.empty()) {
        std::cout << payload;
        std::cerr << manifest.dump() << "\n";
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw CliError("cannot open output file: " + opts.out_path);
        out << payload;
        std::ofstream mout(opts.out_path + ".manifest.json", std::ios::binary);
        mout << manifest.dump(2) << "\n";
    }
}

std::string render(const Table& table, const std::string& format) {
    if (format == "json") return table.to_json();
    return table.to_csv();
}

wc_cone_type parse_type(const std::string& type) {
    if (type == "A" || type == "a") return WC_TYPE_A;
    if (type == "B" || type == "b") return WC_TYPE_B;
    throw CLI::ValidationError("--type", "expected A or B");
}

struct TablePtr {
    wc_stirling_table* t = nullptr;
    ~TablePtr() { wc_stirling_table_destroy(t); }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_seed = true) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "write output to this file (plus .manifest.json)");
    if (with_seed) {
        auto* o = cmd->add_option("--seed", opts.seed, "random seed (default: WEYLCONE_SEED)");
        o->each([&opts](const std::string&) { opts.seed_set = true; });
    }
    cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylcone: exact and Monte Carlo functionals of Weyl random cones"};
    app.require_subcommand(1);

    // stirling ---------------------------------------------------------------
    auto* stirling = app.add_subcommand("stirling", "Stirling row entries (exact decimal)");
    std::string st_type = "A";
    int st_n = 0, st_k = -1;
    CommonOpts st_opts;
    stirling->add_option("--type", st_type, "A or B")->required();
    stirling->add_option("--n", st_n, "row index")->required()->check(CLI::NonNegativeNumber);
    stirling->add_option("--k", st_k, "single entry (default: whole row)");
    add_common(stirling, st_opts, false);

    // chambers ---------------------------------------------------------------
    auto* chambers = app.add_subcommand("chambers", "exact chamber count D(n,d)");
    std::string ch_type = "A";
    int ch_n = 0, ch_d = 0;
    CommonOpts ch_opts;
    chambers->add_option("--type", ch_type)->required();
    chambers->add_option("--n", ch_n)->required();
    chambers->add_option("--d", ch_d)->required();
    add_common(chambers, ch_opts, false);

    // pmf ---------------------------------------------------------------------
    auto* pmf_cmd = app.add_subcommand("pmf", "probability mass function of S_n");
    std::string pmf_type = "A";
    int pmf_n = 0;
    CommonOpts pmf_opts;
    pmf_cmd->add_option("--type", pmf_type)->required();
    pmf_cmd->add_option("--n", pmf_n)->required();
    add_common(pmf_cmd, pmf_opts, false);

    // functionals --------------------------------------------------------------
    auto* fun = app.add_subcommand("functionals", "exact expected functionals");
    std::string fun_type = "A", fun_cone = "weyl", fun_kind = "iv";
    int fun_n = 0, fun_d = 0;
    CommonOpts fun_opts;
    fun->add_option("--type", fun_type)->required();
    fun->add_option("--n", fun_n)->required();
    fun->add_option("--d", fun_d)->required();
    fun->add_option("--cone", fun_cone)->check(CLI::IsMember({"weyl", "dual"}));
    fun->add_option("--kind", fun_kind)->check(CLI::IsMember({"iv", "quermass", "faces", "statdim"}));
    add_common(fun, fun_opts, false);

    // limits --------------------------------------------------------------------
    auto* limits = app.add_subcommand("limits", "limit-theorem convergence sweeps");
    std::string lim_theorem, lim_type = "A", lim_params, lim_nlist = "1000,10000,20000";
    CommonOpts lim_opts;
    limits->add_option("--theorem", lim_theorem, "4.1, 4.2, 5.1, 5.3, 5.4, 5.5 or 6.1")
        ->required()
        ->check(CLI::IsMember({"4.1", "4.2", "5.1", "5.3", "5.4", "5.5", "6.1"}));
    limits->add_option("--type", lim_type)->required();
    limits->add_option("--params", lim_params, "key=value pairs, e.g. x=2,alpha=0.5");
    limits->add_option("--n-list", lim_nlist, "comma-separated increasing n values");
    add_common(limits, lim_opts, false);

    // simulate --------------------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimates with exact reference");
    std::string sim_type = "A", sim_functional, sim_cone = "weyl", sim_dist = "gaussian";
    int sim_n = 0, sim_d = 0, sim_k = 1;
    int64_t sim_samples = 10000;
    CommonOpts sim_opts;
    sim->add_option("--type", sim_type)->required();
    sim->add_option("--n", sim_n)->required();
    sim->add_option("--d", sim_d)->required();
    sim->add_option("--functional", sim_functional)
        ->required()
        ->check(CLI::IsMember({"iv", "faces", "quermass", "statdim"}));
    sim->add_option("--k", sim_k, "face / quermassintegral index");
    sim->add_option("--cone", sim_cone)->check(CLI::IsMember({"weyl", "dual"}));
    sim->add_option("--samples", sim_samples)->capture_default_str();
    sim->add_option("--distribution", sim_dist)->check(CLI::IsMember({"gaussian", "sphere"}));
    add_common(sim, sim_opts);

    // tessellate --------------------------------------------------------------------
    auto* tes = app.add_subcommand("tessellate", "sample and enumerate a Weyl tessellation");
    std::string tes_type = "A", tes_dist = "gaussian", tes_seeds;
    int tes_n = 0, tes_d = 0, tes_faces = -1;
    bool tes_verify = false, tes_signs = false;
    CommonOpts tes_opts;
    tes->add_option("--type", tes_type)->required();
    tes->add_option("--n", tes_n)->required();
    tes->add_option("--d", tes_d)->required();
    tes->add_flag("--verify", tes_verify, "compare enumerated counts against D(n,d)");
    tes->add_option("--seeds", tes_seeds, "comma-separated seeds for --verify");
    tes->add_flag("--signs", tes_signs, "emit the chamber sign matrix");
    tes->add_option("--faces", tes_faces, "average f_k over all chambers (d <= 3)");
    tes->add_option("--distribution", tes_dist)->check(CLI::IsMember({"gaussian", "sphere"}));
    add_common(tes, tes_opts);

    // verify-all --------------------------------------------------------------------
    auto* ver = app.add_subcommand("verify-all", "run the acceptance suite");
    CommonOpts ver_opts;
    add_common(ver, ver_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (stirling->parsed()) {
            TablePtr handle;
            check(wc_stirling_table_create(parse_type(st_type), st_n, &handle.t));
            Table table;
            table.columns = {"n", "k", "value"};
            int lo = st_k >= 0 ? st_k : 0;
            int hi = st_k >= 0 ? st_k : st_n;
            for (int k = lo; k <= hi; ++k) {
                std::string value = wc_string([&](char* b, size_t c, size_t* nd) {
                    return wc_stirling_entry(handle.t, st_n, k, b, c, nd);
                });
                table.add_row({std::to_string(st_n), std::to_string(k), value});
            }
            emit(st_opts, "stirling",
                 {{"type", st_type}, {"n", std::to_string(st_n)}, {"k", std::to_string(st_k)}},
                 render(table, st_opts.format));
        } else if (chambers->parsed()) {
            TablePtr handle;
            check(wc_stirling_table_create(parse_type(ch_type), ch_n, &handle.t));
            std::string value = wc_string([&](char* b, size_t c, size_t* nd) {
                return wc_chamber_count(handle.t, ch_n, ch_d, b, c, nd);
            });
            Table table;
            table.columns = {"n", "d", "type", "chambers"};
            table.add_row({std::to_string(ch_n), std::to_string(ch_d), ch_type, value});
            emit(ch_opts, "chambers",
                 {{"type", ch_type}, {"n", std::to_string(ch_n)}, {"d", std::to_string(ch_d)}},
                 render(table, ch_opts.format));
        } else if (pmf_cmd->parsed()) {
            wc_pmf* p = nullptr;
            check(wc_pmf_create(parse_type(pmf_type), pmf_n, &p));
            std::vector<double> probs(static_cast<std::size_t>(wc_pmf_length(p)));
            check(wc_pmf_probs(p, probs.data(), probs.size()));
            wc_pmf_destroy(p);
            Table table;
            table.columns = {"k", "probability"};
            for (std::size_t k = 0; k < probs.size(); ++k) {
                table.add_row({std::to_string(k), format_double(probs[k])});
            }
            emit(pmf_opts, "pmf", {{"type", pmf_type}, {"n", std::to_string(pmf_n)}},
                 render(table, pmf_opts.format));
        } else if (fun->parsed()) {
            Table table;
            if (fun_kind == "statdim") {
                double value = 0.0;
                std::string exact = wc_string([&](char* b, size_t c, size_t* nd) {
                    return wc_stat_dim(parse_type(fun_type), fun_n, fun_d, b, c, nd, &value);
                });
                table.columns = {"n", "d", "type", "value", "value_float"};
                table.add_row({std::to_string(fun_n), std::to_string(fun_d), fun_type, exact,
                               format_double(value)});
            } else {
                wc_functional_kind kind = fun_kind == "iv" ? WC_FUNC_INTRINSIC_VOLUMES
                                          : fun_kind == "quermass" ? WC_FUNC_QUERMASSINTEGRALS
                                                                   : WC_FUNC_FACE_NUMBERS;
                wc_functionals* f = nullptr;
                check(wc_functionals_create(parse_type(fun_type), fun_n, fun_d,
                                            fun_cone == "weyl" ? WC_CONE_WEYL : WC_CONE_DUAL, kind,
                                            &f));
                table.columns = {"k", "value", "value_float"};
                int count = wc_functionals_count(f);
                int k0 = wc_functionals_k_first(f);
                for (int i = 0; i < count; ++i) {
                    std::string value = wc_string([&](char* b, size_t c, size_t* nd) {
                        return wc_functionals_value(f, i, b, c, nd);
                    });
                    double fv = 0.0;
                    check(wc_functionals_value_double(f, i, &fv));
                    table.add_row({std::to_string(k0 + i), value, format_double(fv)});
                }
                wc_functionals_destroy(f);
            }
            emit(fun_opts, "functionals",
                 {{"type", fun_type},
                  {"n", std::to_string(fun_n)},
                  {"d", std::to_string(fun_d)},
                  {"cone", fun_cone},
                  {"kind", fun_kind}},
                 render(table, fun_opts.format));
        } else if (limits->parsed()) {
            std::vector<int64_t> ns;
            std::stringstream ss(lim_nlist);
            std::string item;
            while (std::getline(ss, item, ',')) ns.push_back(std::stoll(item));
            wc_sweep* sweep = nullptr;
            check(wc_sweep_create(lim_theorem.c_str(), parse_type(lim_type), lim_params.c_str(),
                                  ns.data(), ns.size(), &sweep));
            Table table;
            table.columns = {"n",          "d",          "k",          "realized_x",
                             "realized_y", "realized_c", "realized_alpha", "finite_value",
                             "predicted",  "gap",        "gap_is_relative", "clamped",
                             "ok",         "message"};
            for (std::size_t i = 0; i < wc_sweep_row_count(sweep); ++i) {
                wc_sweep_row row;
                check(wc_sweep_get_row(sweep, i, &row));
                std::string message;
                if (!row.ok) {
                    message = wc_string([&](char* b, size_t c, size_t* nd) {
                        return wc_sweep_row_message(sweep, i, b, c, nd);
                    });
                }
                table.add_row({std::to_string(row.n), std::to_string(row.d), std::to_string(row.k),
                               format_double(row.realized_x), format_double(row.realized_y),
                               format_double(row.realized_c), format_double(row.realized_alpha),
                               format_double(row.finite_value),
                               format_double(row.predicted_limit), format_double(row.gap),
                               std::to_string(row.gap_is_relative), std::to_string(row.clamped),
                               std::to_string(row.ok), message});
            }
            wc_sweep_destroy(sweep);
            emit(lim_opts, "limits",
                 {{"theorem", lim_theorem},
                  {"type", lim_type},
                  {"params", lim_params},
                  {"n_list", lim_nlist}},
                 render(table, lim_opts.format));
        } else if (sim->parsed()) {
            if (!sim_opts.seed_set) sim_opts.seed = env_seed();
            std::vector<wc_mc_estimate> rows(static_cast<std::size_t>(sim_d) + 2);
            size_t written = 0;
            check(wc_simulate(parse_type(sim_type), sim_n, sim_d, sim_functional.c_str(), sim_k,
                              sim_cone == "weyl" ? WC_CONE_WEYL : WC_CONE_DUAL, sim_samples,
                              sim_opts.seed, sim_opts.threads,
                              sim_dist == "gaussian" ? WC_DIST_GAUSSIAN : WC_DIST_SPHERE,
                              rows.data(), rows.size(), &written));
            Table table;
            table.columns = {"k",      "mean", "stderr", "samples", "accepted_fraction",
                             "seed",   "exact", "exact_float_available"};
            for (size_t i = 0; i < written; ++i) {
                const auto& r = rows[i];
                table.add_row({std::to_string(r.k), format_double(r.mean),
                               format_double(r.std_error), std::to_string(r.samples),
                               format_double(r.accepted_fraction), std::to_string(r.seed),
                               format_double(r.exact_value), std::to_string(r.has_exact)});
            }
            emit(sim_opts, "simulate",
                 {{"type", sim_type},
                  {"n", std::to_string(sim_n)},
                  {"d", std::to_string(sim_d)},
                  {"functional", sim_functional},
                  {"k", std::to_string(sim_k)},
                  {"cone", sim_cone},
                  {"samples", std::to_string(sim_samples)},
                  {"distribution", sim_dist},
                  {"seed", std::to_string(sim_opts.seed)}},
                 render(table, sim_opts.format));
        } else if (tes->parsed()) {
            if (!tes_opts.seed_set) tes_opts.seed = env_seed();
            wc_distribution dist = tes_dist == "gaussian" ? WC_DIST_GAUSSIAN : WC_DIST_SPHERE;
            wc_cone_type type = parse_type(tes_type);
            std::string payload;
            if (tes_verify) {
                std::vector<uint64_t> seeds;
                if (!tes_seeds.empty()) {
                    std::stringstream ss(tes_seeds);
                    std::string item;
                    while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
                } else {
                    for (uint64_t i = 1; i <= 5; ++i) seeds.push_back(tes_opts.seed + i);
                }
                std::vector<int64_t> counts(seeds.size());
                int32_t all_match = 0;
                check(wc_tessellate_verify(type, tes_n, tes_d, seeds.data(), seeds.size(), dist,
                                           &all_match, counts.data()));
                TablePtr handle;
                check(wc_stirling_table_create(type, tes_n, &handle.t));
                std::string expected = wc_string([&](char* b, size_t c, size_t* nd) {
                    return wc_chamber_count(handle.t, tes_n, tes_d, b, c, nd);
                });
                Table table;
                table.columns = {"seed", "enumerated", "expected", "match"};
                for (std::size_t i = 0; i < seeds.size(); ++i) {
                    table.add_row({std::to_string(seeds[i]), std::to_string(counts[i]), expected,
                                   std::to_string(static_cast<int>(std::to_string(counts[i]) ==
                                                                   expected))});
                }
                payload = render(table, tes_opts.format);
            } else if (tes_signs) {
                payload = wc_string([&](char* b, size_t c, size_t* nd) {
                    return wc_tessellate_signs(type, tes_n, tes_d, tes_opts.seed, dist, b, c, nd);
                });
            } else if (tes_faces >= 0) {
                double average = 0.0;
                int64_t cells = 0;
                check(wc_tessellate_face_average(type, tes_n, tes_d, tes_faces, tes_opts.seed,
                                                 dist, &average, &cells));
                Table table;
                table.columns = {"k", "average_face_count", "chambers"};
                table.add_row({std::to_string(tes_faces), format_double(average),
                               std::to_string(cells)});
                payload = render(table, tes_opts.format);
            } else {
                int64_t cells = 0;
                check(wc_tessellate_count(type, tes_n, tes_d, tes_opts.seed, dist, &cells));
                Table table;
                table.columns = {"n", "d", "type", "chambers"};
                table.add_row({std::to_string(tes_n), std::to_string(tes_d), tes_type,
                               std::to_string(cells)});
                payload = render(table, tes_opts.format);
            }
            emit(tes_opts, "tessellate",
                 {{"type", tes_type},
                  {"n", std::to_string(tes_n)},
                  {"d", std::to_string(tes_d)},
                  {"distribution", tes_dist},
                  {"seed", std::to_string(tes_opts.seed)},
                  {"verify", std::to_string(tes_verify)},
                  {"signs", std::to_string(tes_signs)},
                  {"faces", std::to_string(tes_faces)}},
                 payload);
        } else if (ver->parsed()) {
            if (!ver_opts.seed_set) ver_opts.seed = env_seed();
            wc_verify* v = nullptr;
            check(wc_verify_run(ver_opts.seed, ver_opts.threads, /*verbose=*/1, &v));
            Table table;
            table.columns = {"id", "passed", "seconds", "name", "detail"};
            bool all = wc_verify_all_passed(v) != 0;
            for (std::size_t i = 0; i < wc_verify_count(v); ++i) {
                int32_t id = 0, passed = 0;
                double seconds = 0.0;
                std::string name = wc_string([&](char* b, size_t c, size_t* nd) {
                    return wc_verify_item(v, i, &id, &passed, &seconds, b, c, nd, nullptr, 0,
                                          nullptr);
                });
                std::string detail = wc_string([&](char* b, size_t c, size_t* nd) {
                    return wc_verify_item(v, i, nullptr, nullptr, nullptr, nullptr, 0, nullptr, b,
                                          c, nd);
                });
                table.add_row({std::to_string(id), passed ? "PASS" : "FAIL",
                               format_double(seconds), name, detail});
            }
            wc_verify_destroy(v);
            emit(ver_opts, "verify-all",
                 {{"seed", std::to_string(ver_opts.seed)},
                  {"threads", std::to_string(ver_opts.threads)}},
                 render(table, ver_opts.format));
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
