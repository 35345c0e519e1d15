// spectraham: spectral Hamiltonicity toolkit CLI.
//
// Exit codes: 0 completed; 1 property refuted / exceptional-family verdict
// (still a valid run); 2 usage or input error; 3 internal failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectraham.h"

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "spectraham/1";

struct CliFailure {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliFailure{code, message}; }

int exit_code_for(sp_status status) {
    switch (status) {
        case SP_OK: return 0;
        case SP_ERR_CONVERGENCE:
        case SP_ERR_NOMEM:
        case SP_ERR_INTERNAL: return 3;
        default: return 2;
    }
}

void check_status(sp_status status) {
    if (status != SP_OK)
        fail(exit_code_for(status), std::string(sp_status_name(status)) + ": " + sp_last_error());
}

struct Handle {
    sp_graph* g = nullptr;
    Handle() = default;
    explicit Handle(sp_graph* p) : g(p) {}
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& other) noexcept : g(other.g) { other.g = nullptr; }
    ~Handle() { sp_graph_free(g); }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { sp_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(2, "cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_all(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(2, "cannot open output file: " + path);
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    return s.substr(start);
}

// graph input: graph6 text, or JSON {"n", "edges", "x_size"?} /
// {"graph6", "x_size"?}; --x-size overrides/attaches a part mask
Handle load_graph(const std::string& raw, std::optional<int> x_size_flag) {
    std::string text = trimmed(raw);
    if (text.empty()) fail(2, "empty graph input");
    sp_graph* g = nullptr;
    std::optional<int> x_size = x_size_flag;
    if (text.front() == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const std::exception& e) {
            fail(2, std::string("invalid JSON graph: ") + e.what());
        }
        if (j.contains("graph6")) {
            check_status(sp_graph_from_graph6(j["graph6"].get<std::string>().c_str(), &g));
        } else if (j.contains("n") && j.contains("edges")) {
            std::vector<int32_t> endpoints;
            for (const auto& e : j["edges"]) {
                endpoints.push_back(e.at(0).get<int32_t>());
                endpoints.push_back(e.at(1).get<int32_t>());
            }
            check_status(
                sp_graph_from_edges(j["n"].get<int32_t>(), endpoints.data(), endpoints.size() / 2, &g));
        } else {
            fail(2, "JSON graph needs either \"graph6\" or \"n\"+\"edges\"");
        }
        if (!x_size && j.contains("x_size")) x_size = j["x_size"].get<int>();
    } else {
        check_status(sp_graph_from_graph6(text.c_str(), &g));
    }
    Handle handle(g);
    if (x_size) check_status(sp_graph_set_x_size(handle.g, *x_size));
    return handle;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct Report {
    Json doc;

    Report(const std::string& subcommand, const std::vector<std::string>& argv) {
        doc["schema_version"] = kSchemaVersion;
        doc["command"]["subcommand"] = subcommand;
        doc["command"]["argv"] = argv;
        doc["timestamp"] = iso_timestamp();
        doc["results"] = Json::array();
    }

    void set_input_digest(const Handle& h) {
        OwnedString digest;
        check_status(sp_graph_digest(h.g, &digest.s));
        doc["input_digest"] = digest.str();
    }

    void set_param_digest(const std::string& params) { doc["input_digest"] = "params:" + params; }
    void set_seed(std::uint64_t seed) { doc["seed"] = seed; }
    void add_result(Json r) { doc["results"].push_back(std::move(r)); }

    void emit(const std::string& out_path) { write_all(out_path, doc.dump(2)); }
};

Json graph_json(const Handle& h) {
    OwnedString s;
    check_status(sp_graph_to_json(h.g, &s.s));
    return Json::parse(s.str());
}

Json parse_owned(const OwnedString& s) { return Json::parse(s.str()); }

struct CommonOpts {
    std::string in = "-";
    std::string out = "-";
    double tol = 1e-10;
    double epsilon = 1e-6;
    int oracle_cap = 24;
    std::optional<int> x_size;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input)
        cmd->add_option("--in", opts.in, "input graph file, '-' for stdin (graph6 or JSON)");
    cmd->add_option("--out", opts.out, "output file, '-' for stdout");
    cmd->add_option("--tol", opts.tol, "eigensolver residual tolerance")->capture_default_str();
    cmd->add_option("--epsilon", opts.epsilon, "boundary slack for threshold comparisons")
        ->capture_default_str();
    cmd->add_option("--oracle-cap", opts.oracle_cap, "max order for exact oracle runs")
        ->capture_default_str();
    auto* xs = cmd->add_option("--x-size", "attach a bipartition: vertices [0, x) form X");
    xs->each([&opts](const std::string& v) { opts.x_size = std::stoi(v); });
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> argv_record(argv + 1, argv + argc);

    CLI::App app{"spectraham: spectral Hamiltonicity toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;

    // gen
    auto* gen = app.add_subcommand("gen", "construct a named family graph");
    std::string gen_family;
    int gen_n = 0, gen_k = 0, gen_variant = 0, gen_count = 1;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family, "family id (Bnk, Cnk, K2JoinSplit, ESn, ...)")->required();
    gen->add_option("--n", gen_n, "order parameter n");
    gen->add_option("--k", gen_k, "parameter k");
    gen->add_option("--variant", gen_variant, "variant index (Gamma2MinusV)");
    gen->add_option("--count", gen_count, "sample count for set-valued families");
    gen->add_option("--seed", gen_seed, "sample seed");
    add_common(gen, opts, false);

    // mu / q
    auto* mu = app.add_subcommand("mu", "adjacency spectral radius");
    auto* qcmd = app.add_subcommand("q", "signless Laplacian spectral radius");
    std::string method = "auto";
    for (auto* cmd : {mu, qcmd}) {
        add_common(cmd, opts);
        cmd->add_option("--method", method, "auto|dense|power");
    }

    // bounds
    auto* bounds = app.add_subcommand("bounds", "degree/edge bounds plus computed spectra");
    add_common(bounds, opts);

    // closure
    auto* closure = app.add_subcommand("closure", "k-closure, or bipartite closure for part-tagged input");
    int closure_k = -1;
    closure->add_option("--k", closure_k, "degree-sum threshold (plain graphs)");
    add_common(closure, opts);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact Hamiltonicity oracle");
    std::string property = "traceable";
    int oracle_vertex = 0, oracle_from = -1, oracle_to = -1;
    oracle->add_option("--property", property,
                       "hamiltonian|traceable|hamilton-connected|traceable-from-every-vertex|traceable-from");
    oracle->add_option("--vertex", oracle_vertex, "start vertex for traceable-from");
    oracle->add_option("--from", oracle_from, "spanning-path endpoint u (with --to)");
    oracle->add_option("--to", oracle_to, "spanning-path endpoint v");
    add_common(oracle, opts);

    // check
    auto* check = app.add_subcommand("check", "run a theorem checker");
    std::string theorem;
    int check_k = 1;
    std::string thm211_variant = "statement";
    bool validate = false;
    check->add_option("--theorem", theorem, "T2_10|T2_11|T2_12|T2_13|T3_9|T3_10|T3_11")->required();
    check->add_option("--k", check_k, "minimum-degree parameter k")->required();
    check->add_option("--thm211-variant", thm211_variant, "statement|proof threshold tail for T2_11");
    check->add_flag("--validate", validate, "cross-check the verdict against the exact oracle");
    add_common(check, opts);

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "sharpness sweep for the extremal graphs");
    std::string lemma;
    int sharp_n = 0, sharp_k = 0;
    sharp->add_option("--lemma", lemma, "L2_9|L3_8")->required();
    sharp->add_option("--n", sharp_n, "n")->required();
    sharp->add_option("--k", sharp_k, "k")->required();
    add_common(sharp, opts, false);

    // remark
    auto* remark = app.add_subcommand("remark", "evaluate the post-T3_11 polynomial identity");
    int remark_n = 0, remark_k = 0;
    remark->add_option("--n", remark_n, "n")->required();
    remark->add_option("--k", remark_k, "k")->required();
    add_common(remark, opts, false);

    // survey
    auto* survey = app.add_subcommand("survey", "seeded random sweep with oracle confirmation");
    std::string regime = "simple";
    int survey_n = 10, survey_k = 2, survey_samples = 1000, survey_threads = 0;
    std::uint64_t survey_seed = 0;
    std::string survey_thm211 = "statement";
    survey->add_option("--regime", regime, "simple|balanced|nearly_balanced");
    survey->add_option("--n", survey_n, "order (simple) or Y-part size (bipartite)");
    survey->add_option("--k", survey_k, "minimum-degree parameter k");
    survey->add_option("--samples", survey_samples, "sample count");
    survey->add_option("--seed", survey_seed, "RNG seed");
    survey->add_option("--threads", survey_threads, "worker count (0: SPECTRAHAM_THREADS or auto)");
    survey->add_option("--thm211-variant", survey_thm211, "statement|proof");
    add_common(survey, opts, false);

    // convert
    auto* convert = app.add_subcommand("convert", "convert between graph6, JSON and DOT");
    std::string format = "graph6";
    convert->add_option("--format", format, "graph6|json|dot (output format)");
    add_common(convert, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    int exit_code = 0;
    try {
        if (*gen) {
            Report report("gen", argv_record);
            report.set_param_digest(gen_family + ";n=" + std::to_string(gen_n) +
                                    ";k=" + std::to_string(gen_k));
            bool set_valued = gen_family == "ESn" || gen_family == "EWn" || gen_family == "ScriptB" ||
                              gen_family == "ScriptC";
            if (set_valued) {
                report.set_seed(gen_seed);
                for (int i = 0; i < gen_count; ++i) {
                    sp_graph* g = nullptr;
                    check_status(
                        sp_family_sample(gen_family.c_str(), gen_n, gen_k, gen_count, gen_seed, i, &g));
                    Handle h(g);
                    Json r;
                    r["family"] = gen_family;
                    r["n"] = gen_n;
                    r["k"] = gen_k;
                    r["index"] = i;
                    r["graph"] = graph_json(h);
                    report.add_result(std::move(r));
                }
            } else {
                sp_graph* g = nullptr;
                check_status(sp_family_build(gen_family.c_str(), gen_n, gen_k, gen_variant, &g));
                Handle h(g);
                Json r;
                r["family"] = gen_family;
                r["n"] = gen_n;
                r["k"] = gen_k;
                r["graph"] = graph_json(h);
                OwnedString stats;
                check_status(sp_graph_stats_json(h.g, &stats.s));
                r["stats"] = parse_owned(stats);
                report.add_result(std::move(r));
            }
            report.emit(opts.out);
        } else if (*mu || *qcmd) {
            bool adjacency = static_cast<bool>(*mu);
            Report report(adjacency ? "mu" : "q", argv_record);
            Handle h = load_graph(read_all(opts.in), opts.x_size);
            report.set_input_digest(h);
            int m = method == "dense" ? SP_METHOD_DENSE : method == "power" ? SP_METHOD_POWER : SP_METHOD_AUTO;
            std::vector<double> vec(static_cast<std::size_t>(std::max<int32_t>(sp_graph_order(h.g), 0)));
            sp_spectral_info info{};
            check_status(sp_spectral_radius_vector(
                h.g, adjacency ? SP_MATRIX_ADJACENCY : SP_MATRIX_SIGNLESS_LAPLACIAN, opts.tol, m, &info,
                vec.data()));
            Json r;
            r["kind"] = adjacency ? "adjacency" : "signless_laplacian";
            r["value"] = info.value;
            r["residual"] = info.residual;
            r["iterations"] = info.iterations;
            r["method"] = info.method == SP_METHOD_DENSE ? "dense" : "shifted_power_iteration";
            r["vector"] = vec;
            report.add_result(std::move(r));
            report.emit(opts.out);
        } else if (*bounds) {
            Report report("bounds", argv_record);
            Handle h = load_graph(read_all(opts.in), opts.x_size);
            report.set_input_digest(h);
            OwnedString s;
            check_status(sp_bounds_json(h.g, 1, opts.tol, &s.s));
            report.add_result(parse_owned(s));
            report.emit(opts.out);
        } else if (*closure) {
            Report report("closure", argv_record);
            Handle h = load_graph(read_all(opts.in), opts.x_size);
            report.set_input_digest(h);
            bool bipartite = sp_graph_x_size(h.g) >= 0;
            if (!bipartite && closure_k < 0) fail(2, "--k is required for plain-graph closures");
            sp_graph* closed = nullptr;
            int32_t* added = nullptr;
            size_t added_count = 0;
            check_status(sp_closure(h.g, closure_k, &closed, &added, &added_count));
            Handle hc(closed);
            Json r;
            r["kind"] = bipartite ? "bipartite_closure" : "k_closure";
            if (!bipartite) r["parameter"] = closure_k;
            Json trace = Json::array();
            for (size_t i = 0; i < added_count; ++i)
                trace.push_back(Json::array({added[2 * i], added[2 * i + 1]}));
            sp_buffer_free(added);
            r["added_edges"] = std::move(trace);
            r["closed_graph"] = graph_json(hc);
            report.add_result(std::move(r));
            report.emit(opts.out);
        } else if (*oracle) {
            Report report("oracle", argv_record);
            Handle h = load_graph(read_all(opts.in), opts.x_size);
            report.set_input_digest(h);
            sp_oracle_info info{};
            int32_t* witness = nullptr;
            size_t witness_len = 0;
            Json r;
            if (oracle_from >= 0 || oracle_to >= 0) {
                r["query"] = "ham_path_between";
                r["from"] = oracle_from;
                r["to"] = oracle_to;
                check_status(sp_ham_path_between(h.g, oracle_from, oracle_to, opts.oracle_cap, &info,
                                                 &witness, &witness_len));
            } else {
                sp_property p;
                if (property == "hamiltonian") p = SP_PROP_HAMILTONIAN;
                else if (property == "traceable") p = SP_PROP_TRACEABLE;
                else if (property == "hamilton-connected") p = SP_PROP_HAMILTON_CONNECTED;
                else if (property == "traceable-from-every-vertex") p = SP_PROP_TRACEABLE_FROM_EVERY_VERTEX;
                else if (property == "traceable-from") p = SP_PROP_TRACEABLE_FROM;
                else fail(2, "unknown property: " + property);
                r["query"] = property;
                if (p == SP_PROP_TRACEABLE_FROM) r["vertex"] = oracle_vertex;
                check_status(
                    sp_oracle_check(h.g, p, oracle_vertex, opts.oracle_cap, &info, &witness, &witness_len));
            }
            r["holds"] = info.holds != 0;
            if (witness_len > 0) {
                Json w = Json::array();
                for (size_t i = 0; i < witness_len; ++i) w.push_back(witness[i]);
                r["witness"] = std::move(w);
            }
            sp_buffer_free(witness);
            if (info.failing_u >= 0) r["failing_pair"] = Json::array({info.failing_u, info.failing_v});
            if (info.failing_vertex >= 0) r["failing_vertex"] = info.failing_vertex;
            report.add_result(std::move(r));
            report.emit(opts.out);
            if (!info.holds) exit_code = 1;
        } else if (*check) {
            Report report("check", argv_record);
            Handle h = load_graph(read_all(opts.in), opts.x_size);
            report.set_input_digest(h);
            OwnedString s;
            check_status(sp_theorem_check(h.g, theorem.c_str(), check_k, opts.tol, opts.epsilon,
                                          thm211_variant == "proof" ? 1 : 0, validate ? 1 : 0,
                                          opts.oracle_cap, &s.s));
            Json verdict = parse_owned(s);
            report.add_result(verdict);
            report.emit(opts.out);
            if (verdict.contains("conclusion") && verdict["conclusion"]["type"] == "exception")
                exit_code = 1;
        } else if (*sharp) {
            Report report("sharpness", argv_record);
            report.set_param_digest(lemma + ";n=" + std::to_string(sharp_n) + ";k=" + std::to_string(sharp_k));
            OwnedString s;
            check_status(sp_sharpness(lemma.c_str(), sharp_n, sharp_k, opts.tol, &s.s));
            Json r = parse_owned(s);
            report.add_result(r);
            report.emit(opts.out);
            if (!r["all_strict"].get<bool>()) exit_code = 1;
        } else if (*remark) {
            Report report("remark", argv_record);
            report.set_param_digest("remark;n=" + std::to_string(remark_n) + ";k=" + std::to_string(remark_k));
            OwnedString s;
            check_status(sp_remark_3_11(remark_n, remark_k, opts.tol, &s.s));
            Json r = parse_owned(s);
            report.add_result(r);
            report.emit(opts.out);
            bool refuted = !r["f_negative"].get<bool>() ||
                           (r.contains("q_exceeds") && !r["q_exceeds"].get<bool>());
            if (refuted) exit_code = 1;
        } else if (*survey) {
            Report report("survey", argv_record);
            Json params;
            params["regime"] = regime == "balanced"          ? "bipartite_balanced"
                               : regime == "nearly_balanced" ? "bipartite_nearly_balanced"
                                                             : regime;
            params["n"] = survey_n;
            params["k"] = survey_k;
            params["samples"] = survey_samples;
            params["seed"] = survey_seed;
            params["tol"] = opts.tol;
            params["epsilon"] = opts.epsilon;
            params["oracle_cap"] = opts.oracle_cap;
            params["threads"] = survey_threads;
            params["thm211_variant"] = survey_thm211;
            report.set_param_digest(params.dump());
            report.set_seed(survey_seed);
            OwnedString s;
            check_status(sp_survey(params.dump().c_str(), &s.s));
            Json r = parse_owned(s);
            report.add_result(r);
            report.emit(opts.out);
            if (r.contains("mismatches") && !r["mismatches"].empty()) exit_code = 1;
        } else if (*convert) {
            Handle h = load_graph(read_all(opts.in), opts.x_size);
            OwnedString s;
            if (format == "graph6") {
                check_status(sp_graph_to_graph6(h.g, &s.s));
            } else if (format == "json") {
                check_status(sp_graph_to_json(h.g, &s.s));
            } else if (format == "dot") {
                check_status(sp_graph_to_dot(h.g, &s.s));
            } else {
                fail(2, "unknown format: " + format);
            }
            write_all(opts.out, s.str());
        }
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
