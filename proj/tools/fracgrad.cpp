// fracgrad: constants lookup, operator application, experiment runs and sweeps.

#include "fracgrad/constants.hpp"
#include "fracgrad/errors.hpp"
#include "fracgrad/extremal.hpp"
#include "fracgrad/field_io.hpp"
#include "fracgrad/fracops.hpp"
#include "fracgrad/harness.hpp"
#include "fracgrad/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

using namespace fracgrad;
using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string experiment;
    std::string op;
    std::string input;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 42;
    bool timestamp = true;
    unsigned jobs = 0;
    json params = json::object();
    json tolerances = json::object();
    ojson lattice = ojson::object();
};

const std::set<std::string> kConfigKeys = {"command", "experiment", "operator", "input",      "out",    "format",
                                           "seed",    "timestamp",  "jobs",     "tolerances", "params", "lattice"};

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw UsageError("cannot read config " + path);
    ojson j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw UsageError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!kConfigKeys.count(key)) throw UsageError("unknown config key '" + key + "'");
    }
    try {
        if (j.contains("command")) cfg.command = j["command"].get<std::string>();
        if (j.contains("experiment")) cfg.experiment = j["experiment"].get<std::string>();
        if (j.contains("operator")) cfg.op = j["operator"].get<std::string>();
        if (j.contains("input")) cfg.input = j["input"].get<std::string>();
        if (j.contains("out")) cfg.out = j["out"].get<std::string>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("timestamp")) cfg.timestamp = j["timestamp"].get<bool>();
        if (j.contains("jobs")) cfg.jobs = j["jobs"].get<unsigned>();
        if (j.contains("params")) cfg.params = json(j["params"]);
        if (j.contains("tolerances")) cfg.tolerances = json(j["tolerances"]);
        if (j.contains("lattice")) cfg.lattice = j["lattice"];
    } catch (const json::exception& e) {
        throw UsageError("config has a value of the wrong type: " + std::string(e.what()));
    }
    if (!cfg.params.is_object() || !cfg.tolerances.is_object() || !cfg.lattice.is_object())
        throw UsageError("params, tolerances and lattice must be objects");
}

json parse_value(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        return text;
    }
}

std::string resolve_out(const RunConfig& cfg, const std::string& stem) {
    if (!cfg.out.empty()) return cfg.out;
    if (const char* dir = std::getenv("FRACGRAD_OUT_DIR"); dir && *dir)
        return std::string(dir) + "/" + stem + "." + cfg.format;
    return "";
}

void emit(const RunConfig& cfg, const std::string& stem, const std::string& text) {
    const std::string path = resolve_out(cfg, stem);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

std::string csv_with_stamp(const RunConfig& cfg, const std::string& body) {
    return cfg.timestamp ? timestamp_line() + "\n" + body : body;
}

// ---------------------------------------------------------------------------

int run_constants(const RunConfig& cfg) {
    const json& p = cfg.params;
    for (const auto& [key, value] : p.items()) {
        (void)value;
        if (key != "n" && key != "s" && key != "p" && key != "alpha" && key != "kappa" && key != "m")
            throw UsageError("constants: unknown parameter '" + key + "'");
    }
    FracParams fp;
    fp.n = p.value("n", 2);
    if (p.contains("s")) fp.s = p["s"].get<double>();
    if (p.contains("p")) fp.p = p["p"].get<double>();
    if (p.contains("alpha")) fp.alpha = p["alpha"].get<double>();
    if (p.contains("kappa")) fp.kappa = p["kappa"].get<double>();
    fp.validate();
    const int n = fp.n;

    std::vector<std::pair<std::string, double>> rows;
    rows.emplace_back("omega_n_minus_1", sphere_area(n));
    rows.emplace_back("adams_threshold", adams_threshold(n));
    if (fp.s) {
        const KernelConstants k = kernel_constants(n, *fp.s);
        rows.emplace_back("c_ns", k.c_ns);
        rows.emplace_back("c_ns_plus", k.c_ns_plus);
        rows.emplace_back("c_ns_minus", k.c_ns_minus);
        rows.emplace_back("kappa_minus_s", k.kappa_minus_s);
    }
    if (fp.alpha) rows.emplace_back("c_n_alpha", riesz_normalizer(n, *fp.alpha));
    if (fp.alpha && fp.p && *fp.p > 1.0) {
        switch (fp.regime_alpha()) {
            case Regime::Subcritical: rows.emplace_back("c_alpha_p_lt_n", herbst_constant(n, *fp.p, *fp.alpha)); break;
            case Regime::Supercritical:
                rows.emplace_back("c_alpha_p_gt_n", morrey_constant(n, *fp.p, *fp.alpha));
                rows.emplace_back("extremal_ratio", extremal_ratio(n, *fp.p, *fp.alpha));
                rows.emplace_back("h_argmax", h_argmax(n, *fp.p, *fp.alpha));
                rows.emplace_back("h_sup", h_sup(n, *fp.p, *fp.alpha));
                break;
            case Regime::Critical: break;
        }
    }
    if (fp.s && fp.p && *fp.p > 1.0) {
        const Regime r = fp.regime_s();
        const std::string tag = r == Regime::Subcritical ? "sp_lt_n" : (r == Regime::Critical ? "sp_eq_n" : "sp_gt_n");
        if (r != Regime::Subcritical || *fp.p < n) {
            rows.emplace_back("kappa_" + tag + "_plus", twin_constant(n, *fp.p, *fp.s, Sign::Plus));
            rows.emplace_back("kappa_" + tag + "_minus", twin_constant(n, *fp.p, *fp.s, Sign::Minus));
        }
    }
    if (p.contains("m")) {
        const int m = p["m"].get<int>();
        const IntegerOrderConstants ic = integer_order_constants(m, n, fp.p.value_or(1.0));
        rows.emplace_back("beta_0mn", ic.beta_0mn);
        if (ic.c_mp_lt_n) rows.emplace_back("c_mp_lt_n", *ic.c_mp_lt_n);
    }

    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "constant,value\n" << std::setprecision(17);
        for (const auto& [k, v] : rows) os << k << "," << v << "\n";
        emit(cfg, "constants", csv_with_stamp(cfg, os.str()));
    } else {
        ojson j;
        j["params"] = cfg.params;
        j["constants"] = ojson::array();
        for (const auto& [k, v] : rows) j["constants"].push_back({{"name", k}, {"value", v}});
        emit(cfg, "constants", j.dump(2) + "\n");
    }
    return kPass;
}

// ---------------------------------------------------------------------------

int run_apply(const RunConfig& cfg) {
    if (cfg.input.empty()) throw UsageError("apply: --in is required");
    if (cfg.op.empty()) throw UsageError("apply: --op is required");
    if (resolve_out(cfg, "field").empty()) throw UsageError("apply: --out is required");
    const json& p = cfg.params;
    for (const auto& [key, value] : p.items()) {
        (void)value;
        if (key != "s" && key != "alpha" && key != "axis" && key != "sign" && key != "zero_mode")
            throw UsageError("apply: unknown parameter '" + key + "'");
    }
    const VectorField in = read_field(cfg.input);
    const ZeroModePolicy z = p.value("zero_mode", std::string("zero")) == "reject" ? ZeroModePolicy::Reject
                                                                                    : ZeroModePolicy::Zero;
    auto need = [&](const char* key) {
        if (!p.contains(key)) throw UsageError(std::string("apply: operator needs '") + key + "'");
        return p[key].get<double>();
    };
    const ScalarField& u = in[0];
    const std::string& op = cfg.op;
    std::optional<VectorField> out;
    if (op == "frac_laplacian") out = VectorField({frac_laplacian(u, need("s"), z)});
    else if (op == "riesz_potential") out = VectorField({riesz_potential(u, need("alpha"), z)});
    else if (op == "riesz_transform") out = VectorField({riesz_transform(u, static_cast<int>(need("axis")), z)});
    else if (op == "frac_gradient") out = frac_gradient(u, need("s"));
    else if (op == "frac_divergence") out = VectorField({frac_divergence(in, need("s"))});
    else if (op == "frac_laplacian_direct") out = VectorField({frac_laplacian_direct(u, need("s")).value});
    else if (op == "frac_gradient_direct") out = frac_gradient_direct(u, need("s")).value;
    else if (op == "riesz_potential_direct") out = VectorField({riesz_potential_direct(u, need("alpha"))});
    else if (op == "liouville_onesided") {
        const std::string sign = p.value("sign", std::string("+"));
        out = VectorField({liouville_onesided(u, need("s"), sign == "-" ? Sign::Minus : Sign::Plus)});
    } else {
        throw UsageError("apply: unknown operator '" + op + "'");
    }
    write_field(resolve_out(cfg, "field"), *out);
    return kPass;
}

// ---------------------------------------------------------------------------

std::string render(const RunConfig& cfg, const std::vector<ExperimentReport>& reports) {
    if (cfg.format == "csv") {
        std::string body = report_csv_header() + "\n";
        for (const auto& r : reports) body += r.to_csv(false);
        return csv_with_stamp(cfg, body);
    }
    if (reports.size() == 1) return reports.front().to_json(cfg.timestamp).dump(2) + "\n";
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(r.to_json(cfg.timestamp));
    return arr.dump(2) + "\n";
}

int run_verify(const RunConfig& cfg, const Tolerances& tol) {
    if (cfg.experiment.empty()) throw UsageError("verify: --experiment is required");
    ExperimentReport rep = run_named_experiment(cfg.experiment, cfg.params, cfg.seed, tol);
    emit(cfg, cfg.experiment, render(cfg, {rep}));
    std::cerr << cfg.experiment << ": " << (rep.pass() ? "pass" : "fail") << "\n";
    return rep.pass() ? kPass : kFail;
}

int run_sweep(const RunConfig& cfg, const Tolerances& tol) {
    if (cfg.experiment.empty()) throw UsageError("sweep: --experiment is required");
    if (cfg.lattice.empty()) throw UsageError("sweep: config needs a non-empty 'lattice' object");
    std::vector<std::string> keys;
    std::vector<std::vector<json>> axes;
    for (const auto& [key, value] : cfg.lattice.items()) {
        if (!value.is_array() || value.empty()) throw UsageError("sweep: lattice '" + key + "' must be a non-empty array");
        keys.push_back(key);
        axes.emplace_back(value.begin(), value.end());
    }
    std::vector<json> points;
    std::vector<std::size_t> idx(keys.size(), 0);
    for (bool more = true; more;) {
        json p = cfg.params;
        for (std::size_t k = 0; k < keys.size(); ++k) p[keys[k]] = axes[k][idx[k]];
        points.push_back(p);
        more = false;
        for (std::size_t k = keys.size(); k-- > 0;) {
            if (++idx[k] < axes[k].size()) {
                more = true;
                break;
            }
            idx[k] = 0;
        }
    }
    std::vector<std::optional<ExperimentReport>> results(points.size());
    std::vector<std::string> errors(points.size());
    std::atomic<std::size_t> next{0};
    const unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                results[i] = run_named_experiment(cfg.experiment, points[i], cfg.seed, tol);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, points.size()); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!errors[i].empty()) throw UsageError("sweep point " + points[i].dump() + ": " + errors[i]);

    bool all = true;
    for (const auto& r : results) all = all && r->pass();
    if (cfg.format == "csv") {
        std::ostringstream os;
        for (const auto& k : keys) os << k << ",";
        os << "verdict,entries,failed\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (const auto& k : keys) os << points[i][k].dump() << ",";
            int failed = 0;
            for (const auto& e : results[i]->entries()) failed += e.pass ? 0 : 1;
            os << (results[i]->pass() ? "pass" : "fail") << "," << results[i]->entries().size() << "," << failed
               << "\n";
        }
        emit(cfg, cfg.experiment + "_sweep", csv_with_stamp(cfg, os.str()));
    } else {
        std::vector<ExperimentReport> reps;
        for (auto& r : results) reps.push_back(*r);
        ojson arr = ojson::array();
        for (const auto& r : reps) arr.push_back(r.to_json(cfg.timestamp));
        emit(cfg, cfg.experiment + "_sweep", arr.dump(2) + "\n");
    }
    std::cerr << cfg.experiment << " sweep: " << points.size() << " points, " << (all ? "pass" : "fail") << "\n";
    return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracgrad: fractional operators, sharp constants and verification runs"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out, format;
    bool no_timestamp = false;
    std::optional<unsigned> jobs;
    std::vector<std::string> param_flags;
    std::optional<double> f_s, f_p, f_alpha, f_kappa;
    std::optional<int> f_n, f_N, f_m;
    std::optional<std::string> experiment, op, input;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--out", out, "output path (default: stdout or $FRACGRAD_OUT_DIR)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--no-timestamp", no_timestamp, "omit timestamp and runtime for byte-stable output");
        sub->add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
        sub->add_option("--param", param_flags, "key=value parameter override (value parsed as JSON)");
        sub->add_option("--n", f_n, "dimension");
        sub->add_option("--s", f_s, "fractional order");
        sub->add_option("--p", f_p, "Lebesgue exponent");
        sub->add_option("--alpha", f_alpha, "potential order");
        sub->add_option("--kappa", f_kappa, "Morrey exponent");
        sub->add_option("--m", f_m, "integer order");
        sub->add_option("--N", f_N, "points per axis");
    };
    CLI::App* c_constants = app.add_subcommand("constants", "print every in-regime constant");
    CLI::App* c_apply = app.add_subcommand("apply", "apply an operator to a field file");
    CLI::App* c_verify = app.add_subcommand("verify", "run one experiment and write its report");
    CLI::App* c_sweep = app.add_subcommand("sweep", "run an experiment over a parameter lattice");
    for (CLI::App* sub : {c_constants, c_apply, c_verify, c_sweep}) common(sub);
    c_apply->add_option("--in", input, "input field (.csv for n = 1, binary otherwise)");
    c_apply->add_option("--op", op, "operator name");
    for (CLI::App* sub : {c_verify, c_sweep})
        sub->add_option("--experiment", experiment, "experiment name")->check(CLI::IsMember(experiment_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    RunConfig cfg;
    Tolerances tol;
    try {
        if (!config_path.empty()) load_config(config_path, cfg);
        CLI::App* sub = app.get_subcommands().front();
        if (!cfg.command.empty() && cfg.command != sub->get_name())
            throw UsageError("config command '" + cfg.command + "' does not match '" + sub->get_name() + "'");
        cfg.command = sub->get_name();
        if (seed) cfg.seed = *seed;
        if (out) cfg.out = *out;
        if (format) cfg.format = *format;
        if (no_timestamp) cfg.timestamp = false;
        if (jobs) cfg.jobs = *jobs;
        if (experiment) cfg.experiment = *experiment;
        if (op) cfg.op = *op;
        if (input) cfg.input = *input;
        if (cfg.format != "csv" && cfg.format != "json") throw UsageError("format must be csv or json");
        if (f_n) cfg.params["n"] = *f_n;
        if (f_s) cfg.params["s"] = *f_s;
        if (f_p) cfg.params["p"] = *f_p;
        if (f_alpha) cfg.params["alpha"] = *f_alpha;
        if (f_kappa) cfg.params["kappa"] = *f_kappa;
        if (f_m) cfg.params["m"] = *f_m;
        if (f_N) cfg.params["N"] = *f_N;
        for (const auto& kv : param_flags) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
            cfg.params[kv.substr(0, eq)] = parse_value(kv.substr(eq + 1));
        }
        tol.update(cfg.tolerances);
        if (!cfg.experiment.empty()) {
            const auto names = experiment_names();
            if (std::find(names.begin(), names.end(), cfg.experiment) == names.end())
                throw UsageError("unknown experiment '" + cfg.experiment + "'");
        }
    } catch (const std::exception& e) {
        std::cerr << "fracgrad: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (cfg.command == "constants") return run_constants(cfg);
        if (cfg.command == "apply") return run_apply(cfg);
        if (cfg.command == "verify") return run_verify(cfg, tol);
        return run_sweep(cfg, tol);
    } catch (const UsageError& e) {
        std::cerr << "fracgrad: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fracgrad: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "fracgrad: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "fracgrad: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "fracgrad: " << e.what() << "\n";
        return kFail;
    }
}
