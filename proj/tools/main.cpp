// ruinkit command line tool: probability tables, simulation estimates, and
// the validation suites, with reproducible CSV/JSON output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruinkit/brownian.hpp"
#include "ruinkit/cramer_lundberg.hpp"
#include "ruinkit/models.hpp"
#include "ruinkit/quadrature.hpp"
#include "ruinkit/simulation.hpp"
#include "ruinkit/validation.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitNumericalFailure = 3;

struct RunConfig {
    std::string model = "cl";
    double c = 2.0;
    double lambda = 1.0;
    double alpha = 1.0;
    double sigma = 1.0;
    double x = 0.0;
    double t = 1.0;
    std::string ruin = "classical";
    double r = 0.1;
    double q = 1.0;
    std::string method = "formula";
    std::uint64_t paths = 100000;
    std::uint64_t seed = 1;
    double dt = 1e-3;
    std::string sweep;  // var:start:stop:steps
    std::string format = "csv";
    std::string out;
    std::string config_path;
};

struct Row {
    std::string sweep_var;
    double value;
    double probability;
    std::optional<double> std_error;
    std::string method;
    std::optional<std::uint64_t> seed;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    std::string var;
    std::vector<double> values;
};

// key=value config file; unknown keys are rejected, callers apply flags
// afterwards so the command line wins on conflict
void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config file line " + std::to_string(lineno) +
                              ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "model") cfg.model = value;
            else if (key == "c") cfg.c = std::stod(value);
            else if (key == "lambda") cfg.lambda = std::stod(value);
            else if (key == "alpha") cfg.alpha = std::stod(value);
            else if (key == "sigma") cfg.sigma = std::stod(value);
            else if (key == "x") cfg.x = std::stod(value);
            else if (key == "t") cfg.t = std::stod(value);
            else if (key == "ruin") cfg.ruin = value;
            else if (key == "r") cfg.r = std::stod(value);
            else if (key == "q") cfg.q = std::stod(value);
            else if (key == "method") cfg.method = value;
            else if (key == "paths") cfg.paths = std::stoull(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "dt") cfg.dt = std::stod(value);
            else if (key == "sweep") cfg.sweep = value;
            else if (key == "format") cfg.format = value;
            else if (key == "out") cfg.out = value;
            else throw ConfigError("config file: unknown key \"" + key + "\"");
        } catch (const std::invalid_argument&) {
            throw ConfigError("config file: bad value for \"" + key + "\"");
        } catch (const std::out_of_range&) {
            throw ConfigError("config file: bad value for \"" + key + "\"");
        }
    }
}

// the config file must be applied before the flag parse so that flags win;
// scan argv for --config by hand
std::string find_config_argument(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return {};
}

SweepSpec parse_sweep(const RunConfig& cfg) {
    if (cfg.sweep.empty()) return {"t", {cfg.t}};
    std::istringstream is(cfg.sweep);
    std::string var, s_start, s_stop, s_steps;
    if (!std::getline(is, var, ':') || !std::getline(is, s_start, ':') ||
        !std::getline(is, s_stop, ':') || !std::getline(is, s_steps))
        throw ConfigError("bad --sweep, expected var:start:stop:steps");
    if (var != "x" && var != "t" && var != "r" && var != "q")
        throw ConfigError("sweep variable must be one of x, t, r, q");
    double start, stop;
    long steps;
    try {
        start = std::stod(s_start);
        stop = std::stod(s_stop);
        steps = std::stol(s_steps);
    } catch (const std::exception&) {
        throw ConfigError("bad --sweep, expected numeric start:stop:steps");
    }
    if (steps < 1) throw ConfigError("sweep needs at least one step");
    SweepSpec spec;
    spec.var = var;
    for (long i = 0; i < steps; ++i) {
        const double f = steps == 1 ? 0.0
                                    : static_cast<double>(i) / static_cast<double>(steps - 1);
        spec.values.push_back(start + f * (stop - start));
    }
    return spec;
}

void apply_sweep_value(RunConfig& cfg, const std::string& var, double value) {
    if (var == "x") cfg.x = value;
    else if (var == "t") cfg.t = value;
    else if (var == "r") cfg.r = value;
    else if (var == "q") cfg.q = value;
}

void validate_config(const RunConfig& cfg, bool simulating) {
    if (cfg.model != "cl" && cfg.model != "bm")
        throw ConfigError("--model must be cl or bm");
    if (cfg.model == "cl") {
        if (!(cfg.c > 0.0) || !(cfg.lambda > 0.0) || !(cfg.alpha > 0.0))
            throw ConfigError("cl model needs positive --c, --lambda, --alpha");
    } else {
        if (!(cfg.c > 0.0) || !(cfg.sigma > 0.0))
            throw ConfigError("bm model needs positive --c and --sigma");
    }
    if (cfg.x < 0.0) throw ConfigError("--x must be >= 0");
    if (!(cfg.t > 0.0)) throw ConfigError("--t must be > 0");
    if (cfg.ruin != "classical" && cfg.ruin != "cumulative" && cfg.ruin != "exponential" &&
        cfg.ruin != "parisian")
        throw ConfigError("--ruin must be classical, cumulative, exponential or parisian");
    if ((cfg.ruin == "cumulative" || cfg.ruin == "parisian") && !(cfg.r > 0.0))
        throw ConfigError("--r must be > 0 for this ruin kind");
    if (cfg.ruin == "exponential" && !(cfg.q > 0.0))
        throw ConfigError("--q must be > 0 for exponential ruin");
    if (cfg.method != "formula" && cfg.method != "simulate" && cfg.method != "both")
        throw ConfigError("--method must be formula, simulate or both");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("--format must be csv or json");
    const bool wants_formula = cfg.method != "simulate";
    if (wants_formula && cfg.ruin == "parisian")
        throw ConfigError("no closed form for per-excursion deterministic delays; "
                          "use --method simulate");
    if (wants_formula && cfg.model == "bm" && cfg.ruin == "exponential")
        throw ConfigError("no closed form for bm exponential ruin; use --model cl "
                          "or --method simulate");
    if (simulating || cfg.method != "formula") {
        if (cfg.paths < 1) throw ConfigError("--paths must be >= 1");
        if (cfg.model == "bm") {
            if (!(cfg.dt > 0.0) || cfg.dt > cfg.t) throw ConfigError("need 0 < --dt <= --t");
            if (cfg.ruin == "exponential" || cfg.ruin == "parisian")
                throw ConfigError("bm simulation covers classical and cumulative ruin only");
        }
    }
}

double formula_probability(const RunConfig& cfg) {
    if (cfg.model == "cl") {
        const ruinkit::CramerLundbergParams m{cfg.c, cfg.lambda, cfg.alpha};
        if (cfg.ruin == "classical") return ruinkit::ruin_probability(m, cfg.x, cfg.t);
        if (cfg.ruin == "cumulative")
            return ruinkit::cumulative_parisian_probability(m, cfg.x, cfg.r, cfg.t);
        return ruinkit::exponential_parisian_probability(m, cfg.x, cfg.q, cfg.t);
    }
    const ruinkit::BrownianParams m{cfg.c, cfg.sigma};
    if (cfg.ruin == "classical") {
        // zero is regular for the lower half line: immediate ruin from x = 0
        return cfg.x == 0.0 ? 1.0 : ruinkit::ruin_probability(m, cfg.x, cfg.t);
    }
    return ruinkit::cumulative_parisian_probability(m, cfg.x, cfg.r, cfg.t);
}

ruinkit::Estimate simulate_probability(const RunConfig& cfg) {
    if (cfg.model == "cl") {
        const ruinkit::CramerLundbergParams m{cfg.c, cfg.lambda, cfg.alpha};
        if (cfg.ruin == "classical")
            return ruinkit::estimate_classical_ruin(m, cfg.x, cfg.t, cfg.paths, cfg.seed);
        if (cfg.ruin == "cumulative")
            return ruinkit::estimate_cumulative_parisian(m, cfg.x, cfg.r, cfg.t, cfg.paths,
                                                         cfg.seed);
        if (cfg.ruin == "parisian")
            return ruinkit::estimate_parisian(m, cfg.x, cfg.r, cfg.t, cfg.paths, cfg.seed);
        return ruinkit::estimate_exponential_parisian(m, cfg.x, cfg.q, cfg.t, cfg.paths,
                                                      cfg.seed);
    }
    const ruinkit::BrownianParams m{cfg.c, cfg.sigma};
    const auto res = ruinkit::simulate_bm_occupation(m, cfg.x, cfg.t, cfg.dt, cfg.paths,
                                                     cfg.seed, cfg.r);
    return cfg.ruin == "classical" ? res.classical : res.cumulative;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);  // round-trips exactly
    return buf;
}

std::string rows_to_csv(const std::vector<Row>& rows) {
    std::string out = "sweep_var,value,probability,std_error,method,seed\n";
    for (const auto& row : rows) {
        out += row.sweep_var + ',' + format_double(row.value) + ',' +
               format_double(row.probability) + ',';
        if (row.std_error) out += format_double(*row.std_error);
        out += ',' + row.method + ',';
        if (row.seed) out += std::to_string(*row.seed);
        out += '\n';
    }
    return out;
}

ordered_json config_to_json(const RunConfig& cfg) {
    ordered_json j;
    j["model"] = cfg.model;
    if (cfg.model == "cl") {
        j["c"] = cfg.c;
        j["lambda"] = cfg.lambda;
        j["alpha"] = cfg.alpha;
    } else {
        j["c"] = cfg.c;
        j["sigma"] = cfg.sigma;
    }
    j["x"] = cfg.x;
    j["t"] = cfg.t;
    j["ruin"] = cfg.ruin;
    if (cfg.ruin == "cumulative" || cfg.ruin == "parisian") j["r"] = cfg.r;
    if (cfg.ruin == "exponential") j["q"] = cfg.q;
    return j;
}

std::string rows_to_json(const RunConfig& cfg, const std::vector<Row>& rows) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["config"] = config_to_json(cfg);
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json jr;
        jr["sweep_var"] = row.sweep_var;
        jr["value"] = row.value;
        jr["probability"] = row.probability;
        if (row.std_error) jr["std_error"] = *row.std_error;
        jr["method"] = row.method;
        if (row.seed) jr["seed"] = *row.seed;
        jrows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(jrows);
    return doc.dump(2) + "\n";
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file " + out_path);
    os << payload;
}

int run_table_command(const RunConfig& cfg, bool force_simulate) {
    RunConfig base = cfg;
    if (force_simulate) base.method = "simulate";
    validate_config(base, force_simulate);
    const SweepSpec sweep = parse_sweep(base);

    std::vector<Row> rows;
    for (double value : sweep.values) {
        RunConfig point = base;
        apply_sweep_value(point, sweep.var, value);
        validate_config(point, false);
        if (point.method == "formula" || point.method == "both") {
            rows.push_back({sweep.var, value, formula_probability(point), std::nullopt,
                            "formula", std::nullopt});
        }
        if (point.method == "simulate" || point.method == "both") {
            const auto est = simulate_probability(point);
            rows.push_back({sweep.var, value, est.value, est.std_error, "simulate",
                            est.seed});
        }
    }
    emit(base.format == "csv" ? rows_to_csv(rows) : rows_to_json(base, rows), base.out);
    return kExitOk;
}

int run_validate_command(const std::string& suite, std::uint64_t budget, std::uint64_t seed,
                         const std::string& format, const std::string& out_path) {
    if (suite != "identities" && suite != "transform" && suite != "oracle" && suite != "all")
        throw ConfigError("--suite must be identities, transform, oracle or all");
    if (budget < 1) throw ConfigError("--budget must be >= 1");

    ruinkit::ValidationOptions opts;
    opts.mc_paths = budget;
    opts.ordering_paths = std::min<std::uint64_t>(budget, 100000);
    opts.seed = seed;
    opts.enforce_runtime = false;

    std::vector<ruinkit::CheckResult> checks;
    if (suite == "identities") checks = ruinkit::run_identity_suite(opts);
    else if (suite == "transform") checks = ruinkit::run_transform_suite(opts);
    else if (suite == "oracle") checks = ruinkit::run_oracle_suite(opts);
    else checks = ruinkit::run_all_suites(opts);

    bool all_pass = true;
    for (const auto& chk : checks) {
        all_pass = all_pass && chk.pass;
        std::printf("[%s] %-32s observed %.3e  tolerated %.3e  (%.2f s)\n",
                    chk.pass ? "PASS" : "FAIL", chk.name.c_str(), chk.observed,
                    chk.tolerance, chk.seconds);
        if (!chk.pass) std::printf("       %s\n", chk.detail.c_str());
    }
    std::printf("%s: %zu checks, suite \"%s\"\n", all_pass ? "OK" : "FAILED", checks.size(),
                suite.c_str());

    if (format == "json" || !out_path.empty()) {
        ordered_json doc;
        doc["schema_version"] = "1";
        doc["suite"] = suite;
        doc["budget"] = budget;
        doc["seed"] = seed;
        doc["pass"] = all_pass;
        ordered_json jchecks = ordered_json::array();
        for (const auto& chk : checks) {
            ordered_json jc;
            jc["name"] = chk.name;
            jc["pass"] = chk.pass;
            jc["observed"] = chk.observed;
            jc["tolerance"] = chk.tolerance;
            jc["seconds"] = chk.seconds;
            jc["detail"] = chk.detail;
            jchecks.push_back(std::move(jc));
        }
        doc["checks"] = std::move(jchecks);
        const std::string payload = doc.dump(2) + "\n";
        if (!out_path.empty()) emit(payload, out_path);
        else std::cout << payload;
    }
    return all_pass ? kExitOk : kExitValidationFailed;
}

void add_model_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--model", cfg.model, "surplus model: cl or bm");
    cmd->add_option("--c", cfg.c, "premium/drift rate");
    cmd->add_option("--lambda", cfg.lambda, "claim arrival rate (cl)");
    cmd->add_option("--alpha", cfg.alpha, "claim size rate (cl)");
    cmd->add_option("--sigma", cfg.sigma, "volatility (bm)");
    cmd->add_option("--x", cfg.x, "initial capital");
    cmd->add_option("--t", cfg.t, "time horizon");
    cmd->add_option("--ruin", cfg.ruin,
                    "ruin kind: classical, cumulative, exponential, parisian");
    cmd->add_option("--r", cfg.r, "allowance / delay parameter");
    cmd->add_option("--q", cfg.q, "exponential clock rate");
    cmd->add_option("--paths", cfg.paths, "simulation path count");
    cmd->add_option("--seed", cfg.seed, "simulation seed");
    cmd->add_option("--dt", cfg.dt, "bm simulation grid step");
    cmd->add_option("--sweep", cfg.sweep, "sweep spec var:start:stop:steps (var in x,t,r,q)");
    cmd->add_option("--format", cfg.format, "output format: csv or json");
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
    cmd->add_option("--config", cfg.config_path,
                    "key=value config file; flags win on conflict");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-time ruin probabilities for compound Poisson and Brownian "
                 "surplus models"};
    app.require_subcommand(1);

    RunConfig compute_cfg;
    auto* compute = app.add_subcommand("compute", "closed-form probability tables");
    add_model_options(compute, compute_cfg);
    compute->add_option("--method", compute_cfg.method,
                        "formula, simulate, or both (default formula)");

    RunConfig simulate_cfg;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates");
    add_model_options(simulate, simulate_cfg);

    std::string suite = "all";
    std::uint64_t budget = 100000;
    std::uint64_t vseed = 42;
    std::string vformat = "text";
    std::string vout;
    auto* validate = app.add_subcommand("validate", "run the validation suites");
    validate->add_option("--suite", suite, "identities, transform, oracle, or all");
    validate->add_option("--budget", budget, "Monte Carlo path budget");
    validate->add_option("--seed", vseed, "Monte Carlo seed");
    validate->add_option("--format", vformat, "text or json");
    validate->add_option("--out", vout, "JSON report file");

    try {
        const std::string config_path = find_config_argument(argc, argv);
        if (!config_path.empty()) {
            load_config_file(config_path, compute_cfg);
            load_config_file(config_path, simulate_cfg);
        }
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitBadConfig;
    }

    try {
        if (compute->parsed()) return run_table_command(compute_cfg, false);
        if (simulate->parsed()) return run_table_command(simulate_cfg, true);
        return run_validate_command(suite, budget, vseed, vformat, vout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const ruinkit::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << " (best estimate "
                  << e.best_estimate() << ")\n";
        return kExitNumericalFailure;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
}
