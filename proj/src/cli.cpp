#include "isoeof/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoeof/eof.hpp"
#include "isoeof/format.hpp"
#include "isoeof/rng.hpp"
#include "isoeof/twirl.hpp"

namespace isoeof::cli {

namespace {

RunResult usage_error(const std::string& message) { return RunResult{2, "", message}; }

/// Random Schmidt vector for the twirl-mc input state (flat Dirichlet via
/// normalized exponentials), deterministic per seed.
SchmidtVector random_schmidt(int d, std::uint64_t seed) {
    auto engine = make_engine(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> entries(static_cast<std::size_t>(d));
    double sum = 0.0;
    for (double& e : entries) {
        double u = uniform(engine);
        while (u <= 0.0) u = uniform(engine);
        e = -std::log(u);
        sum += e;
    }
    for (double& e : entries) e /= sum;
    return SchmidtVector(std::move(entries));
}

RunResult run_eof(const RunConfig& cfg) {
    if (cfg.d < 2) return usage_error("--d must be >= 2 (got " + std::to_string(cfg.d) + ")");
    if (!cfg.F) return usage_error("--F is required for eof");
    if (*cfg.F < 0.0 || *cfg.F > 1.0)
        return usage_error("--F must lie in [0, 1] (got " + g12(*cfg.F) + ")");
    const Format format = cfg.format.value_or(Format::json);

    const EofResult res = cfg.numeric ? eof_isotropic_numeric(cfg.d, *cfg.F, 10000)
                                      : eof_isotropic(cfg.d, *cfg.F);
    std::string out;
    if (format == Format::json) {
        out = json_object({{"d", std::to_string(res.d)},
                           {"F", g12(res.F)},
                           {"E_bits", g12(res.value.bits)},
                           {"regime", json_quote(to_string(res.regime))},
                           {"source", json_quote(to_string(res.source))}}) +
              "\n";
    } else {
        out = "d,F,E_bits,regime,source\n" + std::to_string(res.d) + "," + g12(res.F) + "," +
              g12(res.value.bits) + "," + to_string(res.regime) + "," + to_string(res.source) +
              "\n";
    }
    return RunResult{0, out, ""};
}

RunResult run_curve(const RunConfig& cfg) {
    if (cfg.d < 2) return usage_error("--d must be >= 2 (got " + std::to_string(cfg.d) + ")");
    const int points = cfg.points.value_or(1000);
    if (points < 2) return usage_error("--points must be >= 2 (got " + std::to_string(points) + ")");
    if (cfg.format && *cfg.format != Format::csv)
        return usage_error("--format must be csv for curve");

    std::string out = "F,R_bits,E_analytic_bits,E_numeric_bits\n";
    for (const EofCurveRow& row : eof_curve(cfg.d, points)) {
        out += g12(row.F);
        out += ',';
        if (row.r_bits) out += g12(*row.r_bits);
        out += ',';
        out += g12(row.e_analytic_bits);
        out += ',';
        out += g12(row.e_numeric_bits);
        out += '\n';
    }
    return RunResult{0, out, ""};
}

RunResult run_rnm(const RunConfig& cfg) {
    if (cfg.d < 2) return usage_error("--d must be >= 2 (got " + std::to_string(cfg.d) + ")");
    const int points = cfg.points.value_or(500);
    if (points < 2) return usage_error("--points must be >= 2 (got " + std::to_string(points) + ")");
    if (cfg.format && *cfg.format != Format::csv)
        return usage_error("--format must be csv for rnm");

    std::string out = "F,n,m,R_bits\n";
    for (const RnmRow& row : r_curve_rows(cfg.d, points)) {
        out += g12(row.F);
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.m);
        out += ',';
        out += g12(row.r_bits);
        out += '\n';
    }
    return RunResult{0, out, ""};
}

RunResult run_verify(const RunConfig& cfg) {
    if (cfg.d < 3)
        return usage_error("--d must be >= 3 for verify-conjecture (got " +
                           std::to_string(cfg.d) + ")");
    if (!(cfg.tol > 0.0)) return usage_error("--tol must be > 0 (got " + g12(cfg.tol) + ")");
    if (cfg.format && *cfg.format != Format::json)
        return usage_error("--format must be json for verify-conjecture");

    const ConjectureReport report = verify_conjecture(cfg.d, cfg.tol);
    const std::string out =
        json_object({{"d", std::to_string(report.d)},
                     {"knee_numeric", g12(report.knee_numeric)},
                     {"knee_conjectured", g12(report.knee_conjectured)},
                     {"slope_numeric_bits", g12(report.slope_numeric_bits)},
                     {"slope_conjectured_bits", g12(report.slope_conjectured_bits)},
                     {"max_envelope_deviation_bits", g12(report.max_envelope_deviation_bits)},
                     {"pass", report.pass ? "true" : "false"}}) +
        "\n";
    return RunResult{report.pass ? 0 : 1, out, ""};
}

RunResult run_twirl_mc(const RunConfig& cfg) {
    if (cfg.d < 2) return usage_error("--d must be >= 2 (got " + std::to_string(cfg.d) + ")");
    const int samples = cfg.samples.value_or(2000);
    if (samples < 1)
        return usage_error("--samples must be >= 1 (got " + std::to_string(samples) + ")");
    if (cfg.format && *cfg.format != Format::json)
        return usage_error("--format must be json for twirl-mc");

    // Input state and sampling use disjoint child streams of the user seed.
    const SchmidtVector mu = random_schmidt(cfg.d, child_seed(cfg.seed, 0));
    const DensityMatrix rho = pure_state_from_schmidt(mu);
    const TwirlReport report = twirl_monte_carlo(rho, cfg.d, samples, child_seed(cfg.seed, 1));

    const std::string out = json_object({{"d", std::to_string(cfg.d)},
                                         {"samples", std::to_string(report.samples)},
                                         {"seed", std::to_string(cfg.seed)},
                                         {"frobenius_distance", g12(report.frobenius_distance)},
                                         {"estimated_F", g12(report.estimated_F)},
                                         {"exact_F", g12(report.exact_F)}}) +
                            "\n";
    return RunResult{0, out, ""};
}

RunResult run_oracle(const RunConfig& cfg) {
    if (cfg.d < 2) return usage_error("--d must be >= 2 (got " + std::to_string(cfg.d) + ")");
    if (!cfg.F) return usage_error("--F is required for oracle");
    const double lo = 1.0 / cfg.d;
    if (*cfg.F < lo || *cfg.F > 1.0)
        return usage_error("--F must lie in [1/d, 1] = [" + g12(lo) + ", 1] (got " +
                           g12(*cfg.F) + ")");
    const int restarts = cfg.restarts.value_or(200);
    if (restarts < 1)
        return usage_error("--restarts must be >= 1 (got " + std::to_string(restarts) + ")");
    const Format format = cfg.format.value_or(Format::json);

    const double oracle_bits = oracle_min_entropy(cfg.d, *cfg.F, restarts, cfg.seed).bits;
    const double branch_bits = r_value(cfg.d, *cfg.F);
    const double diff = std::abs(oracle_bits - branch_bits);

    std::string out;
    if (format == Format::json) {
        out = json_object({{"d", std::to_string(cfg.d)},
                           {"F", g12(*cfg.F)},
                           {"restarts", std::to_string(restarts)},
                           {"seed", std::to_string(cfg.seed)},
                           {"oracle_bits", g12(oracle_bits)},
                           {"branch_bits", g12(branch_bits)},
                           {"abs_diff", g12(diff)}}) +
              "\n";
    } else {
        out = "d,F,restarts,seed,oracle_bits,branch_bits,abs_diff\n" + std::to_string(cfg.d) +
              "," + g12(*cfg.F) + "," + std::to_string(restarts) + "," + std::to_string(cfg.seed) +
              "," + g12(oracle_bits) + "," + g12(branch_bits) + "," + g12(diff) + "\n";
    }
    return RunResult{0, out, ""};
}

}  // namespace

RunResult run(const RunConfig& config) {
    try {
        switch (config.command) {
            case Command::eof: return run_eof(config);
            case Command::curve: return run_curve(config);
            case Command::rnm: return run_rnm(config);
            case Command::verify_conjecture: return run_verify(config);
            case Command::twirl_mc: return run_twirl_mc(config);
            case Command::oracle: return run_oracle(config);
        }
    } catch (const std::exception& e) {
        return RunResult{2, "", std::string("error: ") + e.what()};
    }
    return usage_error("unknown command");
}

int main_entry(int argc, char** argv) {
    CLI::App app{"entanglement of formation for isotropic states"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_name;
    std::string out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--d", cfg.d, "local dimension");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
        sub->add_option("--format", format_name, "output format (json or csv)");
    };

    CLI::App* eof_cmd = app.add_subcommand("eof", "E(d, F) for one isotropic state");
    add_common(eof_cmd);
    double f_value = 0.0;
    eof_cmd->add_option("--F", f_value, "maximally entangled fraction")->required();
    eof_cmd->add_flag("--numeric", cfg.numeric, "use the numeric envelope instead of the closed form");

    CLI::App* curve_cmd = app.add_subcommand("curve", "CSV curve F -> (R, E analytic, E numeric)");
    add_common(curve_cmd);
    int points = 0;
    curve_cmd->add_option("--points", points, "grid rows (default 1000)");

    CLI::App* rnm_cmd = app.add_subcommand("rnm", "CSV of every R_nm branch on its domain");
    add_common(rnm_cmd);
    rnm_cmd->add_option("--points", points, "rows per branch (default 500)");

    CLI::App* verify_cmd =
        app.add_subcommand("verify-conjecture", "numeric knee/slope/envelope vs the closed form");
    add_common(verify_cmd);
    verify_cmd->add_option("--tol", cfg.tol, "knee and slope tolerance (default 1e-8)");

    CLI::App* twirl_cmd =
        app.add_subcommand("twirl-mc", "Monte Carlo twirl of a random pure state");
    add_common(twirl_cmd);
    int samples = 0;
    twirl_cmd->add_option("--samples", samples, "Haar samples (default 2000)");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force constrained entropy minimum at (d, F)");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--F", f_value, "maximally entangled fraction")->required();
    int restarts = 0;
    oracle_cmd->add_option("--restarts", restarts, "random restarts (default 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (eof_cmd->parsed()) {
        cfg.command = Command::eof;
        cfg.F = f_value;
    } else if (curve_cmd->parsed()) {
        cfg.command = Command::curve;
        if (curve_cmd->count("--points") > 0) cfg.points = points;
    } else if (rnm_cmd->parsed()) {
        cfg.command = Command::rnm;
        if (rnm_cmd->count("--points") > 0) cfg.points = points;
    } else if (verify_cmd->parsed()) {
        cfg.command = Command::verify_conjecture;
    } else if (twirl_cmd->parsed()) {
        cfg.command = Command::twirl_mc;
        if (twirl_cmd->count("--samples") > 0) cfg.samples = samples;
    } else if (oracle_cmd->parsed()) {
        cfg.command = Command::oracle;
        cfg.F = f_value;
        if (oracle_cmd->count("--restarts") > 0) cfg.restarts = restarts;
    }

    if (!format_name.empty()) {
        if (format_name == "json")
            cfg.format = Format::json;
        else if (format_name == "csv")
            cfg.format = Format::csv;
        else {
            std::cerr << "--format must be json or csv (got " << format_name << ")\n";
            return 2;
        }
    }
    if (!out_path.empty()) cfg.out = out_path;

    const RunResult result = run(cfg);
    if (!result.error.empty()) std::cerr << result.error << "\n";
    if (result.exit_code == 0 || !result.output.empty()) {
        if (cfg.out) {
            std::ofstream file(*cfg.out, std::ios::binary);
            if (!file) {
                std::cerr << "--out: cannot open " << *cfg.out << " for writing\n";
                return 2;
            }
            file << result.output;
        } else {
            std::cout << result.output;
        }
    }
    return result.exit_code;
}

}  // namespace isoeof::cli
