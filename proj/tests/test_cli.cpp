#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "isoeof/cli.hpp"

using namespace isoeof::cli;

namespace {

struct ExecResult {
    int code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ExecResult run_binary(const std::string& args, const std::string& tag) {
    const std::string out_path = "cli_" + tag + ".out";
    const std::string cmd = std::string(ISOEOF_CLI_PATH) + " " + args + " > " + out_path + " 2> " +
                            out_path + ".err";
    const int status = std::system(cmd.c_str());
    ExecResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    return r;
}

RunConfig eof_config(int d, double F) {
    RunConfig cfg;
    cfg.command = Command::eof;
    cfg.d = d;
    cfg.F = F;
    return cfg;
}

}  // namespace

TEST_CASE("eof json output is pinned byte-for-byte") {
    const RunResult res = run(eof_config(3, 0.95));
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "{\"d\":3,\"F\":0.95,\"E_bits\":1.43496250072,\"regime\":\"linear\","
          "\"source\":\"closed_form\"}\n");
}

TEST_CASE("eof csv format") {
    RunConfig cfg = eof_config(2, 0.9);
    cfg.format = Format::csv;
    const RunResult res = run(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output == "d,F,E_bits,regime,source\n2,0.9,0.721928094887,analytic,closed_form\n");
}

TEST_CASE("eof numeric route reports its source") {
    RunConfig cfg = eof_config(3, 0.6);
    cfg.numeric = true;
    const RunResult res = run(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"source\":\"numeric_envelope\"") != std::string::npos);
}

TEST_CASE("verify-conjecture json and exit codes") {
    RunConfig cfg;
    cfg.command = Command::verify_conjecture;
    cfg.d = 3;
    cfg.tol = 1e-8;
    const RunResult res = run(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"pass\":true") != std::string::npos);
    CHECK(res.output.find("\"knee_conjectured\":0.888888888889") != std::string::npos);
    CHECK(res.output.find("\"slope_conjectured_bits\":3") != std::string::npos);
}

TEST_CASE("curve and rnm CSV schemas") {
    RunConfig curve;
    curve.command = Command::curve;
    curve.d = 3;
    curve.points = 11;
    const RunResult cres = run(curve);
    CHECK(cres.exit_code == 0);
    CHECK(cres.output.rfind("F,R_bits,E_analytic_bits,E_numeric_bits\n", 0) == 0);
    CHECK(cres.output.find("\n0.2,,0,0\n") != std::string::npos);  // R empty below 1/d

    RunConfig rnm;
    rnm.command = Command::rnm;
    rnm.d = 3;
    rnm.points = 10;
    const RunResult rres = run(rnm);
    CHECK(rres.exit_code == 0);
    CHECK(rres.output.rfind("F,n,m,R_bits\n", 0) == 0);
    CHECK(rres.output.find(",1,2,") != std::string::npos);
    CHECK(rres.output.find(",2,1,") != std::string::npos);
    CHECK(rres.output.find(",1,1,") != std::string::npos);
    // header + one row per branch per grid point
    int lines = 0;
    for (char c : rres.output)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + 3 * 10);
}

TEST_CASE("flag validation failures name the flag and bound") {
    RunConfig bad_f = eof_config(3, 1.5);
    CHECK(run(bad_f).exit_code == 2);
    CHECK(run(bad_f).error.find("--F") != std::string::npos);
    CHECK(run(bad_f).error.find("[0, 1]") != std::string::npos);

    RunConfig bad_d = eof_config(1, 0.5);
    CHECK(run(bad_d).exit_code == 2);
    CHECK(run(bad_d).error.find("--d") != std::string::npos);

    RunConfig oracle;
    oracle.command = Command::oracle;
    oracle.d = 3;
    oracle.F = 0.2;
    const RunResult ores = run(oracle);
    CHECK(ores.exit_code == 2);
    CHECK(ores.error.find("[1/d, 1]") != std::string::npos);
    CHECK(ores.error.find("0.333333333333") != std::string::npos);

    RunConfig bad_points;
    bad_points.command = Command::curve;
    bad_points.d = 3;
    bad_points.points = 1;
    CHECK(run(bad_points).exit_code == 2);

    RunConfig bad_samples;
    bad_samples.command = Command::twirl_mc;
    bad_samples.d = 2;
    bad_samples.samples = 0;
    CHECK(run(bad_samples).exit_code == 2);

    RunConfig bad_fmt;
    bad_fmt.command = Command::verify_conjecture;
    bad_fmt.d = 3;
    bad_fmt.format = Format::csv;
    CHECK(run(bad_fmt).exit_code == 2);
}

TEST_CASE("library-level determinism for every command") {
    std::vector<RunConfig> configs;
    configs.push_back(eof_config(3, 0.7));
    RunConfig curve;
    curve.command = Command::curve;
    curve.d = 3;
    curve.points = 50;
    configs.push_back(curve);
    RunConfig rnm;
    rnm.command = Command::rnm;
    rnm.d = 4;
    rnm.points = 40;
    configs.push_back(rnm);
    RunConfig verify;
    verify.command = Command::verify_conjecture;
    verify.d = 3;
    verify.tol = 1e-7;
    configs.push_back(verify);
    RunConfig twirl;
    twirl.command = Command::twirl_mc;
    twirl.d = 2;
    twirl.samples = 200;
    twirl.seed = 7;
    configs.push_back(twirl);
    RunConfig oracle;
    oracle.command = Command::oracle;
    oracle.d = 3;
    oracle.F = 0.8;
    oracle.restarts = 32;
    oracle.seed = 3;
    configs.push_back(oracle);

    for (const RunConfig& cfg : configs) {
        const RunResult a = run(cfg);
        const RunResult b = run(cfg);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == 0);
    }
}

TEST_CASE("binary: byte-identical reruns and exit codes") {
    const ExecResult a = run_binary("twirl-mc --d 2 --samples 150 --seed 11", "tw_a");
    const ExecResult b = run_binary("twirl-mc --d 2 --samples 150 --seed 11", "tw_b");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    CHECK(run_binary("verify-conjecture --d 3 --tol 1e-8", "vc").code == 0);
    CHECK(run_binary("eof --d 3 --F 1.5", "bad_f").code == 2);
    CHECK(run_binary("eof --d 3", "missing_f").code == 2);       // --F required
    CHECK(run_binary("eof --d 3 --F 0.5 --format yaml", "bad_fmt").code == 2);
    CHECK(run_binary("nonsense --d 3", "bad_cmd").code == 2);
}

TEST_CASE("binary: --out file matches stdout bytes") {
    const ExecResult direct = run_binary("eof --d 3 --F 0.95", "direct");
    const ExecResult redirected = run_binary("eof --d 3 --F 0.95 --out cli_out_file.json", "redir");
    CHECK(direct.code == 0);
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    CHECK(slurp("cli_out_file.json") == direct.out);
}
