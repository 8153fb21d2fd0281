#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// one scratch dir per process; ctest runs us in the build tree
const std::string scratch = "./cli_scratch";

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int serial = 0;
    const std::string out = scratch + "/out" + std::to_string(serial) + ".txt";
    const std::string err = scratch + "/err" + std::to_string(serial) + ".txt";
    ++serial;
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") +
                            SPINON_CLI_PATH + " " + args + " > " + out + " 2> " +
                            err;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = (raw == -1) ? -1 : WEXITSTATUS(raw);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

double grab_value(const std::string& text, const std::string& key) {
    const size_t pos = text.find(key);
    REQUIRE(pos != std::string::npos);
    return std::strtod(text.c_str() + pos + key.size(), nullptr);
}

struct ScratchInit {
    ScratchInit() {
        [[maybe_unused]] const int rc =
            std::system(("mkdir -p " + scratch).c_str());
    }
} scratch_init;

}  // namespace

TEST_CASE("help paths exit 0") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("dcf-point --help").code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("dcf-point --w 1.0").code == 2);       // missing --k
    CHECK(run_cli("dcf-point --w 1 --k 2 --bogus").code == 2);
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("").code == 2);  // a subcommand is required
    const RunResult q = run_cli("dispersion --model xxz --q 0.5 --points 3 -o -");
    CHECK(q.code == 2);
    CHECK(q.err.find("(-1, 0)") != std::string::npos);
    CHECK(run_cli("dispersion --model xxz --points 3 -o -").code == 2);
}

TEST_CASE("computation failures exit 1") {
    const RunResult r = run_cli("sumrule --k 3.141592653589793 -o -");
    CHECK(r.code == 1);
    CHECK(r.err.find("diverges") != std::string::npos);
    CHECK(run_cli("dcf-point --w 1 --k 6.5").code == 1);  // k outside [0, 2pi]
}

TEST_CASE("dcf-point prints the interior reference values") {
    const RunResult r =
        run_cli("dcf-point --w 3.1415926535897931 --k 3.1415926535897931");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("in_band = true") != std::string::npos);
    const double s_pm = grab_value(r.out, "s_pm = ");
    const double s_xx = grab_value(r.out, "s_xx = ");
    CHECK(s_pm == doctest::Approx(0.30991950197266155).epsilon(1e-9));
    CHECK(s_xx == 4.0 * s_pm);
    CHECK(grab_value(r.out, "beta2 = ") ==
          doctest::Approx(1.3169578969248168).epsilon(1e-12));
}

TEST_CASE("dcf-point outside the band is a clean zero, exit 0") {
    const RunResult r =
        run_cli("dcf-point --w 9.42477796076938 --k 1.5707963267948966");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("s_pm = 0\n") != std::string::npos);
    CHECK(r.out.find("in_band = false") != std::string::npos);
    CHECK(r.out.find("beta1") == std::string::npos);
}

TEST_CASE("dispersion table pins the zone center row") {
    const RunResult r = run_cli("dispersion --points 11 -o -");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\n0,3.1415926535897931,-1.5707963267948966\n") !=
          std::string::npos);
    CHECK(r.out.find("beta,e,p") != std::string::npos);
}

TEST_CASE("xxz dispersion keeps tau on the unit circle") {
    const RunResult r =
        run_cli("dispersion --model xxz --q -0.5 --points 21 -o -");
    REQUIRE(r.code == 0);
    std::stringstream ss(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'a') continue;
        const size_t last = line.rfind(',');
        REQUIRE(last != std::string::npos);
        const double dev = std::strtod(line.c_str() + last + 1, nullptr);
        CHECK(std::abs(dev) < 1e-10);
        ++rows;
    }
    CHECK(rows == 21);
}

TEST_CASE("grid output is byte-identical for every worker count") {
    const std::string base = " dcf-grid --nk 13 --nw 9 --output-dir " + scratch;
    REQUIRE(run_cli(base + " --threads 1 -o grid_t1.csv").code == 0);
    REQUIRE(run_cli(base + " --threads 5 -o grid_t5.csv").code == 0);
    const std::string a = slurp(scratch + "/grid_t1.csv");
    const std::string b = slurp(scratch + "/grid_t5.csv");
    REQUIRE(!a.empty());
    CHECK(a == b);
    CHECK(a.find("k,w,s_pm,s_xx") != std::string::npos);
    CHECK(a.find("# failures = 0") != std::string::npos);
}

TEST_CASE("config file round-trip, flags win") {
    std::ofstream cfg(scratch + "/run.ini");
    cfg << "[dispersion]\npoints=7\nmin=-2.0\nmax=2.0\n";
    cfg.close();
    const RunResult from_cfg =
        run_cli("dispersion --config " + scratch + "/run.ini -o -");
    const RunResult from_flags =
        run_cli("dispersion --points 7 --min -2.0 --max 2.0 -o -");
    REQUIRE(from_cfg.code == 0);
    CHECK(from_cfg.out == from_flags.out);
    const RunResult flag_wins =
        run_cli("dispersion --config " + scratch + "/run.ini --points 5 -o -");
    const RunResult direct =
        run_cli("dispersion --points 5 --min -2.0 --max 2.0 -o -");
    CHECK(flag_wins.out == direct.out);
}

TEST_CASE("output directory: environment default, flag override") {
    [[maybe_unused]] int rc =
        std::system(("rm -rf " + scratch + "/envo " + scratch + "/flagd").c_str());
    rc = std::system(("mkdir -p " + scratch + "/envo " + scratch + "/flagd").c_str());
    REQUIRE(run_cli("dispersion --points 3",
                    "SPINON_OUTPUT_DIR=" + scratch + "/envo")
                .code == 0);
    CHECK(!slurp(scratch + "/envo/dispersion.csv").empty());
    REQUIRE(run_cli("dispersion --points 3 --output-dir " + scratch + "/flagd",
                    "SPINON_OUTPUT_DIR=" + scratch + "/envo")
                .code == 0);
    CHECK(!slurp(scratch + "/flagd/dispersion.csv").empty());
}

TEST_CASE("sumrule JSON carries the entries") {
    const RunResult r = run_cli("sumrule --k 1.5707963267948966 -o -");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"kind\": \"sumrule\"") != std::string::npos);
    CHECK(grab_value(r.out, "\"fixed_k_weight\": ") ==
          doctest::Approx(0.8692765152223688).epsilon(1e-6));
    CHECK(r.out.find("\"total_weight\": null") != std::string::npos);
}

TEST_CASE("limit-check reports second-order convergence") {
    const RunResult r =
        run_cli("limit-check --eps 0.4 0.2 0.1 --beta 0.5 1.0 -o -");
    REQUIRE(r.code == 0);
    const double order = grab_value(r.out, "# convergence_order = ");
    CHECK(order > 1.5);
    CHECK(order < 2.5);
    const double rescale = grab_value(r.out, "# rescale_estimate = ");
    CHECK(rescale == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("ed emits lines, curve and report") {
    const std::string prefix = scratch + "/edt";
    const RunResult r = run_cli("ed --n-sites 4 --k-index 1 --prefix " + prefix);
    REQUIRE(r.code == 0);
    const std::string lines = slurp(prefix + "_lines.csv");
    const std::string curve = slurp(prefix + "_curve.csv");
    const std::string report = slurp(prefix + "_report.json");
    CHECK(lines.find("omega,weight") != std::string::npos);
    CHECK(curve.find("k,w,s_pm,s_xx") != std::string::npos);
    CHECK(grab_value(report, "\"completeness\": ") ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(report.find("pi-shifted") != std::string::npos);
}
