#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wilsonq/system.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

const fs::path& scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("wilsonq_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("WILSONQ_BIN");
    REQUIRE(bin != nullptr);
    static int seq = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(seq));
    fs::path err = scratch_dir() / ("err" + std::to_string(seq));
    ++seq;
    std::string cmd = std::string(bin) + " " + args + " >" + out.string() + " 2>" + err.string();
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    REQUIRE(res.ec == std::errc());
    return v;
}

}  // namespace

TEST_CASE("spectrum level sweep emits the frozen ground-level bytes") {
    auto r = run_cli("spectrum --lambda 0.2 --mu -0.5 --m-max 0");
    CHECK(r.code == 0);
    CHECK(r.out == "m,E_m\n0,-0.08000000000000002\n");
}

TEST_CASE("spectrum physical mode lists every admissible level") {
    auto r = run_cli("spectrum --lambda 0.2 --mu -2.3 --nu 2.4 --a 2.4 --b 2.4 --physical");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "m,E_m");
    CHECK(lines[1] == "0,-0.0037807183364839334");
    CHECK(lines[2] == "1,-0.011834319526627224");
    CHECK(lines[3] == "2,-0.22222222222222252");
}

TEST_CASE("spectrum with no bound states warns and writes an empty table") {
    auto r = run_cli("spectrum --mu 0.8 --physical");
    CHECK(r.code == 0);
    CHECK(r.out == "m,E_m\n");
    CHECK(r.err.find("no bound states") != std::string::npos);
}

TEST_CASE("spectrum validation and computation failures map to distinct codes") {
    CHECK(run_cli("spectrum --lambda 0 --mu -0.5 --m-max 2").code == 1);
    CHECK(run_cli("spectrum --mu 0.8").code == 1);
    CHECK(run_cli("spectrum --lambda 0.2 --mu -2 --m-max 3").code == 2);
    CHECK(run_cli("spectrum --m-max -1").code == 1);
}

TEST_CASE("phase-shift sweep matches the library at the bridged sample") {
    auto r = run_cli("phase-shift");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 501);
    CHECK(lines[0] == "y,delta_over_pi");
    auto first = split_csv(lines[1]);
    CHECK(first[0] == "0.05");
    auto last = split_csv(lines[500]);
    CHECK(last[0] == "5");

    auto again = run_cli("phase-shift");
    CHECK(again.out == r.out);  // byte determinism

    // A grid whose nodes include y = 1 exactly: the row must match the
    // library value after the pi division.
    auto node = run_cli("phase-shift --y-min 0.5 --y-max 5 --y-points 10");
    CHECK(node.code == 0);
    bool found = false;
    wilsonq::wilson::WilsonParams w(0.8, 0.3, 0.6, 0.5);
    double want = wilsonq::system::phase_shift(1.0, w) / 3.14159265358979323846;
    for (const auto& line : lines_of(node.out)) {
        auto f = split_csv(line);
        if (f[0] == "1") {
            found = true;
            CHECK(std::abs(parse_double(f[1]) - want) < 1e-12);
        }
    }
    CHECK(found);
}

TEST_CASE("phase-shift rejects empty or degenerate ranges") {
    CHECK(run_cli("phase-shift --y-min 2 --y-max 1").code == 1);
    CHECK(run_cli("phase-shift --y-min 0 --y-max 1").code == 1);
    CHECK(run_cli("phase-shift --y-points 1").code == 1);
}

TEST_CASE("reconstruct zero-injection gives the pure counter-term in both columns") {
    auto r = run_cli("reconstruct --lambda 0.5 --mu 0.8 --a 0.6 --n-max 12 "
                     "--grid-min -4 --grid-max 4 --grid-points 41 --inject-zero-potential");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 42);
    CHECK(lines[0] == "x,V_14a,V_14b");
    double lambda = 0.5;
    double l4 = lambda * lambda * lambda * lambda;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto f = split_csv(lines[i]);
        REQUIRE(f.size() == 3);
        double x = parse_double(f[0]);
        double want = 0.5 * l4 * x * x;
        CHECK(parse_double(f[1]) == want);
        CHECK(parse_double(f[2]) == want);
    }
}

TEST_CASE("reconstruct truncation orders differ and the report says so") {
    std::string base = "reconstruct --lambda 0.5 --mu 0.8 --a 0.6 --grid-min -2 --grid-max 2 "
                       "--grid-points 21 ";
    auto r10 = run_cli(base + "--n-max 10");
    auto r20 = run_cli(base + "--n-max 20");
    CHECK(r10.code == 0);
    CHECK(r20.code == 0);
    CHECK(r10.out != r20.out);
    CHECK(r20.err.find("max |V_N - V_{N/2}|") != std::string::npos);
    CHECK(r20.err.find("V_14a") != std::string::npos);
    CHECK(r20.err.find("V_14b") != std::string::npos);
}

TEST_CASE("reconstruct leaves undefined ratio cells empty on a wide grid") {
    auto r = run_cli("reconstruct --lambda 0.5 --mu 0.8 --a 0.6 --n-max 20 "
                     "--grid-min -30 --grid-max 30 --grid-points 25");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 26);
    bool empty_a_seen = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto f = split_csv(lines[i]);
        REQUIRE(f.size() == 3);
        if (f[1].empty()) {
            empty_a_seen = true;
            CHECK_FALSE(f[2].empty());  // first-column formula stays defined
        }
    }
    CHECK(empty_a_seen);
}

TEST_CASE("reconstruct validates before computing") {
    CHECK(run_cli("reconstruct --lambda 0").code == 1);
    CHECK(run_cli("reconstruct --n-max 0").code == 1);
    CHECK(run_cli("reconstruct --grid-points 1").code == 1);
    CHECK(run_cli("reconstruct --method nope").code == 1);
}

TEST_CASE("verify passes by default and reports every check") {
    auto r = run_cli("verify");
    CHECK(r.code == 0);
    CHECK(r.out.find("summary: 9/9 checks passed") != std::string::npos);
    for (const char* name :
         {"gamma-identities", "recursion-vs-series", "orthonormal-consistency", "orthogonality",
          "generating-function", "weight-normalization", "kinetic-decomposition",
          "hamiltonian-symmetry", "harmonic-reconstruction", "hamiltonian-vs-recursion"}) {
        CHECK(r.out.find(name) != std::string::npos);
    }
    CHECK(r.out.find("(informational)") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify with zero tolerance fails everything") {
    auto r = run_cli("verify --tolerance 0");
    CHECK(r.code == 3);
    CHECK(r.out.find("summary: 0/9 checks passed") != std::string::npos);
}

TEST_CASE("verify --only runs exactly the requested check") {
    auto r = run_cli("verify --only orthogonality");
    CHECK(r.code == 0);
    CHECK(r.out.find("orthogonality") != std::string::npos);
    CHECK(r.out.find("gamma-identities") == std::string::npos);
    CHECK(r.out.find("summary: 1/1 checks passed") != std::string::npos);
    CHECK(run_cli("verify --only not-a-check").code == 1);
}

TEST_CASE("config file values apply and command-line flags win") {
    fs::path cfg = scratch_dir() / "settings.ini";
    {
        std::ofstream out(cfg);
        out << "[reconstruct]\nn-max=30\ngrid-points=11\n";
    }
    std::string common = "reconstruct --lambda 0.5 --mu 0.8 --a 0.6 --grid-min -2 --grid-max 2 ";
    auto with_cfg = run_cli(common + "--config " + cfg.string() + " --n-max 10");
    auto direct = run_cli(common + "--n-max 10 --grid-points 11");
    auto other = run_cli(common + "--n-max 30 --grid-points 11");
    CHECK(with_cfg.code == 0);
    CHECK(with_cfg.out == direct.out);
    CHECK(with_cfg.out != other.out);
}

TEST_CASE("unwritable output path fails cleanly without partial files") {
    auto r = run_cli("spectrum --lambda 0.2 --mu -0.5 --m-max 0 "
                     "--output /nonexistent_dir_zzz/out.csv");
    CHECK(r.code == 1);
    CHECK(r.err.find("cannot open output file") != std::string::npos);
    CHECK_FALSE(fs::exists("/nonexistent_dir_zzz/out.csv"));
}

TEST_CASE("svg output renders polylines") {
    fs::path svg = scratch_dir() / "phase.svg";
    auto r = run_cli("phase-shift --y-points 40 --format svg --output " + svg.string());
    CHECK(r.code == 0);
    std::string body = slurp(svg);
    CHECK(body.rfind("<svg", 0) == 0);
    CHECK(body.find("polyline") != std::string::npos);
    CHECK(body.find("</svg>") != std::string::npos);
}

TEST_CASE("help and parse errors") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("spectrum --help").code == 0);
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("spectrum --no-such-flag").code == 1);
}
