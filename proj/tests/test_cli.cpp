// End-to-end tests of the CLI binary: golden-file byte comparisons for the
// worked four-state example, exit-code contract, and seed determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = KEMENY_CLI_PATH;
const std::string data = DATA_DIR;
const std::string golden = GOLDEN_DIR;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string out_path = std::string(std::tmpnam(nullptr)) + ".cli";
    const std::string cmd = cli + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream f(out_path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    std::remove(out_path.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string write_temp(const std::string& text) {
    const std::string path = std::string(std::tmpnam(nullptr)) + ".json";
    std::ofstream f(path, std::ios::binary);
    f << text;
    return path;
}

}  // namespace

TEST_CASE("analyze report matches the golden file byte for byte") {
    const RunResult r = run("analyze --input " + data + "/paper_sec3.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(golden + "/sec3_report.json"));
}

TEST_CASE("analyze report round-trips through its chain echo") {
    // feed the echoed chain back in; the report must be identical
    const RunResult first = run("analyze --input " + data + "/paper_sec3.json");
    REQUIRE(first.exit_code == 0);
    const auto pos = first.output.find("\"chain\": {");
    REQUIRE(pos != std::string::npos);
    // extract the chain object by brace matching
    std::size_t depth = 0, start = first.output.find('{', pos), end = start;
    for (std::size_t i = start; i < first.output.size(); ++i) {
        if (first.output[i] == '{') ++depth;
        if (first.output[i] == '}' && --depth == 0) {
            end = i;
            break;
        }
    }
    const std::string echo = first.output.substr(start, end - start + 1);
    const std::string path = write_temp(echo);
    const RunResult second = run("analyze --input " + path);
    std::remove(path.c_str());
    CHECK(second.exit_code == 0);
    CHECK(second.output == first.output);
}

TEST_CASE("gf output matches the golden file; trivial cases") {
    const RunResult g12 = run("gf --input " + data + "/paper_sec3.json --u 1 --v 2 --t 0");
    CHECK(g12.exit_code == 0);
    CHECK(g12.output == slurp(golden + "/sec3_g12.txt"));

    const RunResult self = run("gf --input " + data + "/paper_sec3.json --u 2 --v 2 --t 0");
    CHECK(self.exit_code == 0);
    CHECK(self.output.find("(x) = 1\n") != std::string::npos);

    const RunResult bad = run("gf --input " + data + "/paper_sec3.json --u 9 --v 1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("unknown state") != std::string::npos);
}

TEST_CASE("plot-data matches the golden file and its endpoints") {
    const RunResult r = run("plot-data --input " + data + "/paper_sec3.json --samples 101");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(golden + "/sec3_plot.csv"));
    CHECK(r.output.rfind("x,pi_1,pi_2,pi_3,pi_4\n", 0) == 0);
    CHECK(r.output.find("\n0,1.00000000000,1.00000000000,1.00000000000,1.00000000000\n") !=
          std::string::npos);
}

TEST_CASE("reducible input exits 2 and names the components") {
    const std::string path = write_temp(
        R"({"states":["a","b","c"],)"
        R"("matrix":[["1/2","1/2","0"],["1/2","1/2","0"],["0","1/2","1/2"]]})");
    const RunResult r = run("analyze --input " + path);
    std::remove(path.c_str());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("not irreducible") != std::string::npos);
    CHECK(r.output.find("{0,1}") != std::string::npos);
    CHECK(r.output.find("{2}") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
    const std::string path = write_temp("not json at all");
    const RunResult r = run("analyze --input " + path);
    std::remove(path.c_str());
    CHECK(r.exit_code == 2);

    const RunResult missing = run("analyze --input /nonexistent/chain.json");
    CHECK(missing.exit_code == 2);

    const RunResult usage = run("analyze");
    CHECK(usage.exit_code == 2);
}

TEST_CASE("simulate is deterministic per seed, byte for byte") {
    const std::string args =
        "simulate --input " + data + "/paper_sec3.json --u 1 --v 3 --seed 42 --paths 5000";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const RunResult other = run(
        "simulate --input " + data + "/paper_sec3.json --u 1 --v 3 --seed 43 --paths 5000");
    CHECK(other.output != a.output);
}

TEST_CASE("simulate on the swap chain reports an exactly-one mean") {
    const RunResult r =
        run("simulate --input " + data + "/swap2.json --u a --v b --seed 7 --paths 500");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("empirical mean = 1 ") != std::string::npos);
    CHECK(r.output.find("exact mean     = 1 ") != std::string::npos);
}

TEST_CASE("bad flag values exit 2") {
    const RunResult parse = run("simulate --input " + data + "/lazy2.json --u a --t 99");
    CHECK(parse.exit_code == 2);
    const RunResult fmt = run("analyze --input " + data + "/lazy2.json --format xml");
    CHECK(fmt.exit_code == 2);
}

TEST_CASE("geometric stop mode is deterministic and labelled") {
    const std::string args = "simulate --input " + data +
                             "/paper_sec3.json --u 1 --geometric 1/2 --seed 31 --paths 2000";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("state,empirical,exact,delta,z") != std::string::npos);
}

TEST_CASE("csv input format is accepted") {
    const std::string path = std::string(std::tmpnam(nullptr)) + ".csv";
    {
        std::ofstream f(path);
        f << "1/2,1/2\n1/3,2/3\n";
    }
    const RunResult r = run("analyze --input " + path + " --format csv");
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"report_version\": 1") != std::string::npos);
}
