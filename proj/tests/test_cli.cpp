#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const char* kCli = BLOWUP_CLI_PATH;
const char* kData = BLOWUP_TEST_DATA;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, int idx) {
    std::string out_path = "/tmp/blowup_cli_test_" + std::to_string(idx) + ".out";
    std::string cmd = std::string(kCli) + " " + args + " > " + out_path + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    return {WEXITSTATUS(rc), buf.str()};
}

std::string slurp(const std::string& rel) {
    std::ifstream in(std::string(kData) + "/" + rel);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string data(const std::string& rel) { return std::string(kData) + "/" + rel; }

int counter = 0;

void golden_case(const std::string& args, const std::string& golden) {
    auto res = run(args, ++counter);
    CHECK(res.exit_code == 0);
    CHECK(res.output == slurp(golden));
}

} // namespace

TEST_CASE("golden outputs are byte-exact") {
    golden_case("gb " + data("cusp.prob"), "golden/gb_cusp.txt");
    golden_case("resolve-curve " + data("cusp.prob"), "golden/resolve_cusp.txt");
    golden_case("resolve-curve " + data("node.prob") + " --json", "golden/resolve_node.json");
    golden_case("snc-check " + data("triple.prob"), "golden/snc_triple.txt");
    golden_case("snc-check " + data("cross.prob") + " --point p", "golden/snc_cross_point.txt");
    golden_case("saturate " + data("sat.prob") + " --by J", "golden/saturate.txt");
    golden_case("smooth-check " + data("parabola.prob") + " --relations R",
                "golden/smooth_parabola.txt");
    golden_case("principalize " + data("weighted.prob") + " --ideal I --in J --max-n 4",
                "golden/principalize_weighted.txt");
    golden_case("max-order " + data("cusp.prob"), "golden/max_order_cusp.txt");
}

TEST_CASE("false verdicts exit zero") {
    auto res = run("snc-check " + data("triple.prob"), ++counter);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("snc: false") != std::string::npos);
}

TEST_CASE("input errors exit two with a named position") {
    auto res = run("gb " + data("broken.prob"), ++counter);
    CHECK(res.exit_code == 2);
    auto missing = run("gb /nonexistent.prob", ++counter);
    CHECK(missing.exit_code == 2);
    auto unknown = run("frobnicate " + data("cusp.prob"), ++counter);
    CHECK(unknown.exit_code == 2);
    auto noideal = run("gb " + data("cross.prob"), ++counter); // file has no ideal I
    CHECK(noideal.exit_code == 2);
}

TEST_CASE("resource caps exit three") {
    auto res = run("resolve-curve " + data("cusp.prob") + " --gb-cap 3", ++counter);
    CHECK(res.exit_code == 3);
}

TEST_CASE("identical invocations are byte-identical") {
    auto a = run("resolve-curve " + data("cusp.prob") + " --json", ++counter);
    auto b = run("resolve-curve " + data("cusp.prob") + " --json", ++counter);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}

TEST_CASE("resolve then verify round trips through a JSON file") {
    auto trace = run("resolve-curve " + data("cusp.prob") + " --json", ++counter);
    REQUIRE(trace.exit_code == 0);
    std::string path = "/tmp/blowup_cli_trace.json";
    {
        std::ofstream out(path);
        out << trace.output;
    }
    auto verify = run("verify " + path, ++counter);
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("verified: true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("JSON polynomials reparse to equal values") {
    auto res = run("resolve-curve " + data("node.prob") + " --json", ++counter);
    REQUIRE(res.exit_code == 0);
    // the verify command reparses every polynomial in the document; a clean
    // verification implies the round trip held
    std::string path = "/tmp/blowup_cli_trace2.json";
    {
        std::ofstream out(path);
        out << res.output;
    }
    auto verify = run("verify " + path, ++counter);
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("verified: true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("order override reaches the engine") {
    golden_case("gb " + data("lexgb.prob") + " --order lex", "golden/gb_lex.txt");
}

TEST_CASE("a negative verification is still exit zero") {
    auto trace = run("resolve-curve " + data("cusp.prob") + " --json", ++counter);
    REQUIRE(trace.exit_code == 0);
    // flip one stored verdict: the re-check must disagree, verdict false
    std::string doc = trace.output;
    auto pos = doc.find("\"total_snc\": true");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 18, "\"total_snc\": false");
    std::string path = "/tmp/blowup_cli_flip.json";
    {
        std::ofstream out(path);
        out << doc;
    }
    auto res = run("verify " + path, ++counter);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("verified: false") != std::string::npos);
    std::remove(path.c_str());
}
