// End-to-end CLI checks: exit codes and byte-identical reruns.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(CCQ_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("reports are byte-identical across reruns with the same seed") {
    std::string seed = std::string(CCQ_DATA_DIR) + "/seeds/cc_24_8_3.json";
    std::string a = "/tmp/ccq_cli_a.txt", b = "/tmp/ccq_cli_b.txt";
    REQUIRE(run("distance " + seed + " --trials 500 --seed 9 --jobs 2 --out " + a) == 0);
    REQUIRE(run("distance " + seed + " --trials 500 --seed 9 --jobs 1 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));

    REQUIRE(run("params " + seed + " --out " + a) == 0);
    REQUIRE(run("params " + seed + " --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("exit codes") {
    std::string seed = std::string(CCQ_DATA_DIR) + "/seeds/cc_24_8_3.json";
    std::string conn = std::string(CCQ_DATA_DIR) + "/connections/identity_2x2.json";
    CHECK(run("params " + seed) == 0);
    CHECK(run("merges " + seed + " --conn " + conn) == 0);
    CHECK(run("surgery " + seed + " --conn " + conn + " --type x") == 0);
    CHECK(run("params /does/not/exist.json") == 2);
    CHECK(run("pair-connection " + seed + " --alpha 1 --beta 4") == 2);
    CHECK(run("nonsense") != 0);
}
