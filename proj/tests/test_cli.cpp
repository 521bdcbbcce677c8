#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef REPRFN_CLI
#error "REPRFN_CLI must name the command-line binary"
#endif

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(REPRFN_CLI) + " " + args + " 2>/dev/null";
    Result res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

const std::string kS1 = "s1_cli_test.json";

void write_s1() {
    const Result gen = run("gen --seed 4,5,7 --k 2 --limit 30");
    REQUIRE(gen.status == 0);
    std::ofstream(kS1) << gen.out;
}

}  // namespace

TEST_CASE("gen writes the canonical document") {
    const Result gen = run("gen --seed 4,5,7 --k 2 --limit 30");
    REQUIRE(gen.status == 0);
    const auto doc = nlohmann::json::parse(gen.out);
    CHECK(doc["boundaries"] == nlohmann::json::parse("[4,5,7,8,10,14,16,20,28]"));
    CHECK(doc["tail"]["a"] == 3);
    CHECK(doc["tail"]["i0"] == 0);
}

TEST_CASE("eval, oracle and --check agree") {
    write_s1();
    const Result fast = run("eval --set " + kS1 + " --k 2 --n 100 --check");
    CHECK(fast.status == 0);
    CHECK(trim(fast.out) == "14");
    const Result slow = run("oracle --set " + kS1 + " --k 2 --n 100");
    CHECK(trim(slow.out) == "14");
    const Result general = run("eval --set " + kS1 + " --k1 2 --k2 3 --n 500 --check --format json");
    CHECK(general.status == 0);
    CHECK(nlohmann::json::parse(general.out)["checked"] == true);
}

TEST_CASE("a generated set is accepted by every other subcommand") {
    write_s1();
    const std::string set = " --set " + kS1;
    CHECK(run("classic" + set + " --n 40 --variant R2").status == 0);
    CHECK(run("detect" + set).status == 0);
    CHECK(run("select-g" + set).status == 0);
    CHECK(run("decompose" + set + " --n 1000000").status == 0);
    CHECK(run("witnesses" + set + " --n 1000000").status == 0);
    CHECK(run("verify-psi" + set + " --n-lo 50 --n-hi 80").status == 0);
    CHECK(run("scan" + set + " --n-lo 1000 --n-hi 5000 --stride 500").status == 0);
}

TEST_CASE("witness report through the CLI") {
    write_s1();
    const Result res = run("witnesses --set " + kS1 + " --n 100000000 --g 7 --format json");
    REQUIRE(res.status == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["case"] == "I");
    CHECK(doc["pairs_checked"] == "3993");
    CHECK(doc["side"] == "set");
    CHECK(doc["guaranteed"]["exact"] == "74771/26");
    CHECK(doc["decomposition"]["m"] == "775193");
}

TEST_CASE("intersect") {
    CHECK(trim(run("intersect --k 2 --l 8").out) == "nonempty");
    CHECK(trim(run("intersect --k 2 --l 4").out) == "empty");
    const auto doc = nlohmann::json::parse(run("intersect --k 4 --l 64 --format json").out);
    CHECK(doc["nonempty"] == true);
    CHECK(doc["profile"]["d"] == 4);
}

TEST_CASE("csv output of verify-psi") {
    const Result res = run("verify-psi --set-json '{\"boundaries\":[0,1000]}' --k 2 --n-lo 10 --n-hi 12 --format csv");
    REQUIRE(res.status == 0);
    CHECK(res.out == "n,r_A,r_comp,ratio_num,ratio_den\n10,6,0,3,5\n11,6,0,6,11\n12,7,0,7,12\n");
}

TEST_CASE("exit codes") {
    write_s1();
    CHECK(run("").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("eval --set " + kS1).status == 2);            // missing --n
    CHECK(run("eval --n 4").status == 2);                   // missing set
    CHECK(run("decompose --set " + kS1 + " --n 10").status == 1);  // m < t_0
    CHECK(run("eval --set-json '{\"boundaries\":[3,1]}' --n 4").status == 1);
    CHECK(run("eval --set missing_file.json --n 4").status == 1);
    CHECK(run("select-g --set-json '{\"boundaries\":[1,2]}'").status == 1);  // no tail
    CHECK(run("gen --seed 1,2,3 --k 2").status == 1);
}

TEST_CASE("truncation is applied and reported") {
    const Result res = run(
        "select-g --set-json '{\"boundaries\":[1,3,4,5,7,8],\"tail\":{\"a\":3,\"k\":2,\"i0\":2}}' --format json");
    REQUIRE(res.status == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["truncated"] == true);
    CHECK(doc["T"] == 4 * (14 - 4));
}
