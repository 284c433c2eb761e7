#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string temp_path(const char* tag) {
    static int counter = 0;
    return "/tmp/ihull_cli_" + std::to_string(::getpid()) + "_" + tag + "_" +
           std::to_string(counter++);
}

/** Run the CLI binary through the shell, feeding stdin_text on stdin. */
CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string in = temp_path("in"), out = temp_path("out");
    {
        std::ofstream f(in, std::ios::binary);
        f << stdin_text;
    }
    std::string cmd = std::string(IHULL_BIN_PATH) + " " + args + " < " + in + " > " + out +
                      " 2> /dev/null";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    std::remove(in.c_str());
    std::remove(out.c_str());
    return r;
}

nlohmann::json first_json_line(const std::string& text) {
    return nlohmann::json::parse(text.substr(0, text.find('\n')));
}

} // namespace

TEST_CASE("family subcommand emits the named instances") {
    CliResult pow2 = run_cli("family pow2 --n 3");
    REQUIRE(pow2.code == 0);
    nlohmann::json j = first_json_line(pow2.out);
    CHECK(j["type"] == "knapsack");
    CHECK(j["a"] == nlohmann::json::array({"4", "2", "1"}));
    CHECK(j["a0"] == "7");

    nlohmann::json vs = first_json_line(run_cli("family vs --s 3").out);
    CHECK(vs["a"] == nlohmann::json::array({"2", "5"}));
    CHECK(vs["a0"] == "23");

    nlohmann::json rub = first_json_line(run_cli("family rubin --k 1").out);
    CHECK(rub["a"] == nlohmann::json::array({"1", "1"}));
    CHECK(rub["a0"] == "3");
    nlohmann::json swapped =
        first_json_line(run_cli("family rubin --k 1 --variant index-swapped").out);
    CHECK(swapped["a"] == nlohmann::json::array({"1", "2"}));

    nlohmann::json morgan = first_json_line(run_cli("family morgan --nu 4").out);
    CHECK(morgan["type"] == "system");
    CHECK(morgan["A"].size() == 5);

    CHECK(run_cli("family nonesuch").code == 2);
    CHECK(run_cli("family rubin --k 0").code == 2);
    CHECK(run_cli("family morgan").code == 2);
}

TEST_CASE("ensemble families stream one instance per line") {
    CliResult cong = run_cli("family congruence-ensemble --n 2 --delta 2");
    REQUIRE(cong.code == 0);
    std::istringstream lines(cong.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(nlohmann::json::parse(line)["type"] == "congruence");
        ++count;
    }
    CHECK(count == 4);

    // gamma = 2 puts a0 in [2,3]; the clamp keeps only the two a0 = 2 lines
    CliResult ks = run_cli("family knapsack-ensemble --n 2 --gamma 2 --a0-max 2");
    REQUIRE(ks.code == 0);
    std::istringstream klines(ks.out);
    count = 0;
    while (std::getline(klines, line)) {
        CHECK(nlohmann::json::parse(line)["a0"] == "2");
        ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("hull subcommand reads instances from stdin") {
    CliResult r = run_cli("hull", R"({"type":"knapsack","a":[2,1],"a0":3})");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["vertex_count"] == 4);
    CHECK(j["dim"] == 2);

    CHECK(run_cli("hull", "this is not json").code == 2);

    CliResult empty =
        run_cli("hull", R"({"type":"system","A":[[1],[-1]],"b":[-2,1]})");
    REQUIRE(empty.code == 0);
    CHECK(nlohmann::json::parse(empty.out)["vertex_count"] == 0);

    CliResult relaxed =
        run_cli("hull", R"({"type":"knapsack","a":[0,3],"a0":6,"relaxed":true})");
    REQUIRE(relaxed.code == 0);
    nlohmann::json rj = nlohmann::json::parse(relaxed.out);
    CHECK(rj["vertex_count"] == 2);
    CHECK(rj["recession_generators"] ==
          nlohmann::json::array({nlohmann::json::array({"1", "0"})}));
}

TEST_CASE("hull subcommand surfaces caps and flag errors by exit code") {
    CHECK(run_cli("hull --point-cap 2", R"({"type":"knapsack","a":[4,2,1],"a0":7})")
              .code == 3);
    CHECK(run_cli("hull --point-cap abc", R"({"type":"knapsack","a":[2,1],"a0":3})")
              .code == 2);
}

TEST_CASE("bounds subcommand reports and rejects by instance kind") {
    CliResult r = run_cli("bounds", R"({"type":"knapsack","a":[2,1],"a0":2})");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["violations"] == 0);
    CHECK(j["checks"].is_array());

    CHECK(run_cli("bounds", R"({"type":"congruence","a":[1,1],"a0":1,"delta":2})")
              .code == 2);
}

TEST_CASE("census subcommand prints ensemble means") {
    CliResult cong = run_cli("census congruence --n 2 --delta 2");
    REQUIRE(cong.code == 0);
    CHECK(cong.out.rfind("phi=1.25\n", 0) == 0);
    CHECK(cong.out.find("phi_lower_bound=vacuous") != std::string::npos);

    CliResult big = run_cli("census congruence --n 2 --delta 32");
    REQUIRE(big.code == 0);
    CHECK(big.out.rfind("phi=2.365234375\n", 0) == 0);
    CHECK(big.out.find("met=yes") != std::string::npos);

    CliResult ks = run_cli("census knapsack --n 2 --gamma 2");
    REQUIRE(ks.code == 0);
    CHECK(ks.out == "psi=2.75\nphi=1.25\npsi_minus_phi=1.5\ninequality_failures=0\n");

    CHECK(run_cli("census nonesuch --n 2 --delta 2").code == 2);
    CHECK(run_cli("census congruence --delta 2").code == 2);
    CHECK(run_cli("census congruence --n 2 --delta 1100").code == 3);
}

TEST_CASE("census record exports are byte-stable across runs") {
    std::string f1 = temp_path("csv"), f2 = temp_path("csv");
    CHECK(run_cli("census congruence --n 2 --delta 8 --output " + f1).code == 0);
    CHECK(run_cli("census congruence --n 2 --delta 8 --output " + f2).code == 0);
    std::string a = slurp(f1), b = slurp(f2);
    CHECK(!a.empty());
    CHECK(a == b);

    CHECK(run_cli("census congruence --n 2 --delta 32 --sample 50 --seed 7 --output " +
                  f1).code == 0);
    CHECK(run_cli("census congruence --n 2 --delta 32 --sample 50 --seed 7 --output " +
                  f2).code == 0);
    CHECK(slurp(f1) == slurp(f2));
    CHECK(run_cli("census congruence --n 2 --delta 32 --sample 50 --seed 8 --output " +
                  f2).code == 0);
    CHECK(slurp(f1) != slurp(f2));
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("verify subcommand runs selected acceptance checks") {
    CliResult r = run_cli("verify --check c1");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("c01-pow2-count") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    CHECK(run_cli("verify --check nonesuch").code == 2);
}

TEST_CASE("unknown subcommands exit with the input-error code") {
    CHECK(run_cli("frobnicate").code == 2);
}
