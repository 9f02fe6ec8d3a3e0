#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef LTBOUNDS_CLI
#error "LTBOUNDS_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string tmp = std::string("/tmp/ltbounds_cli_out_") + std::to_string(::getpid());
    std::string cmd = std::string(LTBOUNDS_CLI) + " " + args + " > " + tmp + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(tmp.c_str());
    return {WEXITSTATUS(rc), buf.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table1 csv matches the paper values to 4 figures") {
    auto r = run_cli("table1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("m,theorem1,ilyin,ilyin_laptev,pan") != std::string::npos);
    const double want[4] = {0.9549, 0.6800, 0.5847, 0.5377};
    std::stringstream lines(r.output);
    std::string line;
    std::getline(lines, line);                         // config comment
    CHECK(line.rfind("# ltbounds", 0) == 0);
    std::getline(lines, line);                         // header
    for (int i = 0; i < 4; ++i) {
        REQUIRE(std::getline(lines, line));
        auto first_comma = line.find(',');
        auto second_comma = line.find(',', first_comma + 1);
        CHECK(std::stoi(line.substr(0, first_comma)) == i + 3);
        double v = std::stod(line.substr(first_comma + 1, second_comma - first_comma - 1));
        CHECK(std::abs(v - want[i]) < 5e-4);
    }
}

TEST_CASE("derive emits the SO(3) constant with config echo") {
    auto r = run_cli("derive --manifold so3 --mode envelope");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(std::abs(doc["constant"].get<double>() - 8.41312) < 5e-6);
    CHECK(doc["config"]["tool"] == "ltbounds");
    CHECK(doc["config"]["args"]["mode"] == "envelope");
    CHECK(doc["grid"]["points"].get<int>() > 0);
}

TEST_CASE("spectrum lists the first sphere levels") {
    auto r = run_cli("spectrum --manifold sphere:3 --cutoff 6");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["manifold"] == "sphere:3");
    REQUIRE(doc["levels"].size() == 2);
    CHECK(doc["levels"][0][0] == 2.0);
    CHECK(doc["levels"][0][1] == 3.0);
    CHECK(doc["levels"][1][0] == 6.0);
    CHECK(doc["levels"][1][1] == 5.0);
}

TEST_CASE("verify certifies shell families") {
    auto r = run_cli("verify --manifold sphere:3 --families shells:1..4");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["all_certified"] == true);
    CHECK(doc["reports"].size() == 4);
    for (const auto& rep : doc["reports"]) CHECK(rep["certified"] == true);
}

TEST_CASE("verify csv carries the config comment and per-family rows") {
    auto r = run_cli("verify --manifold so3 --families shells:1..2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("# ltbounds", 0) == 0);
    CHECK(r.output.find("family,lhs,rhs_energy,ratio,constant,certified") != std::string::npos);
    CHECK(r.output.find("so3/shells:1..1") != std::string::npos);
    CHECK(r.output.find("so3/shells:1..2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("derive --bogus-flag 1").exit_code == 2);
    CHECK(run_cli("spectrum --manifold sphere:3").exit_code == 2);  // missing --cutoff
}

TEST_CASE("computational errors exit 1") {
    CHECK(run_cli("spectrum --manifold sphere:3 --cutoff 0.5").exit_code == 1);
    CHECK(run_cli("spectrum --manifold sphere:1 --cutoff 10").exit_code == 1);
}

TEST_CASE("same argv and seed produce byte-identical output") {
    auto a = run_cli("derive --manifold su2 --mode exact --cutoff 2000");
    auto b = run_cli("derive --manifold su2 --mode exact --cutoff 2000");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto c = run_cli("verify --manifold sphere:3 --families mix:3:1-2 --seed 77");
    auto d = run_cli("verify --manifold sphere:3 --families mix:3:1-2 --seed 77");
    CHECK(c.exit_code == 0);
    CHECK(c.output == d.output);
}

}  // TEST_SUITE
