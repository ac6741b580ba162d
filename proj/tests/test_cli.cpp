#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string cli_path() {
    const char* env = std::getenv("YDCALC_BIN");
    REQUIRE_MESSAGE(env != nullptr, "YDCALC_BIN must point at the CLI binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("displace command") {
    RunResult r = run("displace 8,7,1,1,1 --lambda \"2 mod 3\" --up");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9,7,2,1,1\n");

    RunResult d = run("displace 8,7,1,1,1 --lambda \"2 mod 3\" --down");
    CHECK(d.exit_code == 0);
    CHECK(d.out == "8,6,1,1\n");
}

TEST_CASE("bn command emits JSON") {
    RunResult r = run("--format json bn --g 9 --d 8 --r 3");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rho"] == -7);
    CHECK(doc["expected_w_dim"] == 17);
    CHECK(doc["in_theorem_range"] == false);
}

TEST_CASE("delta command") {
    RunResult r = run("delta 4,4,4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta: 6") != std::string::npos);

    RunResult zero = run("delta 0");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.find("delta: 0") != std::string::npos);

    RunResult oracle = run("delta 2,2 --oracle");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.out.find("oracle: 2") != std::string::npos);
}

TEST_CASE("emitted certificates verify with the same cost") {
    namespace fs = std::filesystem;
    fs::path file = fs::temp_directory_path() / "ydc_cli_cert.json";

    RunResult r = run("--format json delta 3,2 --certificate");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["delta"] == 3);
    std::ofstream(file) << doc;

    RunResult v = run("verify --file " + file.string());
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("cost: 3") != std::string::npos);

    doc["delta"] = 5;
    std::ofstream(file) << doc;
    CHECK(run("verify --file " + file.string()).exit_code == 2);
    fs::remove(file);
}

TEST_CASE("table command") {
    RunResult r = run("--format csv table --a 2..4 --b 2..3");
    CHECK(r.exit_code == 0);
    // anchors delta((2^2)) = 2, delta((4^2)) = 4, delta((4^3)) = 6
    CHECK(r.out.find("2") != std::string::npos);
    auto doc = run("--format json table --a 2..4 --b 2..3");
    CHECK(doc.exit_code == 0);
    auto j = nlohmann::json::parse(doc.out);
    CHECK(j["delta"][0][0] == 2);
    CHECK(j["delta"][2][0] == 4);
    CHECK(j["delta"][2][1] == 6);
}

TEST_CASE("construct and chain commands") {
    RunResult box = run("construct box --a 4 --b 3");
    CHECK(box.exit_code == 0);
    CHECK(box.out.find("delta: 6") != std::string::npos);

    namespace fs = std::filesystem;
    fs::path file = fs::temp_directory_path() / "ydc_cli_chain.json";
    RunResult cert = run("--format json delta 2,2 --certificate");
    std::ofstream(file) << cert.out;
    RunResult chain = run("chain --certificate " + file.string() + " --genus 3");
    CHECK(chain.exit_code == 0);
    auto cj = nlohmann::json::parse(chain.out);
    CHECK(cj["refined"] == true);
    CHECK(cj["partition"] == "2,2");
    CHECK(cj["genus"] == 3);
    fs::remove(file);
}

TEST_CASE("semigroup and linkage commands") {
    RunResult s = run("semigroup gaps:1,3,5 --partition --witness");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("3,2,1") != std::string::npos);
    CHECK(s.out.find("f=5") != std::string::npos);

    RunResult l = run("linkage 2,2 3,2,1");
    CHECK(l.exit_code == 0);
    CHECK(l.out.find("2 mod 4") != std::string::npos);
}

TEST_CASE("bad input exits 1") {
    CHECK(run("displace 2,2 --lambda \"2 mod 0\" --up").exit_code == 1);
    CHECK(run("displace 2,2 --lambda banana --up").exit_code == 1);
    CHECK(run("delta -3").exit_code == 1);
    CHECK(run("frobnicate").exit_code != 0);
}
