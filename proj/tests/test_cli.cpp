#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(HCURVE_BIN) + " --json " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(HC_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("reparam on the quartic example") {
    Run r = run("reparam " + data("quartic.curve"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "success");
    CHECK(j["r"] == 2);
    CHECK(j["gamma_minpoly"] == "x^2 + 6*x + 10");
    CHECK(j["witness_ideal"].size() == 3);
    CHECK(j["infinity_points"].size() == 2);
    CHECK(j["reparametrization"].size() == 2);
    CHECK(j["shift"].get<std::string>().rfind("t + (", 0) == 0);
    // identical input, identical bytes
    CHECK(run("reparam " + data("quartic.curve")).out == r.out);
}

TEST_CASE("reparam exit codes") {
    CHECK(run("reparam " + data("gaussian_cusp.curve")).code == 0);
    Run fail = run("reparam " + data("gaussian_fail.curve"));
    CHECK(fail.code == 1);
    CHECK(nlohmann::json::parse(fail.out)["status"] == "fail");
    CHECK(run("reparam /nonexistent.curve").code == 2);
    CHECK(run("--budget 1 reparam " + data("quartic.curve")).code == 3);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("witness and infinity commands") {
    Run w = run("witness " + data("quartic.curve"));
    REQUIRE(w.code == 0);
    CHECK(nlohmann::json::parse(w.out)["dimension"] == 1);
    Run inf = run("infinity " + data("quartic.curve"));
    REQUIRE(inf.code == 0);
    auto j = nlohmann::json::parse(inf.out);
    CHECK(j["infinity_points"].size() == 2);
    CHECK(j["r"] == 2);
}

TEST_CASE("hypercircle command") {
    Run r = run("hypercircle \"x^2+1\" \"1/(t+a)\"");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["components"][0] == "t/(t^2 + 1)");
    CHECK(j["components"][1] == "-1/(t^2 + 1)");
    CHECK(j["primitive_infinity_point"] == "[a : 1 : 0]");
    CHECK(run("hypercircle \"x^2+1\" \"(t+1)/(t+1)\"").code == 2);
    CHECK(run("hypercircle \"x^2-1\" \"t\"").code == 2);
}

TEST_CASE("conic-fields command") {
    Run p = run("conic-fields 1 1 -6 --method prime --count 4");
    REQUIRE(p.code == 0);
    auto j = nlohmann::json::parse(p.out);
    CHECK(j["set"] == nlohmann::json({5, 41, 701, 266381}));
    CHECK(j["fields"][3]["radicand"] == "3/35479418581");
    CHECK(j["pairwise_distinct"] == true);

    Run c = run("conic-fields 1 1 -6 --method crt --count 6");
    REQUIRE(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["set"] == nlohmann::json({5, 26, 391, 4031, 175306, 9276086}));
    CHECK(run("conic-fields 1 1 0").code == 2);
    CHECK(run("conic-fields 1 1 x").code == 2);
    CHECK(run("conic-fields 1 1 -6 --method other").code == 2);
}
