#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BCHTOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("dim command emits a closed-form JSON record") {
    RunResult r = run("dim --q 3 --m 4 --lambda 2 --delta 5");
    REQUIRE(r.status == 0);
    json rec = json::parse(r.out);
    CHECK(rec["q"] == 3);
    CHECK(rec["n"] == 40);
    CHECK(rec["dim"] == 28);
    CHECK(rec["method"] == "closed-form");
}

TEST_CASE("out-of-range delta exits 1 and names the bound") {
    RunResult r = run("dim --q 3 --m 4 --lambda 2 --delta 999");
    CHECK(r.status == 1);
    CHECK(r.out.find("14") != std::string::npos);  // (3^3-1)/2 + 1
}

TEST_CASE("oracle fallback answers beyond the theorem range") {
    RunResult r = run("dim --q 3 --m 4 --lambda 2 --delta 999 --oracle");
    // 999 > n-1 = 39 is still out of oracle range; use a legal but
    // theorem-uncovered delta instead
    CHECK(r.status == 1);
    r = run("dim --q 3 --m 4 --lambda 2 --delta 20 --oracle");
    REQUIRE(r.status == 0);
    json rec = json::parse(r.out);
    CHECK(rec["method"] == "oracle");
    CHECK(rec["dim"].get<long long>() >= 0);
}

TEST_CASE("bose command matches Table I") {
    RunResult r = run("bose --q 3 --m 4 --lambda 2 --delta 6");
    REQUIRE(r.status == 0);
    json rec = json::parse(r.out);
    CHECK(rec["bose"] == 7);
}

TEST_CASE("coset command prints leader, size, members") {
    RunResult r = run("coset --q 3 --n 40 --a 6 --format json");
    REQUIRE(r.status == 0);
    json rec = json::parse(r.out);
    CHECK(rec["leader"] == 2);
    CHECK(rec["size"] == 4);
    CHECK(rec["members"] == json::array({2, 6, 14, 18}));
}

TEST_CASE("table csv reproduces the q=3 m=4 lambda=2 block and is byte-stable") {
    std::string args = "table --q 3 --m 4 --lambda 2 --delta-min 2 --delta-max 8 --format csv";
    RunResult first = run(args);
    REQUIRE(first.status == 0);
    RunResult second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.out.find("q,m,lambda,n,delta,dim,bose,merged_with\n") == 0);
    CHECK(first.out.find("3,4,2,40,2,36,2,\n") != std::string::npos);
    CHECK(first.out.find("3,4,2,40,5,28,5,\n") != std::string::npos);
    CHECK(first.out.find("3,4,2,40,6,26,7,6--7\n") != std::string::npos);
    CHECK(first.out.find("3,4,2,40,8,22,8,\n") != std::string::npos);
}

TEST_CASE("table json rows round-trip through a generic parser") {
    RunResult r = run("table --q 3 --m 5 --lambda 2 --delta-min 2 --delta-max 12 --format json");
    REQUIRE(r.status == 0);
    std::size_t pos = 0;
    int rows = 0;
    while (pos < r.out.size()) {
        std::size_t eol = r.out.find('\n', pos);
        if (eol == std::string::npos) break;
        std::string line = r.out.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        json rec = json::parse(line);
        CHECK(rec["n"] == 121);
        CHECK(rec.contains("dim"));
        ++rows;
    }
    CHECK(rows == 11);
}

TEST_CASE("table's top row past the Bose range leaves bose empty") {
    // dimension covers one delta more than bose: (3^3-1)/2 + 1 = 14 vs 13
    RunResult r = run("table --q 3 --m 4 --lambda 2 --delta-min 13 --delta-max 14 --format csv");
    REQUIRE(r.status == 0);
    CHECK(r.out.find("3,4,2,40,13,") != std::string::npos);
    CHECK(r.out.find("3,4,2,40,14,8,,\n") != std::string::npos);  // dim 8, no bose
    CHECK(run("table --q 3 --m 4 --lambda 2 --delta-min 2 --delta-max 15").status == 1);
}

TEST_CASE("non-narrow-sense queries through --b") {
    RunResult r = run("dim --q 3 --m 4 --lambda 1 --delta 2 --b 11");
    REQUIRE(r.status == 0);
    json rec = json::parse(r.out);
    CHECK(rec["dim"] == 76);
    CHECK(rec["method"] == "closed-form");
    r = run("bose --q 3 --m 4 --lambda 1 --delta 2 --b 11");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["bose"] == 2);
    // ineligible b: closed form refuses, oracle answers
    CHECK(run("dim --q 3 --m 4 --lambda 1 --delta 2 --b 9").status == 1);
    r = run("dim --q 3 --m 4 --lambda 1 --delta 2 --b 9 --oracle");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["method"] == "oracle");
}

TEST_CASE("verify exits 0 on a clean sweep") {
    RunResult r = run("verify --q-max 3 --m-max 5 --parallel 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("zero mismatches") != std::string::npos);
}

TEST_CASE("lemmas small grid exits 0") {
    RunResult r = run("lemmas --grid small --parallel 2");
    CHECK(r.status == 0);
}

TEST_CASE("invalid parameters exit 1") {
    CHECK(run("dim --q 6 --m 4 --lambda 1 --delta 5").status == 1);   // q not a prime power
    CHECK(run("dim --q 3 --m 4 --lambda 5 --delta 5").status == 1);   // lambda does not divide q-1
    CHECK(run("table --q 3 --m 4 --lambda 2 --delta-min 9 --delta-max 2").status == 1);
}
