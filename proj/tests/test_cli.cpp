#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BRAID_STRATA_BIN
#error "BRAID_STRATA_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BRAID_STRATA_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("cells --space euclidean").exit_code == 2);   // n,k required
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("tc --family unknown --n 2").exit_code == 2);
    CHECK(run("poset --space sphere --n 2 --k 1 --filter all").exit_code == 2);
}

TEST_CASE("resource refusal exits with code 3") {
    CHECK(run("cells --space euclidean --n 6 --k 2 --filter all --limit-cells 10").exit_code == 3);
}

TEST_CASE("cells command counts match") {
    auto r = run("cells --space euclidean --n 3 --k 2 --filter configuration");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("total 24 cells") != std::string::npos);

    r = run("cells --space euclidean --n 2 --k 2 --filter all --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"space\": \"euclidean\"") != std::string::npos);
}

TEST_CASE("poset artifacts are deterministic byte for byte") {
    auto a = run("poset --space sphere --n 2 --k 2 --format json");
    auto b = run("poset --space sphere --n 2 --k 2 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"version\"") != std::string::npos);
    CHECK(a.out.find("\"covers\"") != std::string::npos);

    auto dot = run("poset --space sphere --n 2 --k 2 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("rank=same") != std::string::npos);
}

TEST_CASE("homology command reproduces the small oracles") {
    auto r = run("homology --space sphere --n 3 --k 1 --quotient");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(Z, Z)") != std::string::npos);

    r = run("homology --space sphere --n 2 --k 2 --quotient --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"torsion\": [\n        \"2\"\n      ]") != std::string::npos);
}

TEST_CASE("verify sweeps pass and fail loudly") {
    CHECK(run("verify --theorem dim-sphere --n-max 3 --k-max 2").exit_code == 0);
    CHECK(run("verify --theorem dim-salvetti --n-max 4 --k-max 2").exit_code == 0);
    CHECK(run("verify --theorem freeness --n-max 3 --k-max 2").exit_code == 0);
    auto r = run("verify --theorem oracle-consistency --n-max 3 --k-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all instances pass") != std::string::npos);

    r = run("verify --theorem oracle-consistency --n-max 2 --k-max 1 --debug-oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("witness for") != std::string::npos);
    CHECK(r.out.find("-1*eps") != std::string::npos);  // exact fractions with the infinitesimal
}

TEST_CASE("worker count does not change artifacts") {
    auto serial = run("poset --space sphere --n 3 --k 2 --format json");
    auto parallel = run("poset --space sphere --n 3 --k 2 --format json --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("tc tables") {
    auto r = run("tc --family sphere-product --ks 2,3 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value=7") != std::string::npos);

    r = run("tc --family tcs-sphere --n 2 --k 5");
    CHECK(r.out.find("value=2") != std::string::npos);

    r = run("tc --family cohom-witness --n 3 --m 1");
    CHECK(r.out.find("= -2") != std::string::npos);
    CHECK(r.out.find(">= 3") != std::string::npos);

    r = run("tc --family sphere-product --ks 2 --n 3 --witness");
    CHECK(r.out.find("certified cl >= 3: yes") != std::string::npos);

    r = run("tc --family torus --k 2 --n 3 --classical");
    CHECK(r.out.find("value=5") != std::string::npos);
}

TEST_CASE("output file writing") {
    std::string path = "/tmp/braid_strata_cli_test.json";
    std::remove(path.c_str());
    auto r = run("homology --space sphere --n 2 --k 1 --format json --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str().find("\"betti\": 1") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("environment variable caps the cell count") {
    std::string cmd = "BRAID_STRATA_LIMIT=5 " + std::string(BRAID_STRATA_BIN) +
                      " cells --space euclidean --n 3 --k 2 --filter configuration 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 1024> buf{};
    std::string out;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
    CHECK(out.find("projected 24") != std::string::npos);
}
