// End-to-end tests of the CLI binary (path injected as RACAH_CLI_PATH by the
// build): output values and the exit-status contract.

#include <catch2/catch_amalgamated.hpp>
#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(RACAH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("eval commands") {
    RunResult r = run("eval1 --nu 1,1,1 --N 3 --n 0 --x 2");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");
    r = run("eval2 --nu 1,1,1,1 --N 2 --n 0,0 --x 1,2");
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");
    r = run("eval1 --nu 3/4,1,7/6 --N 3 --n 1 --x 0 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("n,x,value\n", 0) == 0);
}

TEST_CASE("table output is deterministic") {
    RunResult a = run("table1 --nu 3/4,1,7/6 --N 3 --format csv");
    RunResult b = run("table1 --nu 3/4,1,7/6 --N 3 --format csv");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("n\\x,0,1,2,3\n", 0) == 0);
    RunResult t2 = run("table2 --nu 3/4,1,7/6,3/2 --N 2");
    CHECK(t2.status == 0);
    CHECK(t2.out.rfind("n\\x,0;0,0;1,0;2,1;1,1;2,2;2\n", 0) == 0);
}

TEST_CASE("verify commands succeed on a single pack") {
    RunResult r = run("verify-qr3 --nu 3/4,5/6,7/8 --N 4 --format json");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"relationId\"") != std::string::npos);
    r = run("verify-orthogonality --nu 3/4,1,7/6 --N 3");
    CHECK(r.status == 0);
    r = run("weights --nu 3/4,1,7/6,3/2 --N 2");
    CHECK(r.status == 0);
}

TEST_CASE("exit status contract") {
    // usage errors
    CHECK(run("no-such-command").status == 2);
    CHECK(run("eval1 --nu 1,1,1 --N 3").status == 2);  // missing --n/--x
    // validity errors: nonpositive weight, pole-bearing pack, bad arity
    CHECK(run("eval1 --nu 1,-1,1 --N 3 --n 0 --x 0").status == 3);
    CHECK(run("eval1 --nu 1/2,1/2,1 --N 3 --n 0 --x 0").status == 3);
    CHECK(run("eval1 --nu 1,1,1,1 --N 3 --n 0 --x 0").status == 3);
}
