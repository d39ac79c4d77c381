// End-to-end tests of the installed CLI: golden output files, exit codes,
// and run-to-run determinism. MSYM_CLI_PATH and MSYM_GOLDEN_DIR are injected
// by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult capture(const std::string& full_command) {
    RunResult r;
    FILE* pipe = popen(full_command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

// stdout only; stderr discarded.
RunResult run(const std::string& args) {
    return capture(std::string(MSYM_CLI_PATH) + " " + args + " 2>/dev/null");
}

// stderr only; stdout discarded.
RunResult run_err(const std::string& args) {
    return capture(std::string(MSYM_CLI_PATH) + " " + args +
                   " 2>&1 1>/dev/null");
}

std::string golden(const std::string& name) {
    std::ifstream f(std::string(MSYM_GOLDEN_DIR) + "/" + name,
                    std::ios::binary);
    REQUIRE_MESSAGE(f.good(), ("missing golden file: " + name).c_str());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("lset-enum matches golden output and is deterministic") {
    const std::string args = "lset-enum --alpha 2,1 --beta 1,2 --n 3";
    const auto text = run(args);
    CHECK(text.status == 0);
    CHECK(text.out == golden("lset_enum.txt"));

    const auto json1 = run(args + " --format json");
    const auto json2 = run(args + " --format json");
    CHECK(json1.status == 0);
    CHECK(json1.out == golden("lset_enum.json"));
    CHECK(json1.out == json2.out);
}

TEST_CASE("lset-witness golden and out-of-range exit code") {
    const auto ok = run("lset-witness --alpha 1,1 --beta 2,1 --N 4");
    CHECK(ok.status == 0);
    CHECK(ok.out == golden("lset_witness.txt"));

    const auto bad = run_err("lset-witness --alpha 1,1 --beta 2,1 --N 2");
    CHECK(bad.status == 1);
    CHECK(bad.out.rfind("error: ", 0) == 0);
}

TEST_CASE("lset-decompose golden") {
    const auto r = run("lset-decompose --alpha 1,1 --beta 2,1 --n 4");
    CHECK(r.status == 0);
    CHECK(r.out == golden("lset_decompose.txt"));
}

TEST_CASE("product golden, text and json") {
    const std::string args = "product --alpha 2,1 --beta 1,2 --n 3";
    const auto text = run(args);
    CHECK(text.status == 0);
    CHECK(text.out == golden("product.txt"));

    const auto js = run(args + " --format json");
    CHECK(js.status == 0);
    CHECK(js.out == golden("product.json"));
}

TEST_CASE("verify-thm1 reports a full pass and is seed-deterministic") {
    const auto r1 = run("verify-thm1");
    CHECK(r1.status == 0);
    CHECK(r1.out.find("100/100 identities hold") != std::string::npos);
    CHECK(r1.out == golden("verify_thm1.txt"));

    const auto r2 = run("verify-thm1");
    CHECK(r1.out == r2.out);

    // the documented defaults, spelled out
    const auto explicit_flags =
        run("verify-thm1 --max-n 3 --max-d 2 --trials 100 --seed 7");
    CHECK(explicit_flags.status == 0);
    CHECK(explicit_flags.out == r1.out);

    const auto other_seed = run("verify-thm1 --trials 25 --seed 3");
    CHECK(other_seed.status == 0);
    CHECK(other_seed.out.find("25/25 identities hold") != std::string::npos);
}

TEST_CASE("polytope-nwc golden") {
    const auto r = run("polytope-nwc --u 5,4,3 --v 6,2,4");
    CHECK(r.status == 0);
    CHECK(r.out == golden("polytope_nwc.txt"));

    const auto halves = run("polytope-nwc --u 1/2,1/2 --v 1/3,2/3");
    CHECK(halves.status == 0);
}

TEST_CASE("polytope-feasible splits exit codes on the margin totals") {
    const auto ok = run("polytope-feasible --u 5,4,3 --v 6,2,4");
    CHECK(ok.status == 0);
    CHECK(ok.out == golden("polytope_feasible.txt"));

    const auto bad = run_err("polytope-feasible --u 1 --v 2");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("margins differ: 1 ≠ 2") != std::string::npos);
}

TEST_CASE("incidence golden") {
    const auto r = run("incidence --p 3 --q 3 --remove-corner");
    CHECK(r.status == 0);
    CHECK(r.out == golden("incidence.txt"));
}

TEST_CASE("constraint-system membership checks") {
    const std::string base = "constraint-system --alpha 1,1 --beta 2,1 --N 3";
    const auto member = run(base + " --check 0,0,0,1,1,0,1,0");
    CHECK(member.status == 0);
    CHECK(member.out == golden("constraint_check.txt"));

    const auto frac = run(base + " --check 0,0,1/2,1/2,1/2,1/2,1,0");
    CHECK(frac.status == 0);
    CHECK(frac.out == golden("constraint_check_fractional.txt"));

    const auto strict =
        run(base + " --check 0,0,1/2,1/2,1/2,1/2,1,0 --integral");
    CHECK(strict.status == 1);
}

TEST_CASE("rsk golden in both renderings plus json") {
    const auto english = run("rsk --top 1,2,3 --bottom 3,2,2");
    CHECK(english.status == 0);
    CHECK(english.out == golden("rsk.txt"));

    const auto french = run("rsk --top 1,2,3 --bottom 3,2,2 --french");
    CHECK(french.status == 0);
    CHECK(french.out == golden("rsk_french.txt"));

    const auto js = run("rsk --top 1,2,3 --bottom 3,2,2 --format json");
    CHECK(js.status == 0);
    CHECK(js.out == golden("rsk.json"));
}

TEST_CASE("rsk-inverse golden") {
    const auto r = run("rsk-inverse --P \"2,2;3\" --Q \"1,3;2\"");
    CHECK(r.status == 0);
    CHECK(r.out == golden("rsk_inverse.txt"));

    const auto bad = run_err("rsk-inverse --P \"2,2;3\" --Q \"1,2,3\"");
    CHECK(bad.status == 1);
}

TEST_CASE("biword and types golden") {
    const auto bw = run("biword --matrix \"0,0,0;0,1,1;0,0,1\"");
    CHECK(bw.status == 0);
    CHECK(bw.out == golden("biword.txt"));

    const auto ty = run("types --top 1,2,3 --bottom 3,2,2");
    CHECK(ty.status == 0);
    CHECK(ty.out == golden("types.txt"));
}

TEST_CASE("usage problems exit with status 2") {
    CHECK(run("lset-enum --alpha 2,1 --beta 1,2").status == 2);   // missing --n
    CHECK(run("lset-enum --alpha 2,x --beta 1,2 --n 3").status == 2);
    CHECK(run("lset-enum --alpha 2,-1 --beta 1,2 --n 3").status == 2);
    CHECK(run("lset-enum --alpha 2,1 --beta 1,2 --n 3 --format yaml").status ==
          2);
    CHECK(run("no-such-command").status == 2);
    CHECK(run("rsk --top 1,2 --bottom 3").status == 1);  // domain, not usage
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").status == 0);
    CHECK(run("lset-enum --help").status == 0);
}
