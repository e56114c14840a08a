#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "corings/fixtures.hpp"
#include "corings/io.hpp"

using namespace corings;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CORINGS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& tag) {
    return std::string("/tmp/corings_cli_test_") + tag + ".txt";
}

}  // namespace

TEST_CASE("fixture listing is complete and deterministic") {
    RunResult a = run("fixtures list");
    RunResult b = run("fixtures list");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::size_t lines = 0;
    for (char c : a.out)
        if (c == '\n') ++lines;
    CHECK(lines == 15);
}

TEST_CASE("emitted fixtures re-pass their checks") {
    for (std::string name : {"F2-Q", "F4-Fp5"}) {
        std::string coring = temp_path(name + "-d");
        std::string sigma = temp_path(name + "-s");
        CHECK(run("fixtures emit --family " + name + " --part coring --out " + coring).exit_code == 0);
        CHECK(run("fixtures emit --family " + name + " --part sigma --out " + sigma).exit_code == 0);
        CHECK(run("check coring " + coring).exit_code == 0);
        CHECK(run("check bimodule " + sigma).exit_code == 0);
    }
}

TEST_CASE("construct output re-passes check and is byte deterministic") {
    std::string coring = temp_path("f4-coring");
    std::string sigma = temp_path("f4-sigma");
    REQUIRE(run("fixtures emit --family F4-Q --part coring --out " + coring).exit_code == 0);
    REQUIRE(run("fixtures emit --family F4-Q --part sigma --out " + sigma).exit_code == 0);
    RunResult a = run("construct base-ext-module --coring " + coring + " --module " + sigma);
    RunResult b = run("construct base-ext-module --coring " + coring + " --module " + sigma);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::string built = temp_path("f4-built");
    write_file(built, a.out);
    CHECK(run("check coring " + built).exit_code == 0);
}

TEST_CASE("structural errors exit with code 2") {
    std::string bad = temp_path("bad");
    write_file(bad, "corings-doc 1\nkind coring\nfield Q\nnonsense\n");
    CHECK(run("check coring " + bad).exit_code == 2);
    CHECK(run("check coring /does/not/exist").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("absent properties exit with code 1") {
    std::string alpha = temp_path("f3-alpha");
    REQUIRE(run("fixtures emit --family F3-Q --part alpha --out " + alpha).exit_code == 0);
    std::string sw = temp_path("f3-sweedler");
    REQUIRE(run("construct sweedler --map " + alpha + " --out " + sw).exit_code == 0);
    RunResult r = run("props cosplit --coring " + sw);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("verdict absent") != std::string::npos);
}

TEST_CASE("verification subcommands run from documents") {
    Fixture f5 = *fixture_named("F5-Q");
    BaseExtension ext = base_ext_by_module(f5.d, f5.sigma);
    ModuleMorphism mm{ext, identity_coring_morphism(ext.coring)};
    std::string mm_path = temp_path("f5-mm");
    write_file(mm_path, serialize_document(document_of(mm)));
    CHECK(run("verify theta --mm " + mm_path).exit_code == 0);
    CHECK(run("verify adjunction --mm " + mm_path).exit_code == 0);
    CHECK(run("props frobenius --mm " + mm_path).exit_code == 0);
    RunResult a = run("verify theta --mm " + mm_path);
    RunResult b = run("verify theta --mm " + mm_path);
    CHECK(a.out == b.out);
}
