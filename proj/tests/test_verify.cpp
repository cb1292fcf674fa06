#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "doctest.h"
#include "picard/verify.hpp"

using namespace picard;

namespace {

int exit_status(const std::string& args) {
    const std::string command = std::string(PICARD_LAB_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture(const std::string& args) {
    const std::string command = std::string(PICARD_LAB_PATH) + " " + args;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

}  // namespace

TEST_CASE("suite names") {
    CHECK(suite_names().size() == 6);
    CHECK(std::is_sorted(suite_names().begin(), suite_names().end()));
}

TEST_CASE("usage validation") {
    CHECK_THROWS_AS(validate("nope", {}), UsageError);
    CHECK_THROWS_AS(validate("invariants", {.precision = 0}), UsageError);
    CHECK_THROWS_AS(validate("all", {.precision = kMaxPrecision + 1}), UsageError);
    CHECK_THROWS_AS(validate("char2-hesse", {.precision = 11}), UsageError);
    CHECK_THROWS_AS(validate("char3-legendre", {.precision = 5}), UsageError);
    CHECK_THROWS_AS(validate("cohomology", {.precision = 5, .group = "s3"}), UsageError);
    CHECK_THROWS_AS(validate("cohomology", {.group = "a5"}), UsageError);
    CHECK_THROWS_AS(validate("invariants", {.group = "s3"}), UsageError);
    CHECK_NOTHROW(validate("cohomology", {.precision = 1, .group = "z2-trivial"}));
    CHECK_NOTHROW(validate("cohomology", {.precision = 6, .group = "s3"}));
    CHECK_NOTHROW(validate("all", {.precision = 12}));
}

TEST_CASE("every suite passes with defaults, serial and parallel alike") {
    const auto parallel = run("all", {});
    CHECK(parallel.size() == suite_names().size());
    CHECK(all_passed(parallel));
    VerifyOptions serial;
    serial.policy = ExecutionPolicy::Serial;
    const auto s = run("all", serial);
    CHECK(to_json(s, serial) == to_json(parallel, {}));
}

TEST_CASE("suites pass at other precisions") {
    for (int n : {12, 17, 32}) {
        CAPTURE(n);
        CHECK(all_passed(run("all", {.precision = n})));
    }
    CHECK(all_passed(run("cohomology", {.precision = 1, .group = "z2-trivial"})));
    CHECK(all_passed(run("cohomology", {.precision = 6, .group = "s3"})));
}

TEST_CASE("json layout") {
    const auto r = run("invariants", {});
    const auto j = to_json(r, {});
    CHECK(j["status"] == "pass");
    CHECK(j["precision"] == 24);
    CHECK(j["suites"].size() == 1);
    CHECK(j["checks"].size() == r.front().checks.size());
    CHECK_FALSE(j.dump().find("seconds") != std::string::npos);
}

TEST_CASE("command line exit codes") {
    CHECK(exit_status("verify invariants") == 0);
    CHECK(exit_status("verify nope") == 2);
    CHECK(exit_status("verify cohomology --group s3 --precision 5") == 2);
    CHECK(exit_status("verify char2-hesse --precision 11") == 2);
    CHECK(exit_status("verify invariants --group s3") == 2);
    CHECK(exit_status("verify invariants --precision abc") == 2);
    CHECK(exit_status("frobnicate") == 2);
    CHECK(exit_status("verify all --serial") == 0);
}

TEST_CASE("json output is byte-identical across runs") {
    const auto a = capture("verify all --json --seed 7");
    const auto b = capture("verify all --json --seed 7");
    CHECK_FALSE(a.empty());
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j["seed"] == 7);
    CHECK(j["status"] == "pass");
}
