// One line per acceptance criterion; exits non-zero on any failure.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "picard/verify.hpp"

using namespace picard;

namespace {

struct Criterion {
    std::string name;
    std::string suite;
    std::vector<std::string> checks;
};

std::string capture(const std::string& command) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) return {};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"invariant values", "invariants",
         {"discriminant(y^2=x^3+x) = -64", "j(y^2=x^3+x) = 1728", "discriminant(y^2+y=x^3) = -27",
          "j(y^2+y=x^3) = 0"}},
        {"symbolic covariance", "invariants", {"Delta' = u^12 Delta", "invariant differential factor = u^-1"}},
        {"group law", "transforms",
         {"decomposition (1,r,0,0)(1,0,s,0)(1,0,0,t-rs) = (1,r,s,t)", "associativity on 1000 triples over F7",
          "kernel of chi0 over F2 generated by j_r, j_s, j_t", "kernel of chi0 over F3 generated by j_r, j_s, j_t",
          "kernel of chi0 over F7 generated by j_r, j_s, j_t"}},
        {"character triviality", "transforms", {"chi0^e trivializable iff 12 | e"}},
        {"characters of lambda", "aut-characters",
         {"|Aut(y^2=x^3+x)| over F13 = 4, cyclic", "chi4 exponent = 1", "|Aut(y^2+y=x^3)| over F7 = 6, cyclic",
          "chi6 exponent = 1", "chi_pair(1) = 1 in Z/12", "chi_pair(i) compatible mod 2 for i in 0..23"}},
        {"Legendre identity", "char3-legendre", {"c4^3 (mu^2-1)^2 = mu^6 Delta in F3[lam], mu = lam+1"}},
        {"Hesse identity", "char2-hesse",
         {"[1:1:0] is a flex of X^3+Y^3+Z^3 = mu XYZ", "j = mu^12/(mu^3-1)^3",
          "[1:0:-1] lies on the cubic and is a flex", "[-1:w:0] lies on the cubic and is a flex"}},
        {"action well-definedness", "",
         {"GL2(F3) closure has 48 elements", "GL2(F3) action law on all 2304 pairs", "omega-fixing subgroup = SL2(F3)",
          "alpha^2 = beta^3 = (alpha beta)^2 = e at N = 24"}},
        {"characteristic-3 elimination", "cohomology",
         {"s3: elimination: solution space is {0}", "s3: elimination: brute force agrees"}},
        {"characteristic-2 elimination", "cohomology",
         {"sl2f3: alpha solution space = span{mu^3, mu^6, mu^9}", "sl2f3: elimination: solution space is {0}",
          "sl2f3: elimination: brute force agrees"}},
        {"xi_{beta^2} properties", "cohomology",
         {"sl2f3: Z1 basis satisfies every pair equation", "sl2f3: xi_{beta^2} invariant under all 24 elements",
          "sl2f3: xi_{beta^2} has valuation >= 2"}},
        {"gerbe shard", "cohomology", {"z2-trivial: dim H1(Z/2, F2) = 1"}},
    };

    const auto started = std::chrono::steady_clock::now();
    const auto results = run("all", VerifyOptions{});
    auto lookup = [&](const std::string& suite, const std::string& check) -> const CheckResult* {
        for (const auto& s : results) {
            if (!suite.empty() && s.suite != suite) continue;
            for (const auto& c : s.checks) {
                if (c.check == check) return &c;
            }
        }
        return nullptr;
    };

    int failures = 0;
    int index = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        ++index;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    };

    for (const auto& c : criteria) {
        std::string missing;
        bool ok = true;
        for (const auto& name : c.checks) {
            const CheckResult* r = lookup(c.suite, name);
            if (r == nullptr || !r->passed) {
                ok = false;
                if (!missing.empty()) missing += "; ";
                missing += (r == nullptr ? "missing: " : "failed: ") + name;
            }
        }
        report(c.name, ok, missing);
    }

    const std::string command = std::string(PICARD_LAB_PATH) + " verify all --json";
    const std::string first = capture(command);
    const std::string second = capture(command);
    report("determinism", !first.empty() && first == second,
           first.empty() ? "no output" : std::to_string(first.size()) + " bytes per run");

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
              << seconds << " s\n";
    return failures == 0 ? 0 : 1;
}
