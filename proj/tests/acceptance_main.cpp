// Acceptance suite: every gate runs at its full budget and stated tolerance,
// one verdict line per criterion.  Exit code is the number of failures.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "ruinkit/validation.hpp"

namespace {

int criterion_number(const std::string& name) {
    if (name == "exact-at-zero") return 1;
    if (name == "ultimate-survival") return 2;
    if (name == "occupation-normalization") return 3;
    if (name == "transform-gate") return 4;
    if (name == "mc-oracle-gate") return 5;
    if (name == "exponential-clock-equivalence") return 6;
    if (name == "vanishing-allowance-limit") return 7;
    if (name == "brownian-oracle-gate") return 8;
    if (name == "pathwise-orderings") return 9;
    if (name == "special-function-gate") return 10;
    return 99;
}

}  // namespace

int main() {
    ruinkit::ValidationOptions opts;
    opts.mc_paths = 1'000'000;
    opts.ordering_paths = 100'000;
    opts.seed = 42;
    opts.bm_dt = 1e-4;
    opts.enforce_runtime = true;

    auto checks = ruinkit::run_all_suites(opts);
    std::sort(checks.begin(), checks.end(),
              [](const ruinkit::CheckResult& a, const ruinkit::CheckResult& b) {
                  return criterion_number(a.name) < criterion_number(b.name);
              });

    int failures = 0;
    for (const auto& chk : checks) {
        failures += chk.pass ? 0 : 1;
        std::printf("[%s] criterion %2d %-30s max deviation %.3e (tolerance %.3e) in %.1f s\n",
                    chk.pass ? "PASS" : "FAIL", criterion_number(chk.name), chk.name.c_str(),
                    chk.observed, chk.tolerance, chk.seconds);
        if (!chk.pass) std::printf("       %s\n", chk.detail.c_str());
    }
    std::printf("acceptance: %zu criteria, %d failed\n", checks.size(), failures);
    return failures;
}
