// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion, with the elapsed
// time checked against the per-criterion runtime budget. Exit code 0 only
// if everything passes.

#include <cstdio>
#include <string>
#include <vector>

#include "hyperharm/suite.hpp"

namespace {

int failures = 0;

void report(const std::string& label, const hyperharm::suite::CheckResult& c,
            double budget_s) {
    const bool in_budget = c.elapsed_s < budget_s;
    const bool ok = c.pass && in_budget;
    if (!ok) ++failures;
    std::printf("[%s] %s: %s (observed %.3g, bound %.3g) [%.2f s < %.0f s]\n",
                ok ? "PASS" : "FAIL", label.c_str(), c.name.c_str(),
                c.observed, c.tolerance, c.elapsed_s, budget_s);
}

void report_group(const std::string& label,
                  const std::vector<hyperharm::suite::CheckResult>& checks,
                  double budget_s) {
    double total = 0.0;
    for (const auto& c : checks) total += c.elapsed_s;
    for (const auto& c : checks) {
        const bool ok = c.pass;
        if (!ok) ++failures;
        std::printf("[%s] %s: %s (observed %.3g, bound %.3g)\n",
                    ok ? "PASS" : "FAIL", label.c_str(), c.name.c_str(),
                    c.observed, c.tolerance);
    }
    const bool in_budget = total < budget_s;
    if (!in_budget) ++failures;
    std::printf("[%s] %s: runtime [%.2f s < %.0f s]\n",
                in_budget ? "PASS" : "FAIL", label.c_str(), total, budget_s);
}

}  // namespace

int main() {
    using namespace hyperharm::suite;

    report("criterion 1", check_round_trips(), 2.0);
    report_group("criterion 2", check_frame_laws(), 2.0);
    report_group("criterion 3",
                 {check_hyp2f1_derivative(), check_hyp2f1_euler(),
                  check_bessel_recurrence(), check_bessel_wronskian(),
                  check_terminating_exactness()},
                 5.0);
    report("criterion 4", check_hierarchy_residuals(), 10.0);
    report_group("criterion 5", check_parameter_controls(), 1.0);
    report("criterion 6", check_helmholtz_modes(), 30.0);
    report_group("criterion 7", check_radial_law(), 10.0);
    report_group("criterion 8", check_dispersion(), 5.0);
    report_group("criterion 9", check_first_latitude_tables(), 2.0);
    report("criterion 10", check_cartesian_modes(), 5.0);

    if (failures == 0) {
        std::printf("ACCEPTANCE: PASS\n");
        return 0;
    }
    std::printf("ACCEPTANCE: FAIL (%d)\n", failures);
    return 1;
}
