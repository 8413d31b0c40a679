#include <iostream>
#include <vector>

#include "jacq/suite.hpp"

// Drives the acceptance battery against the real command-line binary and
// prints one verdict line per criterion.
int main() {
    std::vector<jacq::CriterionResult> results =
        jacq::run_acceptance_suite(JACQ_CLI_PATH, std::cerr);
    bool ok = true;
    for (const jacq::CriterionResult& r : results) {
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " (" << r.name
                  << "): " << r.detail << "\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "all criteria satisfied" : "criteria failed") << "\n";
    return ok ? 0 : 1;
}
