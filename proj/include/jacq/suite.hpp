#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacq {

// Captured output of one child-process invocation of the CLI binary.
struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Fork/exec runner with no shell in between, so arguments may carry raw JSON.
CliRun invoke_cli(const std::string& path, const std::vector<std::string>& args,
                  const std::string& stdin_data = "");

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance battery. cli_path must point at the command-line
// binary, which two of the criteria drive end to end. Progress and timing go
// to diagnostics; the returned details are deterministic so reports stay
// byte-reproducible.
std::vector<CriterionResult> run_acceptance_suite(const std::string& cli_path,
                                                  std::ostream& diagnostics);

} // namespace jacq
