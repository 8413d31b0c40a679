#include "jacq/suite.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <csignal>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

#include "jacq/errors.hpp"
#include "jacq/generators.hpp"
#include "jacq/inversion.hpp"
#include "jacq/json_io.hpp"
#include "jacq/reduction.hpp"
#include "jacq/wick.hpp"

namespace jacq {

// Inputs are small enough to write before draining the output pipes.
CliRun invoke_cli(const std::string& path, const std::vector<std::string>& args,
                  const std::string& stdin_data) {
    signal(SIGPIPE, SIG_IGN);
    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
        throw ResourceLimitError("pipe() failed");
    }
    pid_t pid = fork();
    if (pid < 0) throw ResourceLimitError("fork() failed");
    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0],
                       err_pipe[1]}) {
            close(fd);
        }
        std::vector<char*> argv;
        argv.push_back(const_cast<char*>(path.c_str()));
        for (const std::string& a : args) argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        execv(path.c_str(), argv.data());
        _exit(127);
    }
    close(in_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[1]);
    if (!stdin_data.empty()) {
        ssize_t ignored = write(in_pipe[1], stdin_data.data(), stdin_data.size());
        (void)ignored;
    }
    close(in_pipe[1]);
    CliRun result;
    char buffer[4096];
    const std::pair<int, std::string*> sinks[] = {{out_pipe[0], &result.out},
                                                  {err_pipe[0], &result.err}};
    for (auto [fd, sink] : sinks) {
        ssize_t got;
        while ((got = read(fd, buffer, sizeof buffer)) > 0) {
            sink->append(buffer, static_cast<std::size_t>(got));
        }
        close(fd);
    }
    int status = 0;
    waitpid(pid, &status, 0);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

namespace {

// The running example: (z1 + z2^3, z2), whose inverse is (u1 - u2^3, u2).
PolySystem cubic_shear() {
    Poly w1(2);
    w1.add_term(Monomial::var(2, 3), rational(-1));
    return PolySystem(2, 3, {w1, Poly(2)});
}

// A map with nonconstant Jacobian determinant: (z1 - z1^2 - z2^3, z2 - z1^2).
PolySystem nonconstant_example() {
    Poly w1(2), w2(2);
    w1.add_term(Monomial::var(1, 2), rational(1));
    w1.add_term(Monomial::var(2, 3), rational(1));
    w2.add_term(Monomial::var(1, 2), rational(1));
    return PolySystem(2, 3, {w1, w2});
}

// Draws tame systems until the composite content degree is exactly d.
TameSystem tame_of_degree(int n, int steps, int d, std::uint64_t& seed) {
    for (;;) {
        TameSystem t = random_tame(n, steps, d, seed++);
        if (t.system.content_degree() == d) return t;
    }
}

PolySystem random_of_degree(int n, int d, const Rational& density, std::uint64_t& seed) {
    for (;;) {
        PolySystem f = random_system(n, d, density, seed++);
        if (f.content_degree() == d) return f;
    }
}

using Outcome = std::pair<bool, std::string>;

CriterionResult timed(int id, std::string name, double budget_seconds,
                      const std::function<Outcome()>& body, std::ostream& diag) {
    CriterionResult result{id, std::move(name), false, "", 0.0};
    auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = body();
        result.pass = pass;
        result.detail = std::move(detail);
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.pass && budget_seconds > 0 && result.seconds >= budget_seconds) {
        result.pass = false;
        result.detail += " [exceeded time budget]";
    }
    diag << (result.pass ? "[PASS] " : "[FAIL] ") << "criterion " << result.id << " "
         << result.name << " (" << result.seconds << "s): " << result.detail << "\n";
    return result;
}

Outcome worked_example(const std::string& cli) {
    PolySystem f = cubic_shear();
    std::vector<Poly> expected = {Poly::variable(2, 1) - [] {
                                      Poly cube(2);
                                      cube.add_term(Monomial::var(2, 3), rational(1));
                                      return cube;
                                  }(),
                                  Poly::variable(2, 2)};

    InverseReport report = polynomial_inverse(f);
    if (report.kind != InverseKind::polynomial || !report.verified) {
        return {false, "library inversion did not certify a polynomial inverse"};
    }
    if (report.inverse.components != expected) {
        return {false, "library inverse differs from (u1 - u2^3, u2)"};
    }
    if (jacobian_det(f) != Poly::constant(2, rational(1))) {
        return {false, "library determinant is not the constant 1"};
    }

    std::string doc = system_to_json(f).dump();
    CliRun inv = invoke_cli(cli, {"invert", doc});
    if (inv.exit_code != 0) return {false, "invert exited with " + std::to_string(inv.exit_code)};
    Json inv_doc = parse_json(inv.out);
    if (inv_doc["kind"] != "polynomial") return {false, "invert did not report polynomial"};
    if (series_from_json(inv_doc["inverse"]).components != expected) {
        return {false, "invert output differs from (u1 - u2^3, u2)"};
    }
    CliRun det = invoke_cli(cli, {"det", doc});
    if (det.exit_code != 0) return {false, "det exited with " + std::to_string(det.exit_code)};
    Json det_doc = parse_json(det.out);
    if (det_doc["det"] != "1" || det_doc["constant"] != true) {
        return {false, "det output is not the constant 1"};
    }
    return {true, "inverse and determinant match the closed forms"};
}

Outcome inversion_soundness() {
    std::uint64_t seed = 1000;
    int count = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 3;
        int steps = 3 + i % 3;
        TameSystem t = random_tame(n, steps, 6, seed++);
        InverseReport report = polynomial_inverse(t.system);
        if (report.kind != InverseKind::polynomial || !report.verified) {
            return {false, "seed " + std::to_string(seed - 1) + ": inverse not certified"};
        }
        if (report.inverse.components != system_to_polys(t.inverse)) {
            return {false, "seed " + std::to_string(seed - 1) + ": inverse differs from the chain"};
        }
        ++count;
    }
    return {true, std::to_string(count) + " tame systems inverted and certified"};
}

Outcome reduction_round_trip() {
    std::uint64_t seed = 2000;
    int count = 0;
    for (int i = 0; i < 102; ++i) {
        int n = 1 + i % 3;
        int d = 3 + (i / 3) % 3;
        PolySystem f = random_of_degree(n, d, rational(1, 3), seed);
        ReductionRecord rec = lower_degree(f);
        if (eliminate_auxiliary(rec) != f) {
            return {false, "elimination round trip failed at case " + std::to_string(i)};
        }
        std::optional<PolySystem> back = reduction_preimage(rec.reduced, n);
        if (!back || *back != f) {
            return {false, "preimage round trip failed at case " + std::to_string(i)};
        }
        ++count;
    }
    return {true, std::to_string(count) + " round trips exact"};
}

Outcome verification_agreement() {
    InversionLimits limits;
    int cutoff = 10;
    int disagreements = 0;
    std::uint64_t seed = 3000;
    auto examine = [&](const PolySystem& f) -> std::string {
        VerificationReport report = verify_reduction(f, cutoff, limits);
        if (!report.ok) {
            for (const CheckResult& c : report.checks) {
                if (!c.pass) return "check '" + c.name + "' failed: " + c.detail;
            }
            return "verification failed";
        }
        ReductionRecord rec = lower_degree(f);
        if (has_constant_jacobian(f) !=
            has_constant_jacobian_on_slice(rec.reduced, rec.split(), limits)) {
            ++disagreements;
            return "determinant constancy does not transport";
        }
        SeriesVec restricted = formal_inverse_restricted(rec.reduced, f.dim(), cutoff);
        SeriesVec direct = formal_inverse(f, cutoff);
        for (int i = 0; i < f.dim(); ++i) {
            if (restricted.components[static_cast<std::size_t>(i)] !=
                direct.components[static_cast<std::size_t>(i)]) {
                return "restricted inverse differs from the direct one";
            }
        }
        return "";
    };
    for (int i = 0; i < 50; ++i) {
        int d = 3 + i % 2;
        TameSystem t = tame_of_degree(2, 3 + i % 2, d, seed);
        if (std::string failure = examine(t.system); !failure.empty()) {
            return {false, "positive seed " + std::to_string(seed - 1) + ": " + failure};
        }
    }
    int negatives = 0;
    while (negatives < 50) {
        int d = 3 + negatives % 2;
        PolySystem f = random_of_degree(2, d, rational(1, 2), seed);
        if (has_constant_jacobian(f)) continue;
        InverseReport report = polynomial_inverse(f, limits);
        if (report.kind != InverseKind::formal_only || !report.searched_full_bound) {
            return {false, "negative seed " + std::to_string(seed - 1) +
                               ": expected a definitive formal-only verdict"};
        }
        if (std::string failure = examine(f); !failure.empty()) {
            return {false, "negative seed " + std::to_string(seed - 1) + ": " + failure};
        }
        ++negatives;
    }
    if (disagreements != 0) return {false, std::to_string(disagreements) + " disagreements"};
    return {true, "100 cases, all four checks agree with the direct predicates"};
}

Outcome iterated_reduction() {
    std::uint64_t seed = 4000;
    TameSystem t = tame_of_degree(2, 4, 4, seed);
    const PolySystem& f = t.system;
    std::vector<ReductionRecord> chain = reduce_to_quadratic(f);
    if (chain.size() != 2) return {false, "chain length " + std::to_string(chain.size())};
    const PolySystem& quadratic = chain.back().reduced;
    if (quadratic.dim() != 42) {
        return {false, "final dimension " + std::to_string(quadratic.dim())};
    }
    if (quadratic.content_degree() > 2) return {false, "final system is not quadratic"};
    if (eliminate_auxiliary(chain[1]) != chain[0].reduced) {
        return {false, "first elimination does not recover the intermediate system"};
    }
    if (eliminate_auxiliary(chain[0]) != f) {
        return {false, "second elimination does not recover the source"};
    }
    SeriesVec restricted = formal_inverse_restricted(quadratic, 2, 6);
    SeriesVec direct = formal_inverse(f, 6);
    for (int i = 0; i < 2; ++i) {
        if (restricted.components[static_cast<std::size_t>(i)] !=
            direct.components[static_cast<std::size_t>(i)]) {
            return {false, "restricted inverse of the quadratic system differs at component " +
                               std::to_string(i + 1)};
        }
    }
    return {true, "chain 2 -> 6 -> 42 variables, eliminations and inverses exact"};
}

Outcome series_cross_checks() {
    std::vector<PolySystem> corpus = {cubic_shear(), nonconstant_example()};
    std::uint64_t seed = 5000;
    for (int i = 0; i < 4; ++i) corpus.push_back(random_tame(2, 3, 3 + i % 2, seed++).system);
    for (int i = 0; i < 4; ++i) corpus.push_back(random_system(2, 3, rational(1, 2), seed++));
    int order = 4;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        const PolySystem& f = corpus[c];
        SeriesVec g = formal_inverse(f, order);
        Poly det_along_inverse = compose_truncated(jacobian_det(f), g.components, order);
        Poly expected = series_reciprocal(det_along_inverse, order);
        if (partition_series(f, order).series != expected) {
            return {false, "partition series mismatch on case " + std::to_string(c)};
        }
        for (int i = 1; i <= f.dim(); ++i) {
            if (one_point_series(f, i, order).series !=
                g.components[static_cast<std::size_t>(i - 1)]) {
                return {false, "one-point series mismatch on case " + std::to_string(c)};
            }
        }
    }
    return {true, std::to_string(corpus.size()) + " systems cross-checked at order 4"};
}

Outcome toy_identities() {
    const long closed_form[] = {1, 1, 3, 15, 105, 945, 10395, 135135, 2027025};
    for (unsigned long k = 0; k <= 8; ++k) {
        Rational m = real_gaussian_moment(k);
        if (m != closed_form[k] || m != odd_double_factorial(k)) {
            return {false, "moment mismatch at k = " + std::to_string(k)};
        }
    }
    SexticIdentityReport report = sextic_intermediate_identity(3);
    if (!report.match) return {false, "sextic rewrite mismatch"};
    if (report.direct[1] != rational(-15) || report.direct[2] != rational(10395, 2) ||
        report.direct[3] != rational(-34459425, 6)) {
        return {false, "sextic coefficients differ from the frozen values"};
    }
    return {true, "moments match the closed form; sextic rewrite exact through order 3"};
}

Outcome cli_determinism(const std::string& cli) {
    std::string sys = system_to_json(cubic_shear()).dump();
    std::string neg = system_to_json(nonconstant_example()).dump();
    CliRun reduced = invoke_cli(cli, {"reduce", sys});
    if (reduced.exit_code != 0) return {false, "reduce failed"};
    std::string rec = reduced.out;

    struct Command {
        std::vector<std::string> args;
        int expected_exit;
    };
    std::vector<Command> commands = {
        {{"invert", sys}, 0},
        {{"invert", rec}, 0},
        {{"invert", neg}, 1},
        {{"jacobian", sys}, 0},
        {{"det", sys}, 0},
        {{"det", neg}, 1},
        {{"reduce", sys}, 0},
        {{"eliminate", rec}, 0},
        {{"preimage", rec}, 0},
        {{"verify", sys, "--cutoff", "8"}, 0},
        {{"wick-z", sys, "--order", "4"}, 0},
        {{"wick-g", sys, "--order", "4"}, 0},
        {{"identity-check", "--order", "3"}, 0},
        {{"gen", "--kind", "tame", "--n", "2", "--steps", "3", "--maxdeg", "6", "--seed", "7",
          "--count", "2"},
         0},
        {{"gen", "--kind", "random", "--n", "2", "--d", "3", "--density", "1/3", "--seed", "9",
          "--count", "2"},
         0},
    };
    for (std::size_t c = 0; c < commands.size(); ++c) {
        CliRun first = invoke_cli(cli, commands[c].args);
        CliRun second = invoke_cli(cli, commands[c].args);
        if (first.exit_code != commands[c].expected_exit) {
            return {false, "command " + std::to_string(c) + " exited with " +
                               std::to_string(first.exit_code)};
        }
        if (first.out != second.out || first.exit_code != second.exit_code) {
            return {false, "command " + std::to_string(c) + " is not byte-reproducible"};
        }
        if (first.out.empty() || first.out.back() != '\n') {
            return {false, "command " + std::to_string(c) + " output is not newline-terminated"};
        }
    }

    CliRun piped = invoke_cli(cli, {"invert", "-"}, rec);
    if (piped.exit_code != 0) return {false, "reduce | invert pipeline failed"};
    if (parse_json(piped.out)["kind"] != "polynomial") {
        return {false, "pipeline did not certify a polynomial restricted inverse"};
    }
    return {true, "15 commands byte-reproducible; reduce | invert pipeline certified"};
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite(const std::string& cli_path,
                                                  std::ostream& diagnostics) {
    std::vector<CriterionResult> results;
    results.push_back(timed(1, "worked-example", 1.0,
                            [&] { return worked_example(cli_path); }, diagnostics));
    results.push_back(timed(2, "inversion-soundness", 120.0, inversion_soundness, diagnostics));
    results.push_back(timed(3, "reduction-round-trip", 60.0, reduction_round_trip, diagnostics));
    results.push_back(
        timed(4, "verification-agreement", 300.0, verification_agreement, diagnostics));
    results.push_back(timed(5, "iterated-reduction", 300.0, iterated_reduction, diagnostics));
    results.push_back(timed(6, "series-cross-checks", 300.0, series_cross_checks, diagnostics));
    results.push_back(timed(7, "toy-identities", 30.0, toy_identities, diagnostics));
    results.push_back(timed(8, "cli-determinism", 0.0,
                            [&] { return cli_determinism(cli_path); }, diagnostics));
    return results;
}

} // namespace jacq
