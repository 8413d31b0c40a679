#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "jacq/errors.hpp"
#include "jacq/generators.hpp"
#include "jacq/inversion.hpp"
#include "jacq/json_io.hpp"
#include "jacq/reduction.hpp"
#include "jacq/suite.hpp"
#include "jacq/system.hpp"
#include "jacq/wick.hpp"

namespace {

using namespace jacq;

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Input may be a file path, "-" for standard input, or the JSON text itself.
Json load_input(const std::string& arg) {
    if (arg == "-") return parse_json(slurp(std::cin));
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return parse_json(arg);
    std::ifstream file(arg);
    if (!file) throw InputError("cannot open input: " + arg);
    return parse_json(slurp(file));
}

bool is_record(const Json& doc) { return doc.is_object() && doc.contains("reduced"); }

PolySystem load_system(const Json& doc) {
    if (is_record(doc)) return record_from_json(doc).reduced;
    return system_from_json(doc);
}

void emit(const Json& doc) { std::cout << dump_json(doc); }

struct Options {
    std::string input;
    std::optional<int> order;
    std::optional<int> cutoff;
    std::optional<int> split;
    std::optional<long> limit_vars;
    std::optional<long> limit_moments;
    std::uint64_t seed = 1;
    std::string density = "1/4";
    std::string kind = "tame";
    int gen_n = 2;
    int gen_d = 3;
    int gen_steps = 4;
    int gen_maxdeg = 6;
    int gen_count = 1;
};

InversionLimits inversion_limits(const Options& opt) {
    InversionLimits limits;
    if (opt.cutoff) limits.order_override = *opt.cutoff;
    return limits;
}

WickLimits wick_limits(const Options& opt) {
    WickLimits limits;
    if (opt.limit_moments) limits.max_moments_per_coefficient = *opt.limit_moments;
    return limits;
}

int run_invert(const Options& opt) {
    Json doc = load_input(opt.input);
    Json out;
    if (is_record(doc) || opt.split) {
        int nprime = 0;
        PolySystem f = [&] {
            if (!is_record(doc)) {
                nprime = *opt.split;
                return system_from_json(doc);
            }
            ReductionRecord rec = record_from_json(doc);
            nprime = opt.split.value_or(rec.base_dim);
            return std::move(rec.reduced);
        }();
        int cutoff = opt.cutoff.value_or(16);
        SeriesVec candidate;
        TriState verdict =
            restricted_inverse_polynomial(f, {nprime}, cutoff, inversion_limits(opt), &candidate);
        if (verdict == TriState::inconclusive) {
            throw ResourceLimitError("certificate budget exhausted");
        }
        bool poly = verdict == TriState::yes;
        out["kind"] = poly ? "polynomial" : "formal-only-at-order-" + std::to_string(cutoff);
        out["restricted_to"] = nprime;
        out["order"] = candidate.order;
        out["verified"] = poly;
        out["inverse"] = series_to_json(candidate);
        emit(out);
        return poly ? 0 : 1;
    }
    InverseReport report = polynomial_inverse(system_from_json(doc), inversion_limits(opt));
    bool poly = report.kind == InverseKind::polynomial;
    out["kind"] =
        poly ? "polynomial" : "formal-only-at-order-" + std::to_string(report.order_used);
    out["order"] = report.order_used;
    out["searched_full_bound"] = report.searched_full_bound;
    out["verified"] = report.verified;
    out["inverse"] = series_to_json(report.inverse);
    emit(out);
    return poly ? 0 : 1;
}

int run_jacobian(const Options& opt) {
    PolySystem f = load_system(load_input(opt.input));
    PolyMatrix m = jacobian_matrix(f);
    Json rows = Json::array();
    for (int i = 1; i <= f.dim(); ++i) {
        Json row = Json::array();
        for (int j = 1; j <= f.dim(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = f.dim();
    out["entries"] = std::move(rows);
    emit(out);
    return 0;
}

int run_det(const Options& opt) {
    PolySystem f = load_system(load_input(opt.input));
    Poly d = jacobian_det(f);
    Json out;
    out["det"] = to_string(d);
    out["constant"] = d.is_constant();
    emit(out);
    return d.is_constant() ? 0 : 1;
}

int run_reduce(const Options& opt) {
    PolySystem f = load_system(load_input(opt.input));
    long cap = opt.limit_vars.value_or(ReductionLimits{}.max_dim);
    long target = static_cast<long>(f.dim()) * (f.dim() + 1);
    if (target > cap) throw ResourceLimitError("reduced dimension exceeds the variable cap");
    emit(record_to_json(lower_degree(f)));
    return 0;
}

int run_eliminate(const Options& opt) {
    Json doc = load_input(opt.input);
    if (!is_record(doc)) throw InputError("eliminate expects a reduction record");
    emit(system_to_json(eliminate_auxiliary(record_from_json(doc))));
    return 0;
}

int run_preimage(const Options& opt) {
    Json doc = load_input(opt.input);
    std::optional<PolySystem> original;
    if (is_record(doc)) {
        original = record_from_json(doc).original;
    } else {
        PolySystem f = system_from_json(doc);
        // Solve n*(n+1) = dim for the base dimension.
        int n = 0;
        while (n * (n + 1) < f.dim()) ++n;
        if (n * (n + 1) == f.dim()) original = reduction_preimage(f, n);
    }
    Json out;
    out["found"] = original.has_value();
    if (original) out["system"] = system_to_json(*original);
    emit(out);
    return original ? 0 : 1;
}

int run_verify(const Options& opt) {
    Json doc = load_input(opt.input);
    PolySystem f = [&] {
        if (!is_record(doc)) return system_from_json(doc);
        ReductionRecord rec = record_from_json(doc);
        if (!rec.original) throw InputError("record is not the image of any reduction");
        return *rec.original;
    }();
    int cutoff = opt.cutoff.value_or(10);
    VerificationReport report = verify_reduction(f, cutoff, inversion_limits(opt));
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    Json out;
    out["ok"] = report.ok;
    out["cutoff"] = cutoff;
    out["checks"] = std::move(checks);
    emit(out);
    return report.ok ? 0 : 1;
}

int run_wick_z(const Options& opt) {
    PolySystem f = load_system(load_input(opt.input));
    int order = opt.order.value_or(4);
    int sources = opt.split.value_or(-1);
    CouplingSeries z = partition_series(f, order, sources, wick_limits(opt));
    Json out;
    out["n"] = f.dim();
    out["order"] = z.order;
    out["series"] = poly_to_json(z.series);
    emit(out);
    return 0;
}

int run_wick_g(const Options& opt) {
    PolySystem f = load_system(load_input(opt.input));
    int order = opt.order.value_or(4);
    int sources = opt.split.value_or(-1);
    Json components = Json::array();
    for (int i = 1; i <= f.dim(); ++i) {
        components.push_back(
            poly_to_json(one_point_series(f, i, order, sources, wick_limits(opt)).series));
    }
    Json out;
    out["n"] = f.dim();
    out["order"] = order;
    out["components"] = std::move(components);
    emit(out);
    return 0;
}

int run_identity_check(const Options& opt) {
    int order = opt.order.value_or(3);
    SexticIdentityReport report = sextic_intermediate_identity(order);
    Json lhs = Json::array();
    Json rhs = Json::array();
    for (const Rational& c : report.direct) lhs.push_back(to_string(c));
    for (const Rational& c : report.rewritten) rhs.push_back(to_string(c));
    Json out;
    out["identity"] = "phi6-intermediate";
    out["order"] = report.order;
    out["match"] = report.match;
    out["lhs"] = std::move(lhs);
    out["rhs"] = std::move(rhs);
    emit(out);
    return report.match ? 0 : 1;
}

int run_gen(const Options& opt) {
    if (opt.kind != "tame" && opt.kind != "random") {
        throw InputError("--kind must be tame or random");
    }
    Json cases = Json::array();
    for (int c = 0; c < opt.gen_count; ++c) {
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(c);
        Json entry;
        entry["seed"] = seed;
        Json params;
        params["kind"] = opt.kind;
        params["n"] = opt.gen_n;
        if (opt.kind == "tame") {
            params["steps"] = opt.gen_steps;
            params["maxdeg"] = opt.gen_maxdeg;
            TameSystem tame = random_tame(opt.gen_n, opt.gen_steps, opt.gen_maxdeg, seed);
            entry["system"] = system_to_json(tame.system);
            entry["known_inverse"] = system_to_json(tame.inverse);
        } else {
            params["d"] = opt.gen_d;
            params["density"] = opt.density;
            PolySystem f =
                random_system(opt.gen_n, opt.gen_d, parse_rational(opt.density), seed);
            entry["system"] = system_to_json(f);
        }
        entry["params"] = std::move(params);
        cases.push_back(std::move(entry));
    }
    emit(cases);
    return 0;
}

int run_suite_verb() {
    std::string self = std::filesystem::read_symlink("/proc/self/exe").string();
    std::vector<CriterionResult> results = run_acceptance_suite(self, std::cerr);
    Json criteria = Json::array();
    bool ok = true;
    for (const CriterionResult& r : results) {
        Json entry;
        entry["id"] = r.id;
        entry["name"] = r.name;
        entry["pass"] = r.pass;
        entry["detail"] = r.detail;
        criteria.push_back(std::move(entry));
        ok = ok && r.pass;
    }
    Json out;
    out["ok"] = ok;
    out["criteria"] = std::move(criteria);
    emit(out);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for polynomial maps with identity linear part"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "file path, inline JSON, or - for stdin")->required();
    };

    CLI::App* invert = app.add_subcommand("invert", "decide polynomial invertibility");
    add_input(invert);
    invert->add_option("--cutoff", opt.cutoff, "inverse degree cap");
    invert->add_option("--split", opt.split, "restrict to the first n' sources");

    CLI::App* jacobian = app.add_subcommand("jacobian", "Jacobian matrix of the map");
    add_input(jacobian);

    CLI::App* det = app.add_subcommand("det", "Jacobian determinant and its constancy");
    add_input(det);

    CLI::App* reduce = app.add_subcommand("reduce", "one degree-lowering step");
    add_input(reduce);
    reduce->add_option("--limit-vars", opt.limit_vars, "cap on the reduced dimension");

    CLI::App* eliminate = app.add_subcommand("eliminate", "substitute the auxiliary rows back");
    add_input(eliminate);

    CLI::App* preimage = app.add_subcommand("preimage", "reconstruct the source of a reduction");
    add_input(preimage);

    CLI::App* verify = app.add_subcommand("verify", "cross-validate one reduction step");
    add_input(verify);
    verify->add_option("--cutoff", opt.cutoff, "inverse degree cap");

    CLI::App* wick_z = app.add_subcommand("wick-z", "source expansion of the partition sum");
    add_input(wick_z);
    wick_z->add_option("--order", opt.order, "truncation order");
    wick_z->add_option("--split", opt.split, "sources only on the first n' components");
    wick_z->add_option("--limit-moments", opt.limit_moments, "moment evaluations per order");

    CLI::App* wick_g = app.add_subcommand("wick-g", "normalized one-point expansions");
    add_input(wick_g);
    wick_g->add_option("--order", opt.order, "truncation order");
    wick_g->add_option("--split", opt.split, "sources only on the first n' components");
    wick_g->add_option("--limit-moments", opt.limit_moments, "moment evaluations per order");

    CLI::App* identity = app.add_subcommand("identity-check", "sextic interaction rewrite");
    identity->add_option("--order", opt.order, "coupling order to compare through");

    CLI::App* gen = app.add_subcommand("gen", "deterministic test corpora");
    gen->add_option("--kind", opt.kind, "tame or random");
    gen->add_option("--n", opt.gen_n, "dimension");
    gen->add_option("--d", opt.gen_d, "degree bound (random)");
    gen->add_option("--steps", opt.gen_steps, "chain length (tame)");
    gen->add_option("--maxdeg", opt.gen_maxdeg, "degree cap (tame)");
    gen->add_option("--density", opt.density, "fill probability as p/q (random)");
    gen->add_option("--seed", opt.seed, "base seed");
    gen->add_option("--count", opt.gen_count, "number of cases");

    app.add_subcommand("run-suite", "full acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (invert->parsed()) return run_invert(opt);
        if (jacobian->parsed()) return run_jacobian(opt);
        if (det->parsed()) return run_det(opt);
        if (reduce->parsed()) return run_reduce(opt);
        if (eliminate->parsed()) return run_eliminate(opt);
        if (preimage->parsed()) return run_preimage(opt);
        if (verify->parsed()) return run_verify(opt);
        if (wick_z->parsed()) return run_wick_z(opt);
        if (wick_g->parsed()) return run_wick_g(opt);
        if (identity->parsed()) return run_identity_check(opt);
        if (gen->parsed()) return run_gen(opt);
        return run_suite_verb();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
