#include "jacq/json_io.hpp"

#include <set>
#include <utility>

#include "jacq/errors.hpp"

namespace jacq {

namespace {

long require_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw InputError(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j[key].get<long>();
}

std::string require_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw InputError(std::string("missing or non-string field \"") + key + "\"");
    }
    return j[key].get<std::string>();
}

const Json& require_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw InputError(std::string("missing or non-array field \"") + key + "\"");
    }
    return j[key];
}

} // namespace

Json system_to_json(const PolySystem& f) {
    Json terms = Json::array();
    for (int i = 1; i <= f.dim(); ++i) {
        for (const auto& [m, c] : f.coupling(i).terms()) {
            Json entry;
            entry["i"] = i;
            entry["k"] = m.degree();
            entry["js"] = m.indices();
            entry["c"] = to_string(c);
            terms.push_back(std::move(entry));
        }
    }
    Json j;
    j["format"] = 1;
    j["n"] = f.dim();
    j["d"] = f.degree_bound();
    j["terms"] = std::move(terms);
    return j;
}

PolySystem system_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("system document must be a JSON object");
    if (j.contains("format") && j["format"] != 1) {
        throw InputError("unsupported format version");
    }
    long n = require_int(j, "n");
    long d = require_int(j, "d");
    if (n < 1) throw InputError("n must be positive");
    if (d < 2) throw InputError("d must be at least 2");
    std::vector<Poly> couplings(static_cast<std::size_t>(n), Poly(static_cast<int>(n)));
    std::set<std::pair<long, std::vector<int>>> seen;
    for (const Json& entry : require_array(j, "terms")) {
        if (!entry.is_object()) throw InputError("term entries must be objects");
        long i = require_int(entry, "i");
        long k = require_int(entry, "k");
        if (i < 1 || i > n) throw InputError("term row index out of range");
        const Json& js = require_array(entry, "js");
        if (k != static_cast<long>(js.size())) {
            throw InputError("term degree does not match its index tuple");
        }
        if (k < 2 || k > d) throw InputError("term degree outside [2, d]");
        std::vector<int> indices;
        for (const Json& v : js) {
            if (!v.is_number_integer()) throw InputError("index tuple entries must be integers");
            long idx = v.get<long>();
            if (idx < 1 || idx > n) throw InputError("index tuple entry out of range");
            if (!indices.empty() && idx < indices.back()) {
                throw InputError("index tuples must be sorted");
            }
            indices.push_back(static_cast<int>(idx));
        }
        Rational c = parse_rational(require_string(entry, "c"));
        if (c == 0) throw InputError("coupling entries must be nonzero");
        if (!seen.insert({i, indices}).second) {
            throw InputError("duplicate coupling entry");
        }
        couplings[static_cast<std::size_t>(i - 1)].add_term(Monomial::from_indices(indices), c);
    }
    return PolySystem(static_cast<int>(n), static_cast<int>(d), std::move(couplings));
}

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::array();
        for (const auto& [var, exp] : m.factors()) exps.push_back(Json::array({var, exp}));
        Json entry;
        entry["c"] = to_string(c);
        entry["exps"] = std::move(exps);
        out.push_back(std::move(entry));
    }
    return out;
}

Poly poly_from_json(const Json& j, int nvars) {
    if (!j.is_array()) throw InputError("polynomial document must be a JSON array");
    Poly p(nvars);
    for (const Json& entry : j) {
        if (!entry.is_object()) throw InputError("polynomial entries must be objects");
        std::vector<std::pair<int, int>> factors;
        for (const Json& pair : require_array(entry, "exps")) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer()) {
                throw InputError("exponent entries must be [variable, exponent] pairs");
            }
            long var = pair[0].get<long>();
            long exp = pair[1].get<long>();
            if (var < 1 || var > nvars) throw InputError("variable index out of range");
            if (exp < 1) throw InputError("exponents must be positive");
            factors.emplace_back(static_cast<int>(var), static_cast<int>(exp));
        }
        p.add_term(Monomial::from_factors(factors), parse_rational(require_string(entry, "c")));
    }
    return p;
}

Json series_to_json(const SeriesVec& s) {
    Json components = Json::array();
    for (const Poly& p : s.components) components.push_back(poly_to_json(p));
    Json j;
    j["n"] = s.nvars();
    j["order"] = s.order;
    j["components"] = std::move(components);
    return j;
}

SeriesVec series_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("series document must be a JSON object");
    long order = require_int(j, "order");
    if (order < 0) throw InputError("order must be nonnegative");
    const Json& components = require_array(j, "components");
    if (components.empty()) throw InputError("series needs at least one component");
    SeriesVec s;
    s.order = static_cast<int>(order);
    long nvars = require_int(j, "n");
    if (nvars < 0) throw InputError("n must be nonnegative");
    for (const Json& c : components) {
        s.components.push_back(poly_from_json(c, static_cast<int>(nvars)));
    }
    return s;
}

Json record_to_json(const ReductionRecord& rec) {
    Json j;
    j["n"] = rec.base_dim;
    j["d"] = rec.reduced.degree_bound() + 1;
    j["sigma_base"] = rec.base_dim;
    j["indexing"] = "one-based-row-major";
    j["reduced"] = system_to_json(rec.reduced);
    return j;
}

ReductionRecord record_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("record document must be a JSON object");
    long n = require_int(j, "n");
    long d = require_int(j, "d");
    if (n < 1) throw InputError("n must be positive");
    if (require_int(j, "sigma_base") != n) {
        throw InputError("sigma_base must equal the base dimension");
    }
    if (require_string(j, "indexing") != "one-based-row-major") {
        throw InputError("unsupported auxiliary indexing scheme");
    }
    if (!j.contains("reduced")) throw InputError("missing field \"reduced\"");
    PolySystem reduced = system_from_json(j["reduced"]);
    if (reduced.dim() != n * (n + 1)) {
        throw InputError("reduced dimension must be n*(n+1)");
    }
    if (reduced.degree_bound() + 1 != d) {
        throw InputError("reduced degree bound must be d-1");
    }
    ReductionRecord rec{reduction_preimage(reduced, static_cast<int>(n)), std::move(reduced),
                        static_cast<int>(n)};
    return rec;
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON input");
    return j;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace jacq
