#include "medsg/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <random>
#include <sstream>

#include "medsg/apery.hpp"
#include "medsg/arf.hpp"
#include "medsg/closure.hpp"
#include "medsg/errors.hpp"
#include "medsg/extension.hpp"
#include "medsg/rational.hpp"
#include "medsg/selftest.hpp"

namespace medsg {

namespace {

Json make_document(const char* command, const std::vector<std::int64_t>& input, Json payload) {
    Json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["input_generators"] = input;
    doc["payload"] = std::move(payload);
    return doc;
}

Json semigroup_json(const NumericalSemigroup& S) {
    Json j;
    j["minimal_generators"] = S.minimal_generators();
    j["multiplicity"] = S.multiplicity();
    j["embedding_dimension"] = S.embedding_dimension();
    j["frobenius"] = S.frobenius();
    j["conductor"] = S.conductor();
    j["genus"] = invariants(S).genus;
    return j;
}

Json step_json(const SaturationStep& st) {
    NumericalSemigroup T = NumericalSemigroup::from_generators(st.input_generators);
    AperySet hat = apery_set(T, T.multiplicity(), true);
    Json j;
    j["input_generators"] = st.input_generators;
    j["hat_apery"] = hat.elements;
    Json triples = Json::array();
    for (const WitnessTriple& w : st.witness_triples)
        triples.push_back(Json::array({w.left, w.right, w.sum}));
    j["witness_triples"] = triples;
    j["added"] = st.added;
    return j;
}

Json trace_json(const ClosureReport& rep) {
    Json arr = Json::array();
    for (const SaturationStep& st : rep.trace) arr.push_back(step_json(st));
    return arr;
}

Json per_class_json(const ClosureReport& rep) {
    Json arr = Json::array();
    for (const EffectiveClassRecord& pc : rep.per_class) {
        Json j;
        j["residue"] = pc.residue;
        j["c_i"] = pc.c_i;
        j["K_i"] = pc.K_i;
        j["g_i"] = pc.g_i;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace

std::vector<std::int64_t> parse_generators(const std::string& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<std::int64_t> out;
    std::string tok;
    while (in >> tok) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "no generators given");
    return out;
}

Json cmd_info(const std::vector<std::int64_t>& generators) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(generators);
    InvariantRecord rec = invariants(S);
    Json p;
    p["minimal_generators"] = S.minimal_generators();
    p["multiplicity"] = rec.multiplicity;
    p["embedding_dimension"] = rec.embedding_dimension;
    p["frobenius"] = rec.frobenius;
    p["conductor"] = rec.conductor;
    p["genus"] = rec.genus;
    p["gaps"] = rec.gaps;
    p["sporadic"] = rec.sporadic;
    p["n"] = rec.n;
    p["pseudo_frobenius"] = rec.pseudo_frobenius;
    p["type"] = rec.type;
    p["is_med"] = is_med(S);
    p["is_arf"] = is_arf_semigroup(S);
    p["is_symmetric"] = is_symmetric(S);
    return make_document("info", generators, std::move(p));
}

Json cmd_apery(const std::vector<std::int64_t>& generators, std::int64_t element, bool hat) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(generators);
    AperySet ap = apery_set(S, element, hat);
    Json p;
    p["element"] = element;
    p["hat"] = hat;
    p["elements"] = ap.elements; // residue order: elements[i] ≡ i (mod element)
    p["minima"] = apery_minima(S, element);
    p["pf_via_maxima"] = apery_maxima_pf(S, element);
    return make_document("apery", generators, std::move(p));
}

Json cmd_med_closure(const std::vector<std::int64_t>& generators, const std::string& method,
                     bool trace) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(generators);
    Json p;
    p["method"] = method;
    if (method == "saturation") {
        ClosureReport rep = med_closure_saturation(S);
        p["result"] = semigroup_json(rep.result);
        p["iterations"] = rep.iterations;
        if (trace) p["trace"] = trace_json(rep);
    } else if (method == "effective") {
        ClosureReport rep = med_closure_effective(S);
        p["result"] = semigroup_json(rep.result);
        p["per_class"] = per_class_json(rep);
    } else if (method == "formula") {
        p["result"] = semigroup_json(med_closure_formula(S));
    } else if (method == "intersection") {
        p["result"] = semigroup_json(med_closure_intersection(S));
    } else if (method == "all") {
        ClosureReport sat = med_closure_saturation(S);
        ClosureReport eff = med_closure_effective(S);
        NumericalSemigroup form = med_closure_formula(S);
        bool agree = sat.result == eff.result && sat.result == form;
        Json methods = Json::array({"saturation", "effective", "formula"});
        bool skipped = false;
        try {
            agree = agree && med_closure_intersection(S) == sat.result;
            methods.push_back("intersection");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SearchSpaceTooLarge) throw;
            skipped = true;
        }
        if (!agree)
            throw Error(ErrorCode::InternalDisagreement,
                        "closure methods disagree for " + S.str());
        p["methods_run"] = std::move(methods);
        p["intersection_skipped"] = skipped;
        p["agree"] = true;
        p["result"] = semigroup_json(sat.result);
        p["iterations"] = sat.iterations;
        p["per_class"] = per_class_json(eff);
        if (trace) p["trace"] = trace_json(sat);
    } else {
        throw Error(ErrorCode::ParseError, "unknown closure method: " + method);
    }
    return make_document("med-closure", generators, std::move(p));
}

Json cmd_check_arf_element(const std::vector<std::int64_t>& generators, std::int64_t z) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(generators);
    Json p;
    p["check"] = "arf-element";
    p["element"] = z;
    p["verdict"] = is_arf_element(S, z);
    return make_document("check", generators, std::move(p));
}

Json cmd_check_predicate(const std::vector<std::int64_t>& generators, const std::string& which) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(generators);
    Json p;
    p["check"] = which;
    if (which == "is-med") {
        p["multiplicity"] = S.multiplicity();
        p["embedding_dimension"] = S.embedding_dimension();
        p["verdict"] = is_med(S);
    } else if (which == "is-arf") {
        p["verdict"] = is_arf_semigroup(S);
    } else if (which == "is-symmetric") {
        InvariantRecord rec = invariants(S);
        p["genus"] = rec.genus;
        p["conductor"] = rec.conductor;
        p["type"] = rec.type;
        p["verdict"] = is_symmetric(S);
    } else {
        throw Error(ErrorCode::ParseError, "unknown check: " + which);
    }
    return make_document("check", generators, std::move(p));
}

Json cmd_check_bounds(const std::vector<std::int64_t>& generators, std::int64_t r) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(generators);
    InvariantRecord rec = invariants(S);
    ExtensionReport er = pf_extension(S, r);
    bool c_ok = conductor_bound_check(S, r);
    bool ideal_ok = ideal_bound_check(S);
    bool blv_ok = blv_ideal_conductor_check(S, r);
    Json p;
    p["check"] = "bounds";
    p["r"] = r;
    p["type"] = rec.type;
    p["bound_lhs"] = er.bound_lhs;
    p["conductor"] = rec.conductor;
    p["bound_rhs"] = er.bound_rhs;
    p["conductor_bound_ok"] = c_ok;
    p["ideal_bounds_ok"] = ideal_ok;
    p["blv_bound_ok"] = blv_ok;
    p["verdict"] = c_ok && ideal_ok && blv_ok;
    return make_document("check", generators, std::move(p));
}

Json cmd_extend(const std::vector<std::int64_t>& generators, std::int64_t r) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(generators);
    ExtensionReport er = pf_extension(S, r);
    Json p;
    p["r"] = r;
    p["extended"] = semigroup_json(er.extended);
    p["genus_before"] = invariants(S).genus;
    p["genus_after"] = invariants(er.extended).genus;
    p["genus_drop"] = er.genus_drop;
    p["bound_lhs"] = er.bound_lhs;
    p["bound_rhs"] = er.bound_rhs;
    return make_document("extend", generators, std::move(p));
}

FuzzOutcome cmd_fuzz(std::uint64_t seed, std::int64_t samples, std::int64_t m_max,
                     std::int64_t gen_max) {
    if (samples < 0) throw Error(ErrorCode::ParseError, "samples must be >= 0");
    if (m_max < 2 || gen_max <= m_max)
        throw Error(ErrorCode::ParseError, "need m_max >= 2 and gen_max > m_max");
    std::mt19937_64 rng(seed);
    std::int64_t passed = 0;
    std::int64_t checks_total = 0;
    bool nonpf = false;
    Json failures = Json::array();
    for (std::int64_t k = 0; k < samples; ++k) {
        NumericalSemigroup S;
        try {
            S = selftest::random_instance(rng, m_max, gen_max);
            selftest::BatteryResult r =
                selftest::check_instance(S, seed * 2654435761ULL + static_cast<std::uint64_t>(k));
            checks_total += r.checks;
            nonpf = nonpf || r.nonpf_closure_break_observed;
            ++passed;
        } catch (const std::exception& e) {
            Json f;
            f["sample"] = k;
            f["generators"] = S.minimal_generators();
            f["error"] = e.what();
            failures.push_back(std::move(f));
        }
    }
    Json p;
    p["seed"] = seed;
    p["samples"] = samples;
    p["m_max"] = m_max;
    p["gen_max"] = gen_max;
    p["passed"] = passed;
    p["failed"] = samples - passed;
    p["checks_total"] = checks_total;
    p["nonpf_closure_break_observed"] = nonpf;
    p["failures"] = std::move(failures);
    FuzzOutcome out;
    out.failed = passed != samples;
    out.doc = make_document("fuzz", {}, std::move(p));
    return out;
}

namespace {

struct BenchFamily {
    std::string spec;
    std::int64_t m = 0;
    std::vector<std::int64_t> gens;
    std::int64_t scale = 2;
    std::int64_t steps = 4;
};

BenchFamily parse_bench_family(const std::string& spec) {
    BenchFamily f;
    f.spec = spec;
    bool have_m = false, have_gens = false;
    std::istringstream in(spec);
    std::string field;
    while (std::getline(in, field, ';')) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ParseError, "bench family field needs key=value: " + field);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "m") {
            f.m = parse_generators(value).at(0);
            have_m = true;
        } else if (key == "gens") {
            f.gens = parse_generators(value);
            have_gens = true;
        } else if (key == "scale") {
            f.scale = parse_generators(value).at(0);
        } else if (key == "steps") {
            f.steps = parse_generators(value).at(0);
        } else {
            throw Error(ErrorCode::ParseError, "bench family: unknown key '" + key + "'");
        }
    }
    if (!have_m || !have_gens)
        throw Error(ErrorCode::ParseError, "bench family needs m= and gens=: " + spec);
    if (f.m < 2 || f.scale < 2 || f.steps < 1)
        throw Error(ErrorCode::ParseError, "bench family needs m >= 2, scale >= 2, steps >= 1");
    for (std::int64_t g : f.gens)
        if (g <= f.m)
            throw Error(ErrorCode::ParseError, "bench family generators must exceed m");
    return f;
}

} // namespace

Json cmd_bench(const std::vector<std::string>& family_specs, std::int64_t reps) {
    if (reps < 1) throw Error(ErrorCode::ParseError, "reps must be >= 1");
    using Clock = std::chrono::steady_clock;
    Json rows = Json::array();
    for (const std::string& spec : family_specs) {
        BenchFamily fam = parse_bench_family(spec);
        for (std::int64_t step = 0; step < fam.steps; ++step) {
            std::vector<std::int64_t> gens{fam.m};
            gens.insert(gens.end(), fam.gens.begin(), fam.gens.end());
            for (std::int64_t k = 0; k < step; ++k) gens.back() *= fam.scale;
            NumericalSemigroup S = NumericalSemigroup::from_generators(gens);
            std::int64_t max_gen = *std::max_element(gens.begin(), gens.end());
            NumericalSemigroup first[3];
            const char* names[3] = {"saturation", "effective", "formula"};
            for (int mi = 0; mi < 3; ++mi) {
                std::vector<std::int64_t> ns;
                ns.reserve(static_cast<std::size_t>(reps));
                for (std::int64_t rep = 0; rep < reps; ++rep) {
                    auto t0 = Clock::now();
                    NumericalSemigroup R = mi == 0   ? med_closure_saturation(S).result
                                           : mi == 1 ? med_closure_effective(S).result
                                                     : med_closure_formula(S);
                    auto t1 = Clock::now();
                    ns.push_back(
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
                    if (rep == 0) first[mi] = std::move(R);
                }
                std::sort(ns.begin(), ns.end());
                Json row;
                row["family"] = fam.spec;
                row["m"] = fam.m;
                row["max_gen"] = max_gen;
                row["method"] = names[mi];
                row["median_ns"] = ns[static_cast<std::size_t>(reps / 2)];
                rows.push_back(std::move(row));
            }
            if (!(first[0] == first[1] && first[0] == first[2]))
                throw Error(ErrorCode::InternalDisagreement,
                            "bench methods disagree for " + S.str());
        }
    }
    Json p;
    p["reps"] = reps;
    p["rows"] = std::move(rows);
    return make_document("bench", {}, std::move(p));
}

namespace {

std::string join(const Json& arr, const char* sep) {
    std::ostringstream os;
    bool head = true;
    for (const auto& v : arr) {
        if (!head) os << sep;
        head = false;
        if (v.is_string())
            os << v.get<std::string>();
        else
            os << v;
    }
    return os.str();
}

std::string set_str(const Json& arr) { return "{" + join(arr, ", ") + "}"; }
std::string gens_str(const Json& arr) { return "<" + join(arr, ",") + ">"; }
const char* yn(const Json& b) { return b.get<bool>() ? "true" : "false"; }

void render_closure_steps(std::ostringstream& os, const Json& trace) {
    int k = 0;
    for (const auto& st : trace) {
        os << "step " << ++k << ":\n";
        os << "  hat-Ap = " << set_str(st["hat_apery"]) << "\n";
        os << "  sums:";
        bool head = true;
        for (const auto& w : st["witness_triples"]) {
            os << (head ? " " : "; ") << w[0] << " + " << w[1] << " = " << w[2];
            head = false;
        }
        os << "\n";
        os << "  added: " << set_str(st["added"]) << "\n";
    }
}

std::string render_info(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << "S = " << gens_str(p["minimal_generators"]) << "\n";
    os << "m = " << p["multiplicity"] << "  e = " << p["embedding_dimension"]
       << "  f = " << p["frobenius"] << "  c = " << p["conductor"] << "  g = " << p["genus"]
       << "  n = " << p["n"] << "  t = " << p["type"] << "\n";
    os << "gaps = " << set_str(p["gaps"]) << "\n";
    os << "sporadic = " << set_str(p["sporadic"]) << "\n";
    os << "PF = " << set_str(p["pseudo_frobenius"]) << "\n";
    os << "is_med = " << yn(p["is_med"]) << "  is_arf = " << yn(p["is_arf"])
       << "  is_symmetric = " << yn(p["is_symmetric"]) << "\n";
    return os.str();
}

std::string render_apery(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << (p["hat"].get<bool>() ? "hat-Ap" : "Ap") << "(" << gens_str(doc["input_generators"])
       << ", " << p["element"] << ") = " << set_str(p["elements"]) << "  (residue order)\n";
    os << "minima = " << set_str(p["minima"]) << "\n";
    os << "PF via maxima = " << set_str(p["pf_via_maxima"]) << "\n";
    return os.str();
}

std::string render_med_closure(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << "S = " << gens_str(doc["input_generators"]) << "\n";
    os << "method: " << p["method"].get<std::string>() << "\n";
    if (p.contains("trace")) render_closure_steps(os, p["trace"]);
    os << "MED(S) = " << gens_str(p["result"]["minimal_generators"]) << "\n";
    os << "m = " << p["result"]["multiplicity"] << "  f = " << p["result"]["frobenius"]
       << "  g = " << p["result"]["genus"] << "\n";
    if (p.contains("iterations")) os << "iterations: " << p["iterations"] << "\n";
    if (p.contains("per_class")) {
        for (const auto& pc : p["per_class"])
            os << "residue " << pc["residue"] << ": c = " << pc["c_i"] << ", K = " << pc["K_i"]
               << ", g = " << pc["g_i"] << "\n";
    }
    if (p.contains("agree")) {
        os << "agreement: " << join(p["methods_run"], " = ");
        if (p["intersection_skipped"].get<bool>()) os << "  (intersection skipped: guard)";
        os << "\n";
    }
    return os.str();
}

std::string render_check(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    std::string which = p["check"].get<std::string>();
    os << "S = " << gens_str(doc["input_generators"]) << "\n";
    if (which == "arf-element") {
        os << "arf-element " << p["element"] << ": " << yn(p["verdict"]) << "\n";
    } else if (which == "bounds") {
        os << "r = " << p["r"] << "  t = " << p["type"] << "\n";
        os << "2n+t-1 = " << p["bound_lhs"] << "  c = " << p["conductor"]
           << "  2g-t+1 = " << p["bound_rhs"] << "\n";
        os << "conductor bound: " << yn(p["conductor_bound_ok"])
           << "  ideal bounds: " << yn(p["ideal_bounds_ok"])
           << "  BLV bound: " << yn(p["blv_bound_ok"]) << "\n";
        os << "verdict: " << yn(p["verdict"]) << "\n";
    } else {
        if (which == "is-med")
            os << "m = " << p["multiplicity"] << "  e = " << p["embedding_dimension"] << "\n";
        if (which == "is-symmetric")
            os << "g = " << p["genus"] << "  c = " << p["conductor"] << "  t = " << p["type"]
               << "\n";
        os << which << ": " << yn(p["verdict"]) << "\n";
    }
    return os.str();
}

std::string render_extend(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << "S = " << gens_str(doc["input_generators"]) << "  r = " << p["r"] << "\n";
    os << "S_r = " << gens_str(p["extended"]["minimal_generators"]) << "\n";
    os << "genus: " << p["genus_before"] << " -> " << p["genus_after"] << " (drop "
       << p["genus_drop"] << ")\n";
    os << "2n+t-1 = " << p["bound_lhs"] << "  2g-t+1 = " << p["bound_rhs"] << "\n";
    return os.str();
}

std::string render_fuzz(const Json& doc) {
    const Json& p = doc["payload"];
    std::ostringstream os;
    os << "fuzz: seed = " << p["seed"] << "  samples = " << p["samples"]
       << "  m_max = " << p["m_max"] << "  gen_max = " << p["gen_max"] << "\n";
    os << "passed = " << p["passed"] << "  failed = " << p["failed"]
       << "  checks = " << p["checks_total"] << "\n";
    os << "non-PF closure break observed: " << yn(p["nonpf_closure_break_observed"]) << "\n";
    for (const auto& f : p["failures"])
        os << "FAIL sample " << f["sample"] << " " << gens_str(f["generators"]) << ": "
           << f["error"].get<std::string>() << "\n";
    return os.str();
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_bench(const Json& doc) {
    std::ostringstream os;
    os << "family,m,max_gen,method,median_ns\n";
    for (const auto& row : doc["payload"]["rows"])
        os << csv_quote(row["family"].get<std::string>()) << "," << row["m"] << ","
           << row["max_gen"] << "," << row["method"].get<std::string>() << ","
           << row["median_ns"] << "\n";
    return os.str();
}

} // namespace

std::string render_text(const Json& doc) {
    std::string command = doc["command"].get<std::string>();
    if (command == "info") return render_info(doc);
    if (command == "apery") return render_apery(doc);
    if (command == "med-closure") return render_med_closure(doc);
    if (command == "check") return render_check(doc);
    if (command == "extend") return render_extend(doc);
    if (command == "fuzz") return render_fuzz(doc);
    if (command == "bench") return render_bench(doc);
    throw Error(ErrorCode::ParseError, "unknown command document: " + command);
}

std::string render_machine(const Json& doc) { return doc.dump(2) + "\n"; }

} // namespace medsg
