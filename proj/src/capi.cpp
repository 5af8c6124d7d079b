#include "clpolar.h"

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <string>

#include "clpolar/constructions/constructions.hpp"
#include "clpolar/io/io.hpp"
#include "clpolar/search/search.hpp"
#include "clpolar/support/parallel.hpp"
#include "clpolar/verify/acceptance.hpp"

using namespace clpolar;
using algebra::BigInt;
using algebra::HalfInt;
using clsets::GeneratorSet;
using geometry::SpaceKind;
using io::json;

struct clp_space {
    std::shared_ptr<const geometry::PolarSpace> sp;
};

struct clp_context {
    std::shared_ptr<clsets::CLContext> C;
};

namespace {

thread_local std::string tl_error;

int fail(int code, const std::string& msg) {
    tl_error = msg;
    return code;
}

// Exceptions cross the C boundary as status codes. invalid_argument must be
// caught before logic_error (it derives from it), and the capacity guard
// before plain runtime errors.
template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const geometry::CapacityError& ex) {
        return fail(CLP_ERR_CAPACITY, ex.what());
    } catch (const std::invalid_argument& ex) {
        return fail(CLP_ERR_INVALID, ex.what());
    } catch (const json::exception& ex) {
        return fail(CLP_ERR_INVALID, ex.what());
    } catch (const std::logic_error& ex) {
        return fail(CLP_ERR_INTERNAL, ex.what());
    } catch (const std::exception& ex) {
        return fail(CLP_ERR_INTERNAL, ex.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int emit(const std::string& s, char** out) {
    *out = dup(s);
    return *out ? CLP_OK : fail(CLP_ERR_INTERNAL, "allocation failed");
}

SpaceKind parse_space(const char* space) {
    if (!space) throw std::invalid_argument("space is null");
    std::string s(space);
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("space is empty");
    if (s[first] == '{') return io::space_from_json(json::parse(s));
    return geometry::parse_shorthand(s);
}

std::string normal_format(const char* format, const char* fallback) {
    std::string f = format && *format ? format : fallback;
    if (f != "text" && f != "json" && f != "csv")
        throw std::invalid_argument("unknown format: " + f);
    return f;
}

const char* type_name(geometry::SchemeType t) {
    switch (t) {
        case geometry::SchemeType::I: return "I";
        case geometry::SchemeType::II: return "II";
        case geometry::SchemeType::III: return "III";
    }
    return "?";
}

// Closed-form facts of a kind; enumerated counts join in when a built space
// is at hand (the build already cross-checked them against these formulas).
json stats_json(const SpaceKind& k, const geometry::PolarSpace* built) {
    HalfInt e = geometry::param_e(k.family);
    BigInt points = (algebra::q_pow(k.q, e + (k.d - 1)) + 1) *
                    (algebra::q_pow(k.q, HalfInt(k.d)) - 1) / (k.q - 1);
    BigInt gens = 1;
    for (int i = 0; i < k.d; ++i) gens *= algebra::q_pow(k.q, e + i) + 1;
    json j{{"space", io::space_to_json(k)},
           {"label", geometry::label(k)},
           {"points", io::bigint_to_json(points)},
           {"generators", io::bigint_to_json(gens)},
           {"pencil", io::bigint_to_json(clsets::pencil_size(k.d, e, k.q))},
           {"x_max", io::bigint_to_json(clsets::max_parameter(k.d, e, k.q))},
           {"e", e.str()},
           {"type", type_name(geometry::classify_type(k))}};
    if (built) {
        j["built"] = true;
        j["enumerated_points"] = built->num_points();
        j["enumerated_generators"] = built->num_generators();
    }
    return j;
}

std::string stats_render(const json& j, const std::string& fmt) {
    if (fmt == "json") return j.dump();
    auto one = [&](const char* key) {
        const json& v = j.at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (fmt == "csv") {
        std::ostringstream out;
        out << "field,value\n";
        for (const char* key : {"label", "points", "generators", "pencil", "x_max", "e", "type"})
            out << key << ',' << one(key) << '\n';
        if (j.contains("built"))
            out << "enumerated_points," << one("enumerated_points") << '\n'
                << "enumerated_generators," << one("enumerated_generators") << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "space=" << one("label") << " points=" << one("points")
        << " generators=" << one("generators") << " pencil=" << one("pencil")
        << " x_max=" << one("x_max") << " e=" << one("e") << " type=" << one("type");
    if (j.contains("built")) out << " built=yes";
    out << '\n';
    return out.str();
}

json sets_as_json(const std::vector<GeneratorSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) {
        json idx = json::array();
        for (std::uint32_t g : s.indices()) idx.push_back(g);
        out.push_back(std::move(idx));
    }
    return out;
}

}  // namespace

extern "C" {

const char* clp_last_error(void) { return tl_error.c_str(); }

void clp_string_free(char* s) { std::free(s); }

int clp_set_threads(unsigned n) {
    return guarded([&] {
        clpolar::set_thread_count(n);
        return CLP_OK;
    });
}

int clp_space_stats(const char* space, const char* format, char** out) {
    if (!out) return fail(CLP_ERR_INVALID, "out is null");
    return guarded([&] {
        SpaceKind k = parse_space(space);
        geometry::validate_kind(k);
        return emit(stats_render(stats_json(k, nullptr), normal_format(format, "text")), out);
    });
}

int clp_space_build(const char* space, clp_space** out) {
    if (!out) return fail(CLP_ERR_INVALID, "out is null");
    *out = nullptr;
    return guarded([&] {
        auto sp = geometry::PolarSpace::build(parse_space(space));
        *out = new clp_space{std::move(sp)};
        return CLP_OK;
    });
}

void clp_space_free(clp_space* sp) { delete sp; }

int clp_space_build_stats(const clp_space* sp, const char* format, char** out) {
    if (!sp || !out) return fail(CLP_ERR_INVALID, "null argument");
    return guarded([&] {
        return emit(stats_render(stats_json(sp->sp->kind(), sp->sp.get()),
                                 normal_format(format, "text")),
                    out);
    });
}

int clp_context_build(const clp_space* sp, clp_context** out) {
    if (!sp || !out) return fail(CLP_ERR_INVALID, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new clp_context{std::make_shared<clsets::CLContext>(sp->sp)};
        return CLP_OK;
    });
}

void clp_context_free(clp_context* c) { delete c; }

int clp_scheme_pmatrix(const char* space, const char* format, char** out) {
    if (!out) return fail(CLP_ERR_INVALID, "out is null");
    return guarded([&] {
        SpaceKind k = parse_space(space);
        geometry::validate_kind(k);
        auto P = scheme::eigenvalue_matrix(k.d, geometry::param_e(k.family), k.q);
        std::string fmt = normal_format(format, "csv");
        return emit(fmt == "json" ? io::matrix_to_json(P).dump() : io::matrix_to_csv(P), out);
    });
}

int clp_scheme_eigenspaces(const char* space, const char* format, char** out) {
    if (!out) return fail(CLP_ERR_INVALID, "out is null");
    return guarded([&] {
        SpaceKind k = parse_space(space);
        geometry::validate_kind(k);
        std::string fmt = normal_format(format, "csv");
        return emit(fmt == "json" ? io::eigenspaces_to_json(k).dump()
                                  : io::eigenspaces_to_csv(k),
                    out);
    });
}

int clp_scheme_coincidences(const char* space, const char* format, char** out) {
    if (!out) return fail(CLP_ERR_INVALID, "out is null");
    return guarded([&] {
        SpaceKind k = parse_space(space);
        geometry::validate_kind(k);
        auto pairs =
            scheme::verify_coincidences(k.d, geometry::param_e(k.family), k.q);
        std::string fmt = normal_format(format, "text");
        if (fmt == "json") {
            json arr = json::array();
            for (auto [j, i] : pairs) arr.push_back(json::array({j, i}));
            return emit(json{{"space", io::space_to_json(k)}, {"pairs", arr}}.dump(), out);
        }
        return emit(io::coincidences_to_string(pairs) + "\n", out);
    });
}

int clp_scheme_phi(const char* space, int i, const char* format, char** out) {
    if (!out) return fail(CLP_ERR_INVALID, "out is null");
    return guarded([&] {
        SpaceKind k = parse_space(space);
        geometry::validate_kind(k);
        std::string fmt = normal_format(format, "csv");
        return emit(fmt == "json" ? io::phi_to_json(k, i).dump() : io::phi_to_csv(k, i), out);
    });
}

int clp_check(const clp_context* c, const char* set_json, char** report_json, int* verdict) {
    if (!c || !set_json || !report_json || !verdict)
        return fail(CLP_ERR_INVALID, "null argument");
    *verdict = -1;
    return guarded([&] {
        GeneratorSet L = io::generator_set_from_json(json::parse(set_json));
        if (!(L.space->kind() == c->C->S.space->kind()))
            throw std::invalid_argument("set document targets " +
                                        geometry::label(L.space->kind()) +
                                        ", context holds " +
                                        geometry::label(c->C->S.space->kind()));
        // re-anchor on the context's space object so bitset sizes line up
        GeneratorSet anchored = GeneratorSet::of(c->C->S.space, L.indices());
        auto rep = clsets::full_report(*c->C, anchored);
        *verdict = rep.is_degree_one ? 0 : (rep.is_cl ? 3 : 4);
        return emit(io::report_to_json(rep).dump(), report_json);
    });
}

int clp_construct(const clp_space* sp, const char* spec_json, char** out_set_json) {
    if (!sp || !spec_json || !out_set_json) return fail(CLP_ERR_INVALID, "null argument");
    return guarded([&] {
        json spec = json::parse(spec_json);
        if (!spec.is_object() || !spec.contains("name"))
            throw std::invalid_argument("construct spec needs a name");
        std::string name = spec.at("name").get<std::string>();
        auto budget = std::chrono::milliseconds(spec.value("budget_ms", 10000));
        std::optional<GeneratorSet> result;

        if (name == "pencil") {
            result = constructions::point_pencil(sp->sp, spec.value("point", 0));
        } else if (name == "base") {
            result = constructions::base_generator_set(sp->sp, spec.value("base", 0));
        } else if (name == "base-solid") {
            result = constructions::base_solid_set(sp->sp, spec.value("base", 0));
        } else if (name == "embedded-hyperbolic" || name == "hyperbolic-class") {
            std::size_t index = spec.value("index", 0);
            auto H = constructions::hyperbolic_embeddings(sp->sp, index + 1);
            if (H.size() <= index)
                throw std::invalid_argument("only " + std::to_string(H.size()) +
                                            " embeddings exist");
            result = name == "embedded-hyperbolic"
                         ? constructions::embedded_hyperbolic(H[index])
                         : constructions::hyperbolic_class(H[index], spec.value("class", 0));
        } else if (name == "pencil-family") {
            result = constructions::disjoint_pencil_family(
                sp->sp, spec.at("x").get<long>(), budget);
            if (!result) return emit("null", out_set_json);
        } else if (name == "witness") {
            result = constructions::classification_witness(
                sp->sp, spec.at("x").get<long>(), spec.value("alpha", 0L), budget);
            if (!result) return emit("null", out_set_json);
        } else if (name == "spread") {
            result = constructions::spread_search(sp->sp, budget);
            if (!result) return emit("null", out_set_json);
        } else {
            throw std::invalid_argument("unknown construction: " + name);
        }
        return emit(io::generator_set_to_json(*result).dump(), out_set_json);
    });
}

int clp_search_exhaustive(const clp_context* c, const char* options_json, char** out_json) {
    if (!c || !options_json || !out_json) return fail(CLP_ERR_INVALID, "null argument");
    return guarded([&] {
        json opts = json::parse(options_json);
        if (!opts.is_object() || !opts.contains("x"))
            throw std::invalid_argument("search options need x");
        if (opts.contains("threads"))
            clpolar::set_thread_count(opts.at("threads").get<unsigned>());
        search::EnumerationOptions eo;
        eo.pruned = opts.value("pruned", true);
        eo.node_budget = opts.value("node_budget", -1L);
        if (opts.contains("resume") && !opts.at("resume").is_null())
            eo.resume = io::cursor_from_json(opts.at("resume"));
        auto r = search::exhaustive_degree_one(*c->C, opts.at("x").get<long>(), eo);
        json j{{"space", io::space_to_json(c->C->S.space->kind())},
               {"sets", sets_as_json(r.sets)},
               {"complete", r.complete},
               {"nodes", r.nodes},
               {"cursor", r.complete ? json(nullptr) : io::cursor_to_json(r.cursor)}};
        return emit(j.dump(), out_json);
    });
}

int clp_search_max_disjoint(const char* set_json, char** out_json) {
    if (!set_json || !out_json) return fail(CLP_ERR_INVALID, "null argument");
    return guarded([&] {
        GeneratorSet L = io::generator_set_from_json(json::parse(set_json));
        auto r = search::max_disjoint(L);
        json idx = json::array();
        for (std::uint32_t g : r.witness.indices()) idx.push_back(g);
        return emit(json{{"size", r.size}, {"witness", idx}}.dump(), out_json);
    });
}

int clp_search_classify_x1(const clp_context* c, char** out_json) {
    if (!c || !out_json) return fail(CLP_ERR_INVALID, "null argument");
    return guarded([&] {
        auto r = search::classify_x1(*c->C);
        json j{{"complete", r.complete},
               {"confirmed", r.confirmed},
               {"found", r.found},
               {"non_pencils", sets_as_json(r.non_pencils)}};
        return emit(j.dump(), out_json);
    });
}

int clp_verify(const char* scope, const char* format, int with_timings, char** out,
               int* ok) {
    if (!out || !ok) return fail(CLP_ERR_INVALID, "null argument");
    *ok = 0;
    return guarded([&] {
        std::string fmt = normal_format(format, "text");
        if (fmt == "csv") throw std::invalid_argument("verify emits text or json");
        auto results = verify::run_acceptance(scope && *scope ? scope : "all");
        *ok = verify::all_passing(results) ? 1 : 0;
        if (fmt == "json") {
            json j = verify::manifest_json(results);
            if (with_timings)
                for (std::size_t i = 0; i < results.size(); ++i)
                    j["results"][i]["seconds"] = results[i].seconds;
            return emit(j.dump(), out);
        }
        if (!with_timings) return emit(verify::manifest_text(results), out);
        std::ostringstream text;
        for (const auto& r : results) {
            std::ostringstream line;
            line << "criterion " << std::setw(2) << std::setfill('0') << r.id << "  "
                 << std::setfill(' ') << std::left << std::setw(13) << r.status
                 << std::right << "  " << r.name << " | " << r.detail << " ["
                 << std::fixed << std::setprecision(2) << r.seconds << "s]";
            text << line.str() << '\n';
        }
        return emit(text.str(), out);
    });
}

}  // extern "C"
