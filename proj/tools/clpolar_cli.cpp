// Command line front end. Talks to the core exclusively through the shared
// library's C surface; everything here is argument plumbing.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clpolar.h"

using nlohmann::json;

namespace {

std::string take(char* p) {
    std::string s = p ? p : "";
    clp_string_free(p);
    return s;
}

// CLP_ERR_INTERNAL means a bug; everything else is the caller's input.
int complain(int rc) {
    std::cerr << "error: " << clp_last_error() << '\n';
    return rc == CLP_ERR_INTERNAL ? 1 : 2;
}

// stdout is the artifact, newline terminated either way.
int deliver(std::string payload, const std::string& out_path) {
    if (!payload.empty() && payload.back() != '\n') payload += '\n';
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 2;
    }
    f << payload;
    return 0;
}

// "-" reads stdin, anything else is a file path.
bool slurp(const std::string& path, std::string& into) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        into = buf.str();
        return true;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream buf;
    buf << f.rdbuf();
    into = buf.str();
    return true;
}

// `space stats W:5:2`, `space W:5:2`, and `space --space W:5:2` all name the
// same request: an optional action word followed by the space, with the flag
// as an alternative spelling.
struct ActionArgs {
    std::string p1, p2, flag;

    int resolve(const std::vector<std::string>& actions, const std::string& fallback,
                std::string& action, std::string& space) const {
        action = fallback;
        space = p1;
        if (std::find(actions.begin(), actions.end(), p1) != actions.end()) {
            action = p1;
            space = p2;
        } else if (!p2.empty()) {
            std::cerr << "error: unexpected argument " << p2 << '\n';
            return 2;
        }
        if (!flag.empty()) {
            if (space.empty())
                space = flag;
            else if (space != flag) {
                std::cerr << "error: conflicting spaces " << space << " and " << flag
                          << '\n';
                return 2;
            }
        }
        if (space.empty()) {
            std::cerr << "error: no space given\n";
            return 2;
        }
        return 0;
    }
};

int run_space(const ActionArgs& a, const std::string& format, const std::string& out) {
    std::string action, space;
    if (int rc = a.resolve({"stats", "build"}, "stats", action, space)) return rc;
    const char* fmt = format.empty() ? nullptr : format.c_str();
    char* text = nullptr;
    if (action == "stats") {
        if (int rc = clp_space_stats(space.c_str(), fmt, &text)) return complain(rc);
        return deliver(take(text), out);
    }
    clp_space* sp = nullptr;
    if (int rc = clp_space_build(space.c_str(), &sp)) return complain(rc);
    int rc = clp_space_build_stats(sp, fmt, &text);
    clp_space_free(sp);
    if (rc) return complain(rc);
    return deliver(take(text), out);
}

int run_scheme(const ActionArgs& a, int i, const std::string& format,
               const std::string& out) {
    std::string action, space;
    if (int rc = a.resolve({"pmatrix", "eigenspaces", "coincidences", "phi"}, "pmatrix",
                           action, space))
        return rc;
    const char* fmt = format.empty() ? nullptr : format.c_str();
    char* text = nullptr;
    int rc;
    if (action == "pmatrix")
        rc = clp_scheme_pmatrix(space.c_str(), fmt, &text);
    else if (action == "eigenspaces")
        rc = clp_scheme_eigenspaces(space.c_str(), fmt, &text);
    else if (action == "coincidences")
        rc = clp_scheme_coincidences(space.c_str(), fmt, &text);
    else
        rc = clp_scheme_phi(space.c_str(), i, fmt, &text);
    if (rc) return complain(rc);
    return deliver(take(text), out);
}

int with_context(const std::string& space, int (*body)(clp_context*, void*), void* arg) {
    clp_space* sp = nullptr;
    if (int rc = clp_space_build(space.c_str(), &sp)) return complain(rc);
    clp_context* c = nullptr;
    int rc = clp_context_build(sp, &c);
    clp_space_free(sp);
    if (rc) return complain(rc);
    int code = body(c, arg);
    clp_context_free(c);
    return code;
}

struct CheckArgs {
    std::string set_path, format, out;
};

int run_check_body(clp_context* c, void* arg) {
    auto& a = *static_cast<CheckArgs*>(arg);
    std::string doc;
    if (!slurp(a.set_path, doc)) {
        std::cerr << "error: cannot read " << a.set_path << '\n';
        return 2;
    }
    char* rep = nullptr;
    int verdict = -1;
    if (int rc = clp_check(c, doc.c_str(), &rep, &verdict)) return complain(rc);
    std::string report = take(rep);
    std::string payload = report;
    if (a.format.empty() || a.format == "text") {
        json r = json::parse(report);
        std::string x = r.at("x").get<std::string>();
        payload = verdict == 0   ? "degree one, x=" + x
                  : verdict == 3 ? "Cameron-Liebler but not degree one, x=" + x
                                 : "not Cameron-Liebler, x=" + x;
    } else if (a.format != "json") {
        std::cerr << "error: check emits text or json\n";
        return 2;
    }
    if (int rc = deliver(payload, a.out)) return rc;
    return verdict;
}

struct ConstructArgs {
    std::string name, spec_raw, out;
    json spec;
};

int run_construct(const std::string& space, ConstructArgs& a) {
    clp_space* sp = nullptr;
    if (int rc = clp_space_build(space.c_str(), &sp)) return complain(rc);
    char* text = nullptr;
    int rc = clp_construct(sp, a.spec.dump().c_str(), &text);
    clp_space_free(sp);
    if (rc) return complain(rc);
    return deliver(take(text), a.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cameron-Liebler toolkit for finite classical polar spaces"};
    app.require_subcommand(1);

    unsigned threads = 0;
    auto* threads_opt =
        app.add_option("--threads", threads, "cap the worker pool (0: all cores)");

    int exit_code = 0;

    // every token is consumed before any callback fires, so the cap is in
    // place no matter where --threads sat on the command line
    auto apply_threads = [&] {
        if (*threads_opt) clp_set_threads(threads);
    };

    // space [stats|build] SPACE
    ActionArgs space_args;
    std::string space_format, space_out;
    auto* sc_space = app.add_subcommand("space", "closed-form or enumerated space facts");
    sc_space->add_option("action_or_space", space_args.p1, "stats|build or the space");
    sc_space->add_option("space_arg", space_args.p2, "space as K:n:q or a json descriptor");
    sc_space->add_option("--space", space_args.flag, "space as K:n:q or json");
    sc_space->add_option("--format", space_format, "text|json|csv");
    sc_space->add_option("--out", space_out, "write the result here instead of stdout");
    sc_space->callback([&] {
        apply_threads();
        exit_code = run_space(space_args, space_format, space_out);
    });

    // scheme [pmatrix|eigenspaces|coincidences|phi] SPACE [--i N]
    ActionArgs scheme_args;
    std::string scheme_format, scheme_out;
    int scheme_i = 1;
    auto* sc_scheme = app.add_subcommand("scheme", "generator association scheme data");
    sc_scheme->add_option("action_or_space", scheme_args.p1,
                          "pmatrix|eigenspaces|coincidences|phi or the space");
    sc_scheme->add_option("space_arg", scheme_args.p2, "space as K:n:q or a json descriptor");
    sc_scheme->add_option("--space", scheme_args.flag, "space as K:n:q or json");
    sc_scheme->add_option("--i", scheme_i, "relation index for phi (default 1)");
    sc_scheme->add_option("--format", scheme_format, "text|json|csv");
    sc_scheme->add_option("--out", scheme_out, "write the result here instead of stdout");
    sc_scheme->callback([&] {
        apply_threads();
        exit_code = run_scheme(scheme_args, scheme_i, scheme_format, scheme_out);
    });

    // check --space SPACE SET.json
    CheckArgs check_args;
    std::string check_space;
    auto* sc_check =
        app.add_subcommand("check", "decide the Cameron-Liebler properties of a set");
    sc_check->add_option("set", check_args.set_path, "generator set file, - for stdin")
        ->required();
    sc_check->add_option("--space", check_space, "space the context is built for")
        ->required();
    sc_check->add_option("--format", check_args.format, "text|json");
    sc_check->add_option("--out", check_args.out, "write the report here");
    sc_check->callback([&] {
        apply_threads();
        exit_code = with_context(check_space, run_check_body, &check_args);
    });

    // construct NAME --space SPACE [parameters]
    ConstructArgs con;
    std::string con_space;
    long con_point = 0, con_base = 0, con_index = 0, con_class = 0, con_x = 0,
         con_alpha = 0;
    double con_budget = 10.0;
    auto* sc_con = app.add_subcommand("construct", "build a named generator set");
    sc_con
        ->add_option("name", con.name,
                     "pencil|base|base-solid|embedded-hyperbolic|hyperbolic-class|"
                     "pencil-family|witness|spread")
        ->required();
    sc_con->add_option("--space", con_space, "space to construct in")->required();
    auto* o_point = sc_con->add_option("--point", con_point, "pencil vertex index");
    auto* o_base = sc_con->add_option("--base", con_base, "base generator index");
    auto* o_index = sc_con->add_option("--index", con_index, "embedding index");
    auto* o_class = sc_con->add_option("--class", con_class, "parity class, 0 or 1");
    auto* o_x = sc_con->add_option("--x", con_x, "target parameter");
    auto* o_alpha = sc_con->add_option("--alpha", con_alpha, "hyperbolic component count");
    auto* o_budget = sc_con->add_option("--budget", con_budget, "search budget, seconds");
    sc_con->add_option("--spec", con.spec_raw, "raw construction spec as json");
    sc_con->add_option("--out", con.out, "write the set document here");
    sc_con->callback([&] {
        apply_threads();
        if (!con.spec_raw.empty()) {
            try {
                con.spec = json::parse(con.spec_raw);
            } catch (const json::exception& ex) {
                std::cerr << "error: " << ex.what() << '\n';
                exit_code = 2;
                return;
            }
        } else {
            con.spec = json{{"name", con.name}};
            if (*o_point) con.spec["point"] = con_point;
            if (*o_base) con.spec["base"] = con_base;
            if (*o_index) con.spec["index"] = con_index;
            if (*o_class) con.spec["class"] = con_class;
            if (*o_x) con.spec["x"] = con_x;
            if (*o_alpha) con.spec["alpha"] = con_alpha;
            if (*o_budget) con.spec["budget_ms"] = std::lround(con_budget * 1000.0);
        }
        exit_code = run_construct(con_space, con);
    });

    // search exhaustive|max-disjoint|classify-x1
    std::string search_kind, search_space, search_set, search_resume, search_format,
        search_out;
    long search_x = 0, search_nodes = -1;
    bool search_unpruned = false;
    auto* sc_search = app.add_subcommand("search", "exhaustive searches");
    sc_search
        ->add_option("kind", search_kind, "exhaustive|max-disjoint|classify-x1")
        ->required();
    sc_search->add_option("set", search_set, "set file for max-disjoint, - for stdin");
    sc_search->add_option("--space", search_space, "space to search in");
    sc_search->add_option("--x", search_x, "parameter for exhaustive");
    sc_search->add_option("--node-budget", search_nodes,
                          "stop after this many nodes and emit a cursor");
    sc_search->add_flag("--unpruned", search_unpruned, "disable counting prunes");
    sc_search->add_option("--resume", search_resume, "cursor file from a stopped run");
    sc_search->add_option("--out", search_out, "write the result here");
    sc_search->callback([&] {
        apply_threads();
        char* text = nullptr;
        if (search_kind == "max-disjoint") {
            std::string doc;
            if (search_set.empty() || !slurp(search_set, doc)) {
                std::cerr << "error: max-disjoint needs a readable set file\n";
                exit_code = 2;
                return;
            }
            if (int rc = clp_search_max_disjoint(doc.c_str(), &text)) {
                exit_code = complain(rc);
                return;
            }
            exit_code = deliver(take(text), search_out);
            return;
        }
        if (search_space.empty()) {
            std::cerr << "error: no space given\n";
            exit_code = 2;
            return;
        }
        if (search_kind == "classify-x1") {
            struct Body {
                static int run(clp_context* c, void* arg) {
                    auto& out_path = *static_cast<std::string*>(arg);
                    char* t = nullptr;
                    if (int rc = clp_search_classify_x1(c, &t)) return complain(rc);
                    return deliver(take(t), out_path);
                }
            };
            exit_code = with_context(search_space, Body::run, &search_out);
            return;
        }
        if (search_kind != "exhaustive") {
            std::cerr << "error: unknown search " << search_kind << '\n';
            exit_code = 2;
            return;
        }
        json opts{{"x", search_x}, {"pruned", !search_unpruned}};
        if (search_nodes >= 0) opts["node_budget"] = search_nodes;
        if (!search_resume.empty()) {
            std::string doc;
            if (!slurp(search_resume, doc)) {
                std::cerr << "error: cannot read " << search_resume << '\n';
                exit_code = 2;
                return;
            }
            try {
                opts["resume"] = json::parse(doc);
            } catch (const json::exception& ex) {
                std::cerr << "error: " << ex.what() << '\n';
                exit_code = 2;
                return;
            }
        }
        struct Body {
            json* opts;
            std::string* out_path;
            static int run(clp_context* c, void* arg) {
                auto& self = *static_cast<Body*>(arg);
                char* t = nullptr;
                if (int rc = clp_search_exhaustive(c, self.opts->dump().c_str(), &t))
                    return complain(rc);
                return deliver(take(t), *self.out_path);
            }
        } body{&opts, &search_out};
        exit_code = with_context(search_space, Body::run, &body);
    });

    // verify-paper [SCOPE] [--timings]
    std::string verify_scope = "all", verify_format, verify_out;
    bool verify_timings = false;
    auto* sc_verify = app.add_subcommand(
        "verify-paper", "run the acceptance criteria and print the manifest");
    sc_verify->add_option("scope", verify_scope,
                          "all, a criterion number, or a named group");
    sc_verify->add_flag("--timings", verify_timings,
                        "append wall-clock seconds (output no longer byte-stable)");
    sc_verify->add_option("--format", verify_format, "text|json");
    sc_verify->add_option("--out", verify_out, "write the manifest here");
    sc_verify->callback([&] {
        apply_threads();
        char* text = nullptr;
        int ok = 0;
        int rc = clp_verify(verify_scope.c_str(),
                            verify_format.empty() ? nullptr : verify_format.c_str(),
                            verify_timings ? 1 : 0, &text, &ok);
        if (rc) {
            exit_code = complain(rc);
            return;
        }
        exit_code = deliver(take(text), verify_out);
        if (exit_code == 0 && !ok) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    return exit_code;
}
