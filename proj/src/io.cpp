#include "clpolar/io/io.hpp"

#include <sstream>
#include <stdexcept>

namespace clpolar::io {

namespace {

using algebra::BigInt;
using geometry::Family;
using geometry::SpaceKind;

Family family_from_string(const std::string& s, bool* needs_ambient) {
    *needs_ambient = false;
    if (s == "Q+") return Family::HyperbolicQuadric;
    if (s == "W") return Family::Symplectic;
    if (s == "Q") return Family::ParabolicQuadric;
    if (s == "Q-") return Family::EllipticQuadric;
    if (s == "H") {
        *needs_ambient = true;  // odd or even ambient are different families
        return Family::HermitianOdd;
    }
    throw std::invalid_argument("space descriptor: unknown kind '" + s + "'");
}

json witness_to_json(const clsets::Witness& w) {
    return json{{"generator", w.generator},
                {"expected", rational_to_string(w.expected)},
                {"actual", bigint_to_json(w.actual)}};
}

}  // namespace

json bigint_to_json(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 53;
    if (v < lim && v > -lim) return json(v.get_si());
    return json(v.get_str());
}

std::string rational_to_string(const algebra::Rational& v) { return v.get_str(); }

json space_to_json(const SpaceKind& k) {
    return json{{"kind", geometry::family_string(k.family)},
                {"d", k.d},
                {"q", k.q},
                {"n", geometry::ambient_dim(k)}};
}

SpaceKind space_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("space descriptor: not an object");
    std::string kind = j.at("kind").get<std::string>();
    int q = j.at("q").get<int>();
    if (j.contains("n")) {
        int n = j.at("n").get<int>();
        SpaceKind k =
            geometry::parse_shorthand(kind + ":" + std::to_string(n) + ":" + std::to_string(q));
        if (j.contains("d") && j.at("d").get<int>() != k.d)
            throw std::invalid_argument("space descriptor: d and n disagree");
        return k;
    }
    bool needs_ambient = false;
    Family fam = family_from_string(kind, &needs_ambient);
    if (needs_ambient)
        throw std::invalid_argument("space descriptor: hermitian spaces need the ambient n");
    SpaceKind k{fam, j.at("d").get<int>(), q};
    geometry::validate_kind(k);
    return k;
}

json generator_set_to_json(const clsets::GeneratorSet& L) {
    json idx = json::array();
    for (std::uint32_t g : L.indices()) idx.push_back(g);
    return json{{"space", space_to_json(L.space->kind())}, {"indices", idx}};
}

clsets::GeneratorSet generator_set_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("generator set: not an object");
    auto sp = geometry::PolarSpace::build(space_from_json(j.at("space")));
    const json& idx = j.at("indices");
    if (!idx.is_array()) throw std::invalid_argument("generator set: indices must be an array");
    std::vector<std::uint32_t> v;
    long last = -1;
    for (const auto& e : idx) {
        long g = e.get<long>();
        if (g <= last) throw std::invalid_argument("generator set: indices must be ascending");
        last = g;
        v.push_back(static_cast<std::uint32_t>(g));
    }
    return clsets::GeneratorSet::of(sp, v);
}

json report_to_json(const clsets::CLReport& rep) {
    json prof = json::array();
    for (const auto& pc : rep.profile) {
        json w = json::array();
        for (const auto& x : pc.witnesses) w.push_back(witness_to_json(x));
        prof.push_back(json{{"i", pc.i},
                            {"admissible", pc.admissible},
                            {"ok", pc.ok},
                            {"expected_member", rational_to_string(pc.expected_member)},
                            {"expected_outside", rational_to_string(pc.expected_outside)},
                            {"witnesses", w}});
    }
    json cw = json::array();
    for (const auto& x : rep.cl_witnesses) cw.push_back(witness_to_json(x));
    return json{{"x", rational_to_string(rep.x)},
                {"x_integral", rep.x_integral},
                {"is_cl", rep.is_cl},
                {"is_degree_one", rep.is_degree_one},
                {"cl_witnesses", cw},
                {"profile", prof}};
}

json matrix_to_json(const std::vector<std::vector<BigInt>>& M) {
    json rows = json::array();
    for (const auto& r : M) {
        json row = json::array();
        for (const auto& v : r) row.push_back(bigint_to_json(v));
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_to_csv(const std::vector<std::vector<BigInt>>& M) {
    std::ostringstream out;
    for (const auto& r : M) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out << ',';
            out << r[i].get_str();
        }
        out << '\n';
    }
    return out.str();
}

std::string coincidences_to_string(const std::vector<std::pair<int, int>>& v) {
    if (v.empty()) return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << '(' << v[i].first << ',' << v[i].second << ')';
    }
    return out.str();
}

json eigenspaces_to_json(const SpaceKind& k) {
    auto P = scheme::eigenvalue_matrix(k.d, geometry::param_e(k.family), k.q);
    json rows = json::array();
    for (int j = 0; j < static_cast<int>(P.size()); ++j)
        rows.push_back(json{{"j", j},
                            {"column1", bigint_to_json(P[j][1])},
                            {"multiplicity",
                             rational_to_string(scheme::closed_form_multiplicity(P, j))}});
    return json{{"space", space_to_json(k)}, {"rows", rows}};
}

std::string eigenspaces_to_csv(const SpaceKind& k) {
    auto P = scheme::eigenvalue_matrix(k.d, geometry::param_e(k.family), k.q);
    std::ostringstream out;
    out << "j,column1,multiplicity\n";
    for (int j = 0; j < static_cast<int>(P.size()); ++j)
        out << j << ',' << P[j][1].get_str() << ','
            << scheme::closed_form_multiplicity(P, j).get_str() << '\n';
    return out.str();
}

json phi_to_json(const SpaceKind& k, int i) {
    algebra::HalfInt e = geometry::param_e(k.family);
    json rows = json::array();
    for (int j = 0; j <= k.d; ++j)
        rows.push_back(
            json{{"j", j}, {"phi", scheme::phi_valuation(k.d, e, k.q, i, j).str()}});
    return json{{"space", space_to_json(k)}, {"i", i}, {"rows", rows}};
}

std::string phi_to_csv(const SpaceKind& k, int i) {
    algebra::HalfInt e = geometry::param_e(k.family);
    std::ostringstream out;
    out << "j,phi\n";
    for (int j = 0; j <= k.d; ++j)
        out << j << ',' << scheme::phi_valuation(k.d, e, k.q, i, j).str() << '\n';
    return out.str();
}

json cursor_to_json(const search::Cursor& c) {
    json chosen = json::array();
    for (std::uint32_t g : c.chosen) chosen.push_back(g);
    return json{{"chosen", chosen}, {"next", c.next}};
}

search::Cursor cursor_from_json(const json& j) {
    search::Cursor c;
    for (const auto& e : j.at("chosen")) c.chosen.push_back(e.get<std::uint32_t>());
    c.next = j.at("next").get<std::uint32_t>();
    return c;
}

}  // namespace clpolar::io
