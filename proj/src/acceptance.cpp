#include "clpolar/verify/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "clpolar/constructions/constructions.hpp"
#include "clpolar/search/search.hpp"

namespace clpolar::verify {

namespace {

using algebra::BigInt;
using algebra::HalfInt;
using algebra::Rational;
using clsets::CLContext;
using clsets::GeneratorSet;
using geometry::SpaceKind;
using clpolar::Bitset;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* criterion_name(int id) {
    switch (id) {
        case 1: return "closed-form eigenvalue matrices match built spectra";
        case 2: return "predicted eigenvalue coincidences match the scan";
        case 3: return "valuation closed forms match exact entries";
        case 4: return "worked example families carry their stated flags";
        case 5: return "member intersection counts follow the degree-one formula";
        case 6: return "independent degree-one routes agree everywhere";
        case 7: return "skew member counts match the rank-3 closed forms";
        case 8: return "the pair bound rules out three pairwise skew members";
        case 9: return "parameter-one sets are exactly the point pencils";
        case 10: return "classification witnesses assemble for x <= 3";
        case 11: return "one-class counting characterizes one-class sets";
        case 12: return "spreads meet every degree-one set in x members";
    }
    throw std::invalid_argument("no such criterion: " + std::to_string(id));
}

// The survey universe: every space small enough for a full scheme build at
// desk scale, covering all six families and both scheme types I and III plus
// the type II hyperbolic of rank 4.
const std::vector<std::string> kSurvey = {"W:3:2",  "W:3:3",  "W:5:2", "Q:4:2",
                                          "Q:4:3",  "Q:6:2",  "Q+:5:2", "Q+:7:2",
                                          "Q-:5:2", "H:3:4",  "H:4:4"};

struct Session {
    std::map<std::string, std::shared_ptr<CLContext>> cache;
    std::map<std::string, double> build_seconds;

    CLContext& ctx(const std::string& sh) {
        auto it = cache.find(sh);
        if (it == cache.end()) {
            auto t0 = Clock::now();
            auto sp = geometry::PolarSpace::build(geometry::parse_shorthand(sh));
            it = cache.emplace(sh, std::make_shared<CLContext>(std::move(sp))).first;
            build_seconds[sh] = since(t0);
        }
        return *it->second;
    }
};

// Collects the outcome of one criterion's sub-checks. Hard failures always
// win; documented divergences only downgrade an otherwise clean run.
struct Tally {
    long checks = 0;
    std::vector<std::string> bad;
    std::vector<std::string> divergent;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) bad.push_back(what);
    }
    void diverged(const std::string& what) { divergent.push_back(what); }

    CriterionResult finish(int id, const std::string& ok_detail) const {
        CriterionResult r;
        r.id = id;
        r.name = criterion_name(id);
        std::ostringstream d;
        if (!bad.empty()) {
            r.status = "fail";
            d << bad.size() << " of " << checks << " sub-checks failed: " << bad.front();
            for (std::size_t i = 1; i < bad.size() && i < 3; ++i) d << "; " << bad[i];
        } else if (!divergent.empty()) {
            r.status = "expected-fail";
            d << divergent.front();
            for (std::size_t i = 1; i < divergent.size(); ++i) d << "; " << divergent[i];
            d << "; the other " << checks << " sub-checks hold";
        } else {
            r.status = "pass";
            d << ok_detail << " (" << checks << " sub-checks)";
        }
        r.detail = d.str();
        return r;
    }
};

GeneratorSet pencil_set(const CLContext& C, std::size_t point) {
    return constructions::point_pencil(C.S.space, point);
}

Bitset sample(std::mt19937& rng, std::size_t n, std::size_t k) {
    Bitset b(n);
    std::size_t got = 0;
    while (got < k) {
        std::size_t i = rng() % n;
        if (!b.test(i)) {
            b.set(i);
            ++got;
        }
    }
    return b;
}

// --- 1: closed-form eigenvalue matrices --------------------------------------

CriterionResult c1(Session& s) {
    Tally t;
    auto t0 = Clock::now();
    for (const auto& sh : kSurvey) {
        auto& C = s.ctx(sh);
        auto m = scheme::match_spectrum(C.S.P, C.S.spec);
        t.expect(m.ok, sh + ": " + (m.detail.empty() ? "spectrum mismatch" : m.detail));
    }
    t.expect(since(t0) < 300.0, "survey exceeded the five minute budget");
    return t.finish(1, "all " + std::to_string(kSurvey.size()) +
                           " survey spaces match, multiplicities included");
}

// --- 2: coincidence rule vs scan ----------------------------------------------

CriterionResult c2(Session&) {
    Tally t;
    using Pairs = std::vector<std::pair<int, int>>;
    for (const auto& sh : kSurvey) {
        SpaceKind k = geometry::parse_shorthand(sh);
        HalfInt e = geometry::param_e(k.family);
        Pairs pred = scheme::verify_coincidences(k.d, e, k.q);
        Pairs scan = scheme::coincidence_scan(k.d, e, k.q);
        t.expect(pred == scan, sh + ": predicted list differs from the scan");
        if (sh == "Q:6:2") t.expect(scan == Pairs{{3, 3}}, "Q:6:2 expected exactly (3,3)");
        if (sh == "Q+:7:2")
            t.expect(scan == Pairs{{3, 2}, {3, 4}}, "Q+:7:2 expected exactly (3,2) (3,4)");
        if (geometry::classify_type(k) == geometry::SchemeType::I && !scan.empty()) {
            if (sh == "Q+:5:2")
                t.diverged(
                    "the nonempty-scan-implies-not-type-I clause fails for Q+:5:2: rows 1 "
                    "and 2 of a rank-3 hyperbolic space tie in every even column, so this "
                    "type I space scans (2,2)");
            else
                t.expect(false, sh + ": type I space scanned a nonempty list");
        }
    }
    return t.finish(2, "predictions equal scans on all survey spaces");
}

// --- 3: valuation closed forms -------------------------------------------------

CriterionResult c3(Session&) {
    Tally t;
    struct Fam {
        HalfInt e;
        std::vector<int> qs;
    };
    const std::vector<Fam> fams = {
        {HalfInt(0), {2, 3, 4, 5, 7, 8, 9}},
        {HalfInt::from_twice(1), {4, 9}},
        {HalfInt(1), {2, 3, 4, 5, 7, 8, 9}},
        {HalfInt::from_twice(3), {4, 9}},
        {HalfInt(2), {2, 3, 4, 5, 7, 8, 9}},
    };
    long window = 0, understated = 0;
    for (const auto& f : fams)
        for (int d = 2; d <= 6; ++d)
            for (int q : f.qs)
                for (int i = 1; i <= d; ++i)
                    for (int j = 0; j <= d; ++j) {
                        auto table = scheme::closed_form_phi(d, f.e, i, j);
                        if (!table) continue;
                        ++window;
                        auto exact = scheme::phi_valuation(d, f.e, q, i, j);
                        if (*table == exact) continue;
                        // Documented divergence: on the tie parities the two
                        // lowest terms of the entry share the minimal exponent
                        // with opposite signs, so the closed form can only
                        // understate the true valuation there.
                        bool tie_parity = (f.e == HalfInt(0) && i % 2 == 1) ||
                                          (f.e == HalfInt(1) && i % 2 == 0) ||
                                          (f.e == HalfInt(2) && i % 2 == 1);
                        bool under = exact.infinite ||
                                     (!table->infinite && table->value < exact.value);
                        std::ostringstream where;
                        where << "d=" << d << " e=" << f.e.str() << " q=" << q << " i=" << i
                              << " j=" << j << " table " << table->str() << " exact "
                              << exact.str();
                        t.expect(tie_parity && under,
                                 "divergence off the documented pattern at " + where.str());
                        if (tie_parity && under) ++understated;
                    }
    t.expect(window > 500, "window unexpectedly small");
    if (understated > 0) {
        std::ostringstream d;
        d << understated << " of " << window
          << " in-window entries sit on a tie parity (e=0 with i odd, e=1 with i even, e=2 "
             "with i odd) where the exact valuation is strictly higher than the closed form";
        t.diverged(d.str());
    }
    return t.finish(3, "closed forms exact across the whole window");
}

// --- 4 and 5: the worked example families --------------------------------------

struct ExampleRow {
    std::string label;
    GeneratorSet set;
    bool cl;
    bool degree_one;
    long x;
};

std::vector<ExampleRow> example_rows(Session& s, const std::string& sh) {
    auto& C = s.ctx(sh);
    auto sp = C.S.space;
    auto H = constructions::hyperbolic_embeddings(sp, 1).at(0);
    std::vector<ExampleRow> rows;
    rows.push_back({sh + " all generators", GeneratorSet::full(sp), true, true, 9});
    rows.push_back({sh + " point pencil", pencil_set(C, 0), true, true, 1});
    rows.push_back({sh + " embedded hyperbolic", constructions::embedded_hyperbolic(H), true,
                    true, 2});
    rows.push_back({sh + " base plane", constructions::base_generator_set(sp, 0), true, false,
                    1});
    rows.push_back({sh + " hyperbolic class", constructions::hyperbolic_class(H, 0), true,
                    false, 1});
    return rows;
}

CriterionResult c4(Session& s) {
    Tally t;
    for (const auto& sh : {"Q:6:2", "W:5:2"}) {
        auto& C = s.ctx(sh);
        for (const auto& row : example_rows(s, sh)) {
            auto rep = clsets::full_report(C, row.set);
            t.expect(rep.is_cl == row.cl, row.label + ": wrong Cameron-Liebler flag");
            t.expect(rep.is_degree_one == row.degree_one, row.label + ": wrong degree-one flag");
            t.expect(rep.x_integral && rep.x == row.x, row.label + ": wrong parameter");
            // complement: always Cameron-Liebler again with parameter 9 - x,
            // and degree one exactly when the set itself is
            auto co = clsets::full_report(C, clsets::complement(row.set));
            t.expect(co.is_cl, row.label + ": complement lost the Cameron-Liebler property");
            t.expect(co.is_degree_one == row.degree_one, row.label + ": complement degree flag");
            t.expect(co.x_integral && co.x == 9 - row.x, row.label + ": complement parameter");
        }
    }
    return t.finish(4, "all five families and their complements behave as stated in both spaces");
}

CriterionResult c5(Session& s) {
    Tally t;
    for (const std::string sh : {"Q:6:2", "W:5:2"}) {
        auto& C = s.ctx(sh);
        for (const auto& row : example_rows(s, sh)) {
            for (const GeneratorSet& L : {row.set, clsets::complement(row.set)}) {
                bool degree_one = row.degree_one;
                std::string label = row.label + (L.size() == row.set.size() ? "" : " complement");
                if (degree_one) {
                    for (int i = 1; i <= 3; ++i)
                        t.expect(clsets::intersection_profile(C, L, i).ok,
                                 label + ": count mismatch at i=" + std::to_string(i));
                }
            }
            if (row.label.find("base plane") != std::string::npos) {
                // counts characterize degree one only through the admissible
                // indices: the base plane passes the inadmissible i=3 row
                // while failing both admissible ones
                t.expect(!clsets::intersection_profile(C, row.set, 1).ok,
                         row.label + ": i=1 unexpectedly matched");
                t.expect(!clsets::intersection_profile(C, row.set, 2).ok,
                         row.label + ": i=2 unexpectedly matched");
                t.expect(clsets::intersection_profile(C, row.set, 3).ok,
                         row.label + ": i=3 should match");
                t.expect(!clsets::admissible_converse_index(*C.S.space, 3),
                         sh + ": i=3 should be inadmissible here");
            }
        }
    }
    return t.finish(5, "degree-one families match all counts; the base plane fails exactly "
                       "the admissible rows");
}

// --- 6: route agreement ---------------------------------------------------------

CriterionResult c6(Session& s) {
    Tally t;
    std::mt19937 rng(20260815);
    long randoms = 0;
    for (const auto& sh : kSurvey) {
        auto& C = s.ctx(sh);
        auto sp = C.S.space;
        std::size_t n = C.S.n;

        std::vector<GeneratorSet> sets;
        sets.push_back(GeneratorSet::empty(sp));
        sets.push_back(GeneratorSet::full(sp));
        sets.push_back(pencil_set(C, 0));
        sets.push_back(pencil_set(C, sp->num_points() - 1));
        sets.push_back(clsets::complement(sets[2]));
        if (auto fam = constructions::disjoint_pencil_family(sp, 2)) sets.push_back(*fam);
        if (sh == std::string("Q:6:2") || sh == std::string("W:5:2")) {
            auto H = constructions::hyperbolic_embeddings(sp, 1).at(0);
            sets.push_back(constructions::embedded_hyperbolic(H));
            sets.push_back(constructions::hyperbolic_class(H, 0));
            sets.push_back(constructions::base_generator_set(sp, 0));
        }
        for (std::size_t k = 0; k < sets.size(); ++k) {
            bool a = clsets::degree_one_incidence(C, sets[k]);
            bool b = clsets::degree_one_eigenvalue(C, sets[k]);
            t.expect(a == b, sh + ": routes split on constructed set " + std::to_string(k));
        }

        GeneratorSet L = GeneratorSet::empty(sp);
        for (int r = 0; r < 910; ++r) {
            L.members = sample(rng, n, rng() % (n + 1));
            bool a = clsets::degree_one_incidence(C, L);
            bool b = clsets::degree_one_eigenvalue(C, L);
            ++randoms;
            if (a != b)
                t.expect(false, sh + ": routes split on random subset " + std::to_string(r));
        }
    }
    t.expect(randoms >= 10000, "fewer than ten thousand random subsets");
    return t.finish(6, "routes agreed on every constructed family and " +
                           std::to_string(randoms) + " random subsets");
}

// --- 7: rank-3 skew counts -------------------------------------------------------

CriterionResult c7(Session& s) {
    Tally t;
    for (const auto& sh : {"W:5:2", "Q:6:2", "Q:6:3"}) {
        auto& C = s.ctx(sh);
        auto sp = C.S.space;

        std::vector<std::pair<std::string, GeneratorSet>> sets;
        sets.emplace_back(sh + std::string(" pencil"), pencil_set(C, 0));
        if (auto f2 = constructions::disjoint_pencil_family(sp, 2))
            sets.emplace_back(sh + std::string(" two pencils"), *f2);
        if (auto f3 = constructions::disjoint_pencil_family(sp, 3))
            sets.emplace_back(sh + std::string(" three pencils"), *f3);
        auto H = constructions::hyperbolic_embeddings(sp, 1).at(0);
        sets.emplace_back(sh + std::string(" embedded hyperbolic"),
                          constructions::embedded_hyperbolic(H));
        sets.emplace_back(sh + std::string(" all generators"), GeneratorSet::full(sp));
        t.expect(sets.size() == 5, sh + std::string(": missing a pencil family"));

        for (const auto& [label, L] : sets) {
            auto rep = clsets::s1_s2_d2(C, L);
            t.expect(rep.s1_ok, label + ": s1 differs from the closed form");
            t.expect(rep.s2_ok, label + ": s2 differs from the closed form");
            t.expect(rep.d2_ok, label + ": d2 differs from the closed form");
            if (rep.x == 1)
                t.expect(!rep.has_skew_pair, label + ": a pencil has no skew pair");
            if (rep.x == 2) {
                // the boundary case: two components leave nothing skew to both
                t.expect(rep.has_skew_pair, label + ": expected a skew pair at x=2");
                t.expect(rep.d2 == 0, label + ": d2 should vanish at x=2");
            }
        }
    }
    return t.finish(7, "brute-force counts equal the closed forms in all three spaces, "
                       "including the vanishing d2 boundary");
}

// --- 8: the skew pair bound ------------------------------------------------------

CriterionResult c8(Session& s) {
    Tally t;
    // the q=3, x=2, c=2 instance by the numbers
    long q = 3, x = 2;
    long s1 = q * q * q + x * (q * q + q + 1);
    long d2 = (x - 2) * q * q * (q - 1);
    long s2 = x * (q * q + 1) * (q + 1) - 2 * (x - 1) * q * q * q + d2;
    long lhs = 3 * s1 - 3 * s2;
    long rhs = x * (q * q + 1) * (q + 1);
    t.expect(s1 == 53 && s2 == 26, "closed forms moved at q=3, x=2");
    t.expect(lhs == 81 && rhs == 80 && lhs > rhs, "the bound should read 81 > 80");
    t.expect(clsets::skew_bound(3, BigInt(2), 2), "skew_bound(q=3, x=2, c=2) must hold");
    t.expect(!clsets::skew_bound(3, BigInt(2), 1), "c=1 gives 80 > 80, which must fail");
    t.expect(!clsets::skew_bound(2, BigInt(2), 2), "q=2 lies outside the bound's reach");
    t.expect(clsets::in_corollary_range(3, BigInt(2)), "x=2 is in range at q=3");
    t.expect(!clsets::in_corollary_range(2, BigInt(2)), "x=2 is out of range at q=2");

    auto& C = s.ctx("Q:6:3");
    t.expect(s.build_seconds["Q:6:3"] < 600.0, "scheme build exceeded ten minutes");
    auto sp = C.S.space;
    for (long alpha : {0L, 1L}) {
        auto w = constructions::classification_witness(sp, 2, alpha);
        std::string label = "Q:6:3 witness alpha=" + std::to_string(alpha);
        t.expect(w.has_value(), label + " missing");
        if (!w) continue;
        auto rep = clsets::full_report(C, *w);
        t.expect(rep.is_degree_one && rep.x == 2, label + ": not degree one at x=2");
        auto dm = search::max_disjoint(*w);
        t.expect(dm.size <= 2, label + ": found " + std::to_string(dm.size) +
                                   " pairwise skew members");
    }
    return t.finish(8, "81 > 80 holds, no x=2 witness carries three pairwise skew members, "
                       "and the scheme build stayed inside its budget");
}

// --- 9: parameter-one classification ----------------------------------------------

CriterionResult c9(Session& s) {
    Tally t;
    for (const auto& sh : {"W:3:2", "Q:4:2", "Q-:5:2"}) {
        auto& C = s.ctx(sh);
        auto t0 = Clock::now();
        auto r = search::classify_x1(C);
        double sec = since(t0);
        t.expect(r.complete && r.confirmed, sh + std::string(": search did not confirm"));
        t.expect(r.found == C.S.space->num_points(),
                 sh + std::string(": pencil count differs from the point count"));
        t.expect(sec < 300.0, sh + std::string(": over the five minute budget"));
    }

    auto& H = s.ctx("Q+:5:2");
    bool restricted = false;
    try {
        auto O = scheme::restrict_one_class(H.S);
        restricted = true;
        auto oc = search::exhaustive_one_class_x1(O);
        t.expect(oc.complete, "one-class scan incomplete");
    } catch (const std::invalid_argument&) {
        // Documented divergence: the one-class restriction is only defined on
        // hyperbolic spaces of even rank, and this one has rank 3. Running
        // the same exhaustive parameter-1 search over the full space, both
        // classes included, is the closest faithful reading.
        auto r = search::classify_x1(H);
        t.expect(r.complete && r.confirmed && r.found == 35,
                 "full Q+:5:2 search did not confirm the 35 pencils");
        t.diverged(
            "the single-class clause for Q+:5:2 cannot run: one-class restriction "
            "requires even rank; the full-space search over both classes confirms all "
            "35 parameter-1 sets are point pencils");
    }
    if (restricted)
        t.expect(false, "one-class restriction unexpectedly accepted a rank-3 space");
    return t.finish(9, "every parameter-1 set in every searched space is a point pencil");
}

// --- 10: witness assembly -----------------------------------------------------------

CriterionResult c10(Session& s) {
    Tally t;
    const std::vector<std::pair<long, long>> admissible = {{0, 0}, {1, 0}, {2, 0},
                                                           {2, 1}, {3, 0}, {3, 1}};
    for (const auto& sh : {"Q:6:2", "W:5:2"}) {
        auto& C = s.ctx(sh);
        auto sp = C.S.space;
        for (auto [x, alpha] : admissible) {
            std::string label = sh + std::string(" x=") + std::to_string(x) +
                                " alpha=" + std::to_string(alpha);
            auto w = constructions::classification_witness(sp, x, alpha);
            t.expect(w.has_value(), label + " missing");
            if (!w) continue;
            auto rep = clsets::full_report(C, *w);
            t.expect(rep.is_degree_one && rep.x_integral && rep.x == x,
                     label + ": not degree one at the stated parameter");
        }
    }
    // over an odd field the symplectic space has no embedded hyperbolic
    // quadric, so only the pure pencil unions assemble
    auto& C53 = s.ctx("W:5:3");
    auto sp53 = C53.S.space;
    for (long x : {2L, 3L}) {
        auto w0 = constructions::classification_witness(sp53, x, 0);
        t.expect(w0.has_value(), "W:5:3 x=" + std::to_string(x) + " alpha=0 missing");
        if (w0) {
            auto rep = clsets::full_report(C53, *w0);
            t.expect(rep.is_degree_one && rep.x == x,
                     "W:5:3 x=" + std::to_string(x) + " alpha=0: not degree one");
        }
        auto w1 = constructions::classification_witness(sp53, x, 1);
        t.expect(!w1.has_value(),
                 "W:5:3 x=" + std::to_string(x) + " alpha=1 should be absent over GF(3)");
    }
    return t.finish(10, "all admissible pairs assemble in both q=2 spaces; over GF(3) "
                        "exactly the alpha=0 witnesses exist");
}

// --- 11: one-class restriction -------------------------------------------------------

CriterionResult c11(Session& s) {
    Tally t;
    auto& C = s.ctx("Q+:7:2");
    const auto& sp = C.space();
    auto O = scheme::restrict_one_class(C.S);
    t.expect(O.n == 135, "class size should be 135");

    // eigenvalues transfer at doubled column index, uniquely in each column
    for (int i = 0; i <= 2; ++i)
        t.expect(O.P[1][i] == C.S.P[1][2 * i],
                 "restricted row 1 differs from the parent at column " + std::to_string(i));
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            if (j != 1)
                t.expect(O.P[j][i] != O.P[1][i],
                         "column " + std::to_string(i) + " not unique at row " +
                             std::to_string(j));

    // the restricted eigenspace of row 1 is the restriction of the parent sum
    // V_1 + V_3, which splits evenly between the two classes
    Rational m1 = scheme::closed_form_multiplicity(C.S.P, 1);
    Rational m3 = scheme::closed_form_multiplicity(C.S.P, 3);
    int slot = -1;
    for (std::size_t k = 0; k < O.spec.theta.size(); ++k)
        if (O.spec.values[k][1] == O.P[1][1]) slot = static_cast<int>(k);
    t.expect(slot >= 0, "restricted spectrum misses the row-1 eigenvalue");
    if (slot >= 0)
        t.expect(Rational(O.spec.mult[slot]) * 2 == m1 + m3,
                 "restricted multiplicity is not half of the parent pair");

    // counting and eigenvector routes, both directions, on one-class sets
    auto class_pencil = [&](std::size_t p) {
        Bitset b(O.n);
        const Bitset& pen = sp.pencil(p);
        for (std::uint32_t k = 0; k < O.n; ++k)
            if (pen.test(O.members[k])) b.set(k);
        return b;
    };
    auto counts_ok = [&](const Bitset& b) {
        return clsets::one_class_profile(O, b, 1).ok && clsets::one_class_profile(O, b, 2).ok;
    };

    for (std::size_t p : {std::size_t(0), std::size_t(1), sp.num_points() / 2,
                          sp.num_points() - 1}) {
        Bitset b = class_pencil(p);
        t.expect(b.count() == 15, "one-class pencil should have 15 members");
        bool cl = clsets::one_class_is_cl(O, b);
        bool counts = counts_ok(b);
        t.expect(cl && counts, "one-class pencil at point " + std::to_string(p) +
                                   " failed a route");
        t.expect(cl == counts, "routes split on a one-class pencil");
    }
    {
        Bitset all(O.n);
        for (std::uint32_t k = 0; k < O.n; ++k) all.set(k);
        t.expect(clsets::one_class_is_cl(O, all) && counts_ok(all),
                 "the whole class failed a route");
    }
    std::mt19937 rng(1107);
    int rejected = 0;
    for (int r = 0; r < 30; ++r) {
        Bitset b = sample(rng, O.n, 15);
        bool cl = clsets::one_class_is_cl(O, b);
        bool counts = counts_ok(b);
        t.expect(cl == counts, "routes split on random class subset " + std::to_string(r));
        if (!cl) ++rejected;
    }
    t.expect(rejected == 30, "a random 15-subset of the class slipped through");
    return t.finish(11, "pencils pass and 30 random class subsets fail, with the counting "
                        "and eigenvector routes in lockstep; the restricted row-1 "
                        "eigenspace is half the parent pair");
}

// --- 12: spread intersections ---------------------------------------------------------

CriterionResult c12(Session& s) {
    Tally t;
    struct Probe {
        const char* sh;
        bool required;
    };
    const std::vector<Probe> probes = {{"W:3:2", true},  {"Q:4:2", false}, {"Q+:3:2", false},
                                       {"Q-:5:2", false}, {"W:5:2", true},  {"Q:6:3", false}};
    std::ostringstream sizes;
    for (const auto& pr : probes) {
        auto& C = s.ctx(pr.sh);
        auto sp = C.S.space;
        auto S = constructions::spread_search(sp, std::chrono::seconds(30));
        if (!S) {
            t.expect(!pr.required, std::string(pr.sh) + ": required spread not found");
            continue;
        }
        t.expect(clsets::is_spread(*S), std::string(pr.sh) + ": search returned a non-spread");
        sizes << (sizes.tellp() > 0 ? ", " : "") << pr.sh << " size " << S->size();

        std::vector<GeneratorSet> sets;
        sets.push_back(pencil_set(C, 0));
        sets.push_back(GeneratorSet::full(sp));
        sets.push_back(GeneratorSet::empty(sp));
        sets.push_back(clsets::complement(sets[0]));
        if (auto f2 = constructions::disjoint_pencil_family(sp, 2)) sets.push_back(*f2);
        if (auto f3 = constructions::disjoint_pencil_family(sp, 3)) sets.push_back(*f3);
        for (std::size_t k = 0; k < sets.size(); ++k)
            t.expect(clsets::spread_intersection_check(C, sets[k], *S),
                     std::string(pr.sh) + ": set " + std::to_string(k) +
                         " missed the spread in x members");
    }
    return t.finish(12, "every degree-one test set meets each spread in exactly x members "
                        "(" + sizes.str() + ")");
}

CriterionResult dispatch(int id, Session& s) {
    switch (id) {
        case 1: return c1(s);
        case 2: return c2(s);
        case 3: return c3(s);
        case 4: return c4(s);
        case 5: return c5(s);
        case 6: return c6(s);
        case 7: return c7(s);
        case 8: return c8(s);
        case 9: return c9(s);
        case 10: return c10(s);
        case 11: return c11(s);
        case 12: return c12(s);
    }
    throw std::invalid_argument("no such criterion: " + std::to_string(id));
}

std::vector<int> scope_ids(const std::string& scope) {
    if (scope.empty() || scope == "all")
        return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    if (scope == "q2") return {4, 5, 9, 11, 12};
    if (scope == "table4") return {4};
    if (scope == "classification") return {9, 10};
    if (scope == "spectra") return {1, 2, 3};
    if (scope == "counts") return {7, 8};
    if (scope == "routes") return {6};
    if (scope == "spreads") return {12};
    try {
        std::size_t used = 0;
        int id = std::stoi(scope, &used);
        if (used == scope.size() && id >= 1 && id <= 12) return {id};
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("unknown scope: " + scope);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& scope) {
    auto ids = scope_ids(scope);
    Session s;
    std::vector<CriterionResult> out;
    for (int id : ids) {
        auto t0 = Clock::now();
        CriterionResult r;
        try {
            r = dispatch(id, s);
        } catch (const std::exception& ex) {
            r.id = id;
            r.name = criterion_name(id);
            r.status = "fail";
            r.detail = std::string("unhandled exception: ") + ex.what();
        }
        r.seconds = since(t0);
        out.push_back(std::move(r));
    }
    return out;
}

// No wall-clock figures here: outputs must be byte-identical across runs, and
// the time budgets are asserted inside the criteria themselves.
std::string manifest_text(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << "criterion " << std::setw(2) << std::setfill('0') << r.id << "  "
            << std::setfill(' ') << std::left << std::setw(13) << r.status << std::right
            << "  " << r.name << " | " << r.detail << '\n';
    }
    return out.str();
}

io::json manifest_json(const std::vector<CriterionResult>& results) {
    io::json rows = io::json::array();
    int fails = 0, expected = 0;
    for (const auto& r : results) {
        rows.push_back(io::json{{"id", r.id},
                                {"name", r.name},
                                {"status", r.status},
                                {"detail", r.detail}});
        if (r.status == "fail") ++fails;
        if (r.status == "expected-fail") ++expected;
    }
    return io::json{{"results", rows},
                    {"ok", fails == 0},
                    {"fail", fails},
                    {"expected_fail", expected},
                    {"pass", static_cast<int>(results.size()) - fails - expected}};
}

bool all_passing(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (r.status == "fail") return false;
    return true;
}

}  // namespace clpolar::verify
