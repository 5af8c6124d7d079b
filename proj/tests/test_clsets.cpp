#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "clpolar/clsets/clsets.hpp"

using namespace clpolar;
using namespace clpolar::clsets;
using algebra::BigInt;
using algebra::HalfInt;
using algebra::Rational;
using geometry::PolarSpace;
using geometry::parse_shorthand;

namespace {

std::shared_ptr<const PolarSpace> get(const std::string& sh) {
    return PolarSpace::build(parse_shorthand(sh));
}

GeneratorSet pencil_set(const std::shared_ptr<const PolarSpace>& sp, std::size_t p) {
    GeneratorSet L = GeneratorSet::empty(sp);
    L.members = sp->pencil(p);
    return L;
}

// planes meeting the base in at least a line, base included (rank 3 only)
GeneratorSet base_plane_set(const CLContext& C, std::size_t base) {
    GeneratorSet L = GeneratorSet::empty(C.S.space);
    for (std::uint32_t g = 0; g < C.S.n; ++g)
        if (C.S.rel(g, static_cast<std::uint32_t>(base)) <= 1) L.members.set(g);
    return L;
}

// distinct indices drawn from the raw engine stream; stable across platforms
std::vector<std::uint32_t> sample(std::mt19937& rng, std::uint32_t n, std::size_t k) {
    std::vector<std::uint32_t> out;
    Bitset seen(n);
    while (out.size() < k) {
        std::uint32_t g = rng() % n;
        if (seen.test(g)) continue;
        seen.set(g);
        out.push_back(g);
    }
    return out;
}

}  // namespace

TEST_CASE("factories, parameter and the trivial sets") {
    auto sp = get("W:5:2");
    CLContext C(sp);
    CHECK(pencil_size(3, HalfInt(1), 2) == 15);
    CHECK(max_parameter(3, HalfInt(1), 2) == 9);

    GeneratorSet none = GeneratorSet::empty(sp);
    CHECK(parameter(none) == 0);
    CHECK(is_cl_disjointness(C, none).ok);
    CHECK(is_degree_one(C, none));

    GeneratorSet all = GeneratorSet::full(sp);
    CHECK(all.size() == 135);
    CHECK(parameter(all) == 9);
    CHECK(is_cl_disjointness(C, all).ok);
    CHECK(is_degree_one(C, all));

    GeneratorSet one = GeneratorSet::of(sp, {0, 7, 134});
    CHECK(one.size() == 3);
    CHECK(parameter(one) == Rational(3) / Rational(15));
    CHECK_THROWS_AS(GeneratorSet::of(sp, {135}), std::invalid_argument);
}

TEST_CASE("point-pencils are degree one Cameron-Liebler sets everywhere") {
    for (const char* sh : {"W:3:2", "W:5:2", "Q:6:2", "Q-:5:2", "H:3:4"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        CLContext C(sp);
        for (std::size_t p : {std::size_t(0), sp->num_points() / 2}) {
            GeneratorSet L = pencil_set(sp, p);
            CHECK(BigInt(static_cast<unsigned long>(L.size())) ==
                  pencil_size(sp->rank(), sp->e(), sp->q()));
            CLReport rep = full_report(C, L);
            CHECK(rep.x == 1);
            CHECK(rep.x_integral);
            CHECK(rep.is_cl);
            CHECK(rep.is_degree_one);
            for (const auto& pc : rep.profile) {
                CAPTURE(pc.i);
                CHECK(pc.ok);
            }
            CHECK(shifted_chi_in_V1(C, L));
        }
    }
}

TEST_CASE("admissible converse indices follow the family") {
    CHECK(admissible_converse_index(*get("Q-:5:2"), 1));
    CHECK(admissible_converse_index(*get("Q-:5:2"), 2));
    auto w52 = get("W:5:2");  // d = 3 odd: i = d excluded
    CHECK(admissible_converse_index(*w52, 1));
    CHECK(admissible_converse_index(*w52, 2));
    CHECK_FALSE(admissible_converse_index(*w52, 3));
    auto q62 = get("Q:6:2");
    CHECK_FALSE(admissible_converse_index(*q62, 3));
    auto hyp = get("Q+:5:2");  // only odd i
    CHECK(admissible_converse_index(*hyp, 1));
    CHECK_FALSE(admissible_converse_index(*hyp, 2));
    CHECK(admissible_converse_index(*hyp, 3));
    auto w32 = get("W:3:2");  // d even: everything admissible
    CHECK(admissible_converse_index(*w32, 1));
    CHECK(admissible_converse_index(*w32, 2));
}

TEST_CASE("random subsets fail with witnesses and the two routes agree") {
    auto sp = get("W:5:2");
    CLContext C(sp);
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 10; ++trial) {
        GeneratorSet L = GeneratorSet::of(sp, sample(rng, 135, 15));
        DisjointnessCheck dis = is_cl_disjointness(C, L);
        CHECK(dis.x == 1);
        CHECK(dis.x_integral);
        CHECK_FALSE(dis.ok);
        CHECK_FALSE(dis.witnesses.empty());
        CHECK(dis.witnesses.size() <= 16);
        bool r1 = degree_one_incidence(C, L);
        bool r2 = degree_one_eigenvalue(C, L);
        CHECK(r1 == r2);
        CHECK_FALSE(r1);
        CHECK_FALSE(shifted_chi_in_V1(C, L));
    }
    GeneratorSet odd = GeneratorSet::of(sp, sample(rng, 135, 7));
    CHECK_FALSE(is_cl_disjointness(C, odd).x_integral);
}

TEST_CASE("base-plane: Cameron-Liebler but not degree one") {
    for (const char* sh : {"Q:6:2", "W:5:2"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        CLContext C(sp);
        GeneratorSet L = base_plane_set(C, 0);
        CHECK(L.size() == 15);
        CLReport rep = full_report(C, L);
        CHECK(rep.x == 1);
        CHECK(rep.is_cl);
        CHECK_FALSE(rep.is_degree_one);
        CHECK_FALSE(rep.profile[0].ok);  // i = 1
        CHECK_FALSE(rep.profile[1].ok);  // i = 2
        CHECK(rep.profile[2].ok);        // i = 3, the disjointness count itself
        CHECK_FALSE(shifted_chi_in_V1(C, L));
        // the base itself is the loudest witness at i = 1: it meets every
        // other member in a line, far above the formula value q(q+1)
        bool base_witnessed = false;
        for (const auto& w : rep.profile[0].witnesses)
            if (w.generator == 0) {
                base_witnessed = true;
                CHECK(w.actual == 14);
                CHECK(w.expected == 6);
            }
        CHECK(base_witnessed);
    }
}

TEST_CASE("embedded hyperbolic quadric: both classes pass, one class is CL only") {
    auto sp = get("Q:6:2");
    CLContext C(sp);
    auto hs = geometry::hyperbolic_hyperplanes(*sp, 1);
    REQUIRE(hs.size() == 1);
    auto sec = geometry::hyperplane_section(sp, hs[0]);
    REQUIRE(sec.type == geometry::SectionType::Hyperbolic);
    REQUIRE(sec.contained_generators.size() == 30);

    GeneratorSet both = GeneratorSet::of(sp, sec.contained_generators);
    GeneratorSet cls0 = GeneratorSet::empty(sp);
    GeneratorSet cls1 = GeneratorSet::empty(sp);
    std::uint32_t g0 = sec.contained_generators.front();
    for (auto g : sec.contained_generators) {
        // same class within the section: meet dimension parity matches d
        if (C.S.rel(g, g0) % 2 == 0)
            cls0.members.set(g);
        else
            cls1.members.set(g);
    }
    CHECK(cls0.size() == 15);
    CHECK(cls1.size() == 15);

    CLReport rep = full_report(C, both);
    CHECK(rep.x == 2);
    CHECK(rep.is_cl);
    CHECK(rep.is_degree_one);
    CHECK(shifted_chi_in_V1(C, both));

    for (const GeneratorSet* cls : {&cls0, &cls1}) {
        CLReport crep = full_report(C, *cls);
        CHECK(crep.x == 1);
        CHECK(crep.is_cl);
        CHECK_FALSE(crep.is_degree_one);
    }
    GeneratorSet merged = set_union(cls0, cls1);
    CHECK(merged.members == both.members);
}

TEST_CASE("complement, union and difference carry their parameters") {
    auto sp = get("W:5:2");
    CLContext C(sp);
    GeneratorSet pen = pencil_set(sp, 0);

    GeneratorSet co = complement(pen);
    CHECK(parameter(co) == 8);
    CHECK(is_cl_disjointness(C, co).ok);
    CHECK(is_degree_one(C, co));

    // vertices collinear exactly when the pencils share a generator
    std::size_t collinear = sp->num_points(), skew_vertex = sp->num_points();
    for (std::size_t p = 1; p < sp->num_points(); ++p) {
        bool shares = sp->pencil(0).intersects(sp->pencil(p));
        bool perp = sp->pair_form(sp->point(0), sp->point(p)) == 0;
        CHECK(shares == perp);
        if (perp && collinear == sp->num_points()) collinear = p;
        if (!perp && skew_vertex == sp->num_points()) skew_vertex = p;
    }
    REQUIRE(collinear < sp->num_points());
    REQUIRE(skew_vertex < sp->num_points());

    GeneratorSet two = set_union(pen, pencil_set(sp, skew_vertex));
    CHECK(parameter(two) == 2);
    CHECK(is_degree_one(C, two));
    CHECK(is_cl_disjointness(C, two).ok);
    CHECK_THROWS_AS(set_union(pen, pencil_set(sp, collinear)), std::invalid_argument);

    GeneratorSet full = GeneratorSet::full(sp);
    GeneratorSet diff = set_difference(full, pen);
    CHECK(diff.members == co.members);
    CHECK_THROWS_AS(set_difference(pen, two), std::invalid_argument);
    CHECK_THROWS_AS(set_union(pen, pencil_set(get("W:5:2"), 3)), std::invalid_argument);
}

TEST_CASE("restriction to an embedded hyperbolic quadric preserves degree one") {
    auto sp = get("Q:6:2");
    CLContext C(sp);
    auto sec = geometry::hyperplane_section(sp, geometry::hyperbolic_hyperplanes(*sp, 1)[0]);
    REQUIRE(sec.space);
    auto sub = sec.space;
    CLContext Csub(sub);

    // full set restricts to the full set
    GeneratorSet whole = restrict_to_embedded(GeneratorSet::full(sp), sub);
    CHECK(whole.size() == 30);
    CHECK(parameter(whole) == 5);  // max for Q+(5,2): q^2 + 1

    // vertex on the section: the restriction is that point's pencil below
    const auto& pmap = sub->parent_point_index();
    GeneratorSet pen_on = pencil_set(sp, pmap[0]);
    GeneratorSet ron = restrict_to_embedded(pen_on, sub);
    CHECK(parameter(ron) == 1);
    CHECK(is_degree_one(Csub, ron));
    CHECK(ron.members == sub->pencil(0));

    // vertex off the hyperplane: empty restriction
    Bitset on_section(sp->num_points());
    for (auto p : pmap) on_section.set(p);
    std::size_t off = 0;
    while (on_section.test(off)) ++off;
    GeneratorSet roff = restrict_to_embedded(pencil_set(sp, off), sub);
    CHECK(roff.size() == 0);
    CHECK(is_degree_one(Csub, roff));

    // restriction commutes with complement
    GeneratorSet rco = restrict_to_embedded(complement(pen_on), sub);
    CHECK(rco.members == complement(ron).members);
    CHECK(parameter(rco) == 4);
    CHECK(is_degree_one(Csub, rco));

    CHECK_THROWS_AS(restrict_to_embedded(pen_on, get("Q+:5:2")), std::invalid_argument);
}

TEST_CASE("a ruling of Q+(3,2) is a spread meeting degree one sets in x members") {
    auto sp = get("Q+:3:2");
    CLContext C(sp);
    GeneratorSet ruling = GeneratorSet::empty(sp);
    for (std::uint32_t g = 0; g < C.S.n; ++g)
        if (C.S.rel(g, 0) % 2 == 0) ruling.members.set(g);
    CHECK(ruling.size() == 3);
    CHECK(is_spread(ruling));

    CHECK(spread_intersection_check(C, pencil_set(sp, 0), ruling));
    CHECK(spread_intersection_check(C, GeneratorSet::full(sp), ruling));
    CHECK(spread_intersection_check(C, GeneratorSet::empty(sp), ruling));

    GeneratorSet not_spread = GeneratorSet::of(sp, {0, 1, 2});
    CHECK_FALSE(is_spread(not_spread));
    CHECK_THROWS_AS(spread_intersection_check(C, pencil_set(sp, 0), not_spread),
                    std::invalid_argument);
}

TEST_CASE("rank-3 skew counts match the closed forms") {
    auto sp = get("W:5:2");
    CLContext C(sp);

    GeneratorSet pen = pencil_set(sp, 0);
    SkewCountReport r1 = s1_s2_d2(C, pen);
    CHECK(r1.s1 == 15);
    CHECK(r1.s1_ok);
    CHECK_FALSE(r1.has_skew_pair);  // all members share the vertex

    std::size_t v = 1;
    while (sp->pair_form(sp->point(0), sp->point(v)) == 0) ++v;
    GeneratorSet two = set_union(pen, pencil_set(sp, v));
    SkewCountReport r2 = s1_s2_d2(C, two);
    CHECK(r2.x == 2);
    CHECK(r2.s1 == 22);
    CHECK(r2.d2 == 0);
    CHECK(r2.s2 == 14);
    CHECK(r2.has_skew_pair);
    CHECK(r2.s1_ok);
    CHECK(r2.s2_ok);
    CHECK(r2.d2_ok);

    SkewCountReport r9 = s1_s2_d2(C, GeneratorSet::full(sp));
    CHECK(r9.s1 == 71);
    CHECK(r9.d2 == 28);
    CHECK(r9.s2 == 35);
    CHECK(r9.s1_ok);
    CHECK(r9.s2_ok);
    CHECK(r9.d2_ok);

    auto q62 = get("Q:6:2");
    CLContext C62(q62);
    auto sec = geometry::hyperplane_section(q62, geometry::hyperbolic_hyperplanes(*q62, 1)[0]);
    SkewCountReport rh = s1_s2_d2(C62, GeneratorSet::of(q62, sec.contained_generators));
    CHECK(rh.x == 2);
    CHECK(rh.s1_ok);
    CHECK(rh.s2_ok);
    CHECK(rh.d2_ok);

    CLContext C32(get("W:3:2"));
    CHECK_THROWS_AS(s1_s2_d2(C32, GeneratorSet::full(C32.S.space)), std::invalid_argument);
}

TEST_CASE("skew bound and corollary range") {
    CHECK(skew_bound(3, 2, 2));        // 81 > 80
    CHECK_FALSE(skew_bound(3, 2, 1));  // 80 > 80 fails
    CHECK_FALSE(skew_bound(2, 2, 2));
    CHECK_THROWS_AS(skew_bound(2, BigInt(2), -1), std::invalid_argument);

    CHECK_FALSE(in_corollary_range(2, 1));  // below the x >= 2 leg
    CHECK_FALSE(in_corollary_range(2, 2));  // threshold is exactly 3/2
    CHECK(in_corollary_range(3, 2));        // threshold just above 2.02
    CHECK_FALSE(in_corollary_range(3, 3));
    CHECK(in_corollary_range(4, 2));
    CHECK_FALSE(in_corollary_range(4, 3));
    CHECK(in_corollary_range(9, 4));  // threshold near 4.52
    CHECK_FALSE(in_corollary_range(9, 5));
}

TEST_CASE("the two degree-one routes agree across random sets") {
    std::mt19937 rng(415263);
    for (const char* sh : {"W:3:2", "Q+:5:2", "Q-:5:2"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        CLContext C(sp);
        std::uint32_t n = static_cast<std::uint32_t>(sp->num_generators());
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t k = 1 + rng() % (n - 1);
            GeneratorSet L = GeneratorSet::of(sp, sample(rng, n, k));
            bool r1 = degree_one_incidence(C, L);
            bool r2 = degree_one_eigenvalue(C, L);
            CHECK(r1 == r2);
            if (r1) CHECK(is_cl_disjointness(C, L).ok);  // type I spaces here
        }
    }
}

TEST_CASE("type I: Cameron-Liebler equals degree one on a full small scan") {
    auto sp = get("W:3:2");
    CLContext C(sp);
    int hits = 0;
    for (std::uint32_t a = 0; a < 15; ++a)
        for (std::uint32_t b = a + 1; b < 15; ++b)
            for (std::uint32_t c = b + 1; c < 15; ++c) {
                GeneratorSet L = GeneratorSet::of(sp, {a, b, c});
                bool cl = is_cl_disjointness(C, L).ok;
                bool d1 = is_degree_one(C, L);
                CHECK(cl == d1);
                if (cl) ++hits;
            }
    CHECK(hits == 15);  // exactly the point-pencils
}

TEST_CASE("one class of Q+(7,2): the restricted theorem in both directions") {
    auto sp = get("Q+:7:2");
    CLContext C(sp);
    auto O = scheme::restrict_one_class(C.S);
    REQUIRE(O.n == 135);

    auto restrict_members = [&](const Bitset& parent_members) {
        Bitset r(O.n);
        for (std::uint32_t k = 0; k < O.n; ++k)
            if (parent_members.test(O.members[k])) r.set(k);
        return r;
    };

    // a class point-pencil: x = 1, passes the identity and every count
    Bitset pen = restrict_members(sp->pencil(0));
    CHECK(pen.count() == 15);
    CHECK(one_class_parameter(O, pen) == 1);
    CHECK(one_class_is_cl(O, pen));
    for (int i = 1; 2 * i <= C.S.d; ++i) {
        OneClassProfile pc = one_class_profile(O, pen, i);
        CAPTURE(i);
        CHECK(pc.ok);
    }

    // the full class: x = 9
    Bitset full(O.n);
    full = full.complement();
    CHECK(one_class_parameter(O, full) == 9);
    CHECK(one_class_is_cl(O, full));
    for (int i = 1; 2 * i <= C.S.d; ++i) CHECK(one_class_profile(O, full, i).ok);

    // random subsets fail the identity and fail a count; both directions agree
    std::mt19937 rng(907);
    for (int trial = 0; trial < 8; ++trial) {
        Bitset r(O.n);
        for (auto g : sample(rng, O.n, 15)) r.set(g);
        bool cl = one_class_is_cl(O, r);
        bool counts = true;
        for (int i = 1; 2 * i <= C.S.d; ++i) counts = counts && one_class_profile(O, r, i).ok;
        CHECK(cl == counts);
        CHECK_FALSE(cl);
    }

    CHECK_THROWS_AS(one_class_profile(O, pen, 3), std::invalid_argument);
    CHECK_THROWS_AS(one_class_parameter(O, Bitset(7)), std::invalid_argument);
}
