#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "clpolar/geometry/polar_space.hpp"

using namespace clpolar;
using namespace clpolar::geometry;
using clpolar::algebra::BigInt;
using clpolar::algebra::HalfInt;
using clpolar::algebra::q_pow;

namespace {

struct Expected {
    const char* shorthand;
    std::size_t points;
    std::size_t generators;
};

// point and generator counts worked out from the standard formulas by hand
const Expected desk_spaces[] = {
    {"W:3:2", 15, 15},    {"W:3:3", 40, 40},   {"W:5:2", 63, 135},
    {"Q:4:2", 15, 15},    {"Q:4:3", 40, 40},   {"Q:6:2", 63, 135},
    {"Q+:3:2", 9, 6},     {"Q+:5:2", 35, 30},  {"Q+:7:2", 135, 270},
    {"Q-:5:2", 27, 45},   {"H:3:4", 45, 27},   {"H:4:4", 165, 297},
};

std::shared_ptr<const PolarSpace> get(const char* sh) {
    return PolarSpace::build(parse_shorthand(sh));
}

} // namespace

TEST_CASE("projective point enumeration") {
    for (int q : {2, 3, 4}) {
        auto pts = projective_points(2, q);
        CHECK(pts.size() == static_cast<std::size_t>(q * q + q + 1));
        const auto& F = algebra::FiniteField::get(q);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Vec v = pts[i];
            normalize_point(v, F);
            CHECK(v == pts[i]); // already normalized
            if (i + 1 < pts.size()) CHECK(pts[i] < pts[i + 1]); // strict lex order
        }
    }
    CHECK(projective_points(0, 5).size() == 1);
}

TEST_CASE("desk space point and generator counts") {
    for (const auto& ex : desk_spaces) {
        CAPTURE(ex.shorthand);
        auto sp = get(ex.shorthand);
        CHECK(sp->num_points() == ex.points);
        CHECK(sp->num_generators() == ex.generators);
    }
}

TEST_CASE("rank three spaces over GF(3)") {
    for (const char* sh : {"Q:6:3", "W:5:3"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        CHECK(sp->num_points() == 364);
        CHECK(sp->num_generators() == 1120);
    }
}

TEST_CASE("generators are canonical and totally isotropic") {
    for (const char* sh : {"W:3:3", "Q+:5:2", "Q-:5:2", "H:3:4", "Q:4:2"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        BigInt pg = q_pow(sp->q(), HalfInt(sp->rank())) - 1;
        const std::size_t per_gen = pg.get_ui() / static_cast<unsigned long>(sp->q() - 1);
        std::set<std::vector<std::uint8_t>> flat;
        for (std::size_t g = 0; g < sp->num_generators(); ++g) {
            const auto& gen = sp->generator(g);
            CHECK(gen.basis.rows.size() == static_cast<std::size_t>(sp->rank()));
            CHECK(sp->is_totally_isotropic(gen.basis));
            CHECK(gen.points.count() == per_gen);
            CHECK(sp->generator_index(gen.basis) == static_cast<long>(g));
            std::vector<std::uint8_t> f;
            for (const auto& r : gen.basis.rows) f.insert(f.end(), r.begin(), r.end());
            flat.insert(f);
            // every flagged point really lies on the generator
            gen.points.for_each([&](std::size_t p) {
                GFMat ext = gen.basis;
                ext.rows.push_back(sp->point(p));
                CHECK(gf_rank(ext, sp->field()) == static_cast<std::size_t>(sp->rank()));
            });
        }
        CHECK(flat.size() == sp->num_generators()); // all distinct
    }
}

TEST_CASE("point index roundtrip and normalization") {
    auto sp = get("W:3:3");
    for (std::size_t p = 0; p < sp->num_points(); ++p) {
        Vec v = sp->point(p);
        CHECK(sp->point_index(v) == static_cast<long>(p));
        // any scalar multiple finds the same point
        Vec w = v;
        for (auto& x : w) x = static_cast<std::uint8_t>(sp->field().mul(x, 2));
        CHECK(sp->point_index(w) == static_cast<long>(p));
    }
    CHECK(sp->point_index(Vec{1, 0, 0, 0}) >= 0);
    // a nonisotropic or absent vector reports -1
    auto qp = get("Q:4:2");
    CHECK(qp->point_index(Vec{1, 0, 0, 0, 0}) == -1); // Q(x) = 1
}

TEST_CASE("pencil sizes satisfy the residual count") {
    for (const char* sh : {"W:3:2", "W:5:2", "Q+:5:2", "Q-:5:2", "H:3:4", "Q:6:2"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        BigInt expect = 1;
        for (int i = 0; i < sp->rank() - 1; ++i)
            expect *= q_pow(sp->q(), sp->e() + i) + 1;
        for (std::size_t p = 0; p < sp->num_points(); ++p)
            CHECK(BigInt(static_cast<unsigned long>(sp->pencil(p).count())) == expect);
    }
}

TEST_CASE("meet dimensions") {
    auto sp = get("Q+:5:2");
    // same-class generators of a rank 3 hyperbolic quadric meet in even
    // projective dimension, opposite classes in odd or empty
    std::size_t by_dim[4] = {0, 0, 0, 0}; // index = meet dim + 1
    for (std::size_t g = 0; g < sp->num_generators(); ++g) {
        CHECK(sp->meet_dim(g, g) == sp->rank() - 1);
        for (std::size_t h = 0; h < sp->num_generators(); ++h) {
            int m = sp->meet_dim(g, h);
            CHECK(m == sp->meet_dim(h, g));
            if (g != h) ++by_dim[m + 1];
        }
    }
    // Klein quadric: a plane meets its 14 classmates in a point; across the
    // classes it meets 7 in a line and misses 8
    CHECK(by_dim[3] == 0);         // distinct planes are distinct
    CHECK(by_dim[2] == 30u * 7u);  // line meets
    CHECK(by_dim[1] == 30u * 14u); // point meets
    CHECK(by_dim[0] == 30u * 8u);  // disjoint pairs
}

TEST_CASE("perp operator") {
    for (const char* sh : {"W:3:2", "Q:4:3", "H:3:4", "Q+:5:2"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        const auto& g = sp->generator(0);
        GFMat pp = sp->perp(g.basis);
        CHECK(pp.rows.size() == static_cast<std::size_t>(sp->ambient() + 1 - sp->rank()));
        // a totally isotropic space sits inside its own perp
        for (const auto& row : g.basis.rows) {
            GFMat ext = pp;
            ext.rows.push_back(row);
            CHECK(gf_rank(ext, sp->field()) == pp.rows.size());
        }
        // perp of the whole space is zero
        GFMat full;
        full.cols = static_cast<std::size_t>(sp->ambient()) + 1;
        for (std::size_t i = 0; i < full.cols; ++i) {
            Vec e(full.cols, 0);
            e[i] = 1;
            full.rows.push_back(e);
        }
        if (!sp->has_nucleus())
            CHECK(sp->perp(full).rows.empty());
    }
}

TEST_CASE("nucleus of even-order parabolic quadrics") {
    auto q42 = get("Q:4:2");
    REQUIRE(q42->has_nucleus());
    CHECK(q42->nucleus() == Vec{1, 0, 0, 0, 0});
    auto q62 = get("Q:6:2");
    CHECK(q62->nucleus() == Vec{1, 0, 0, 0, 0, 0, 0});
    CHECK(!get("Q:4:3")->has_nucleus());
    CHECK(!get("W:3:2")->has_nucleus());
    CHECK_THROWS_AS(get("Q:4:3")->nucleus(), std::logic_error);
}

TEST_CASE("generator capacity guard") {
    CHECK_THROWS_AS(PolarSpace::build(parse_shorthand("W:3:2"), 10), CapacityError);
}

TEST_CASE("hyperplane sections of Q(4,2)") {
    auto sp = get("Q:4:2");
    std::size_t hyper = 0, ellip = 0, cone = 0;
    for (const auto& h : projective_points(sp->ambient(), sp->q())) {
        auto sec = hyperplane_section(sp, h);
        switch (sec.type) {
            case SectionType::Hyperbolic: {
                ++hyper;
                REQUIRE(sec.space);
                CHECK(sec.point_count == 9);
                CHECK(sec.space->num_points() == 9);
                CHECK(sec.space->num_generators() == 6);
                CHECK(sec.space->is_embedded());
                CHECK(sec.space->parent() == sp);
                break;
            }
            case SectionType::Elliptic:
                ++ellip;
                CHECK(sec.point_count == 5);
                CHECK(sec.max_isotropic_dim == 0);
                break;
            case SectionType::Cone:
                ++cone;
                CHECK(sec.point_count == 7); // point plus q lines of a conic cone
                break;
        }
    }
    // PG(4,2) has 31 hyperplanes: 15 tangent, 10 hyperbolic, 6 elliptic
    CHECK(cone == 15);
    CHECK(hyper == 10);
    CHECK(ellip == 6);
}

TEST_CASE("hyperplane sections of Q(6,2)") {
    auto sp = get("Q:6:2");
    auto hs = hyperbolic_hyperplanes(*sp, 2);
    REQUIRE(hs.size() == 2);
    for (const auto& h : hs) {
        auto sec = hyperplane_section(sp, h);
        REQUIRE(sec.type == SectionType::Hyperbolic);
        REQUIRE(sec.space);
        CHECK(sec.space->num_points() == 35);
        CHECK(sec.space->num_generators() == 30);
        CHECK(sec.space->kind() == SpaceKind{Family::HyperbolicQuadric, 3, 2});
        // embedded indices agree with the parent's geometry
        const auto& pmap = sec.space->parent_point_index();
        for (std::size_t p = 0; p < sec.space->num_points(); ++p)
            CHECK(sec.space->point(p) == sp->point(pmap[p]));
        const auto& gmap = sec.space->parent_generator_index();
        for (std::size_t g = 0; g < sec.space->num_generators(); ++g) {
            std::size_t npts = 0;
            sp->generator(gmap[g]).points.for_each([&](std::size_t) { ++npts; });
            CHECK(npts == sec.space->generator(g).points.count());
            for (std::size_t h2 = 0; h2 < sec.space->num_generators(); ++h2)
                CHECK(sec.space->meet_dim(g, h2) == sp->meet_dim(gmap[g], gmap[h2]));
        }
    }
    // an elliptic and a cone section, located by scanning
    bool saw_elliptic = false, saw_cone = false;
    for (const auto& h : projective_points(sp->ambient(), sp->q())) {
        auto sec = hyperplane_section(sp, h);
        if (sec.type == SectionType::Elliptic && !saw_elliptic) {
            saw_elliptic = true;
            CHECK(sec.point_count == 27);
            CHECK(sec.max_isotropic_dim == 1);
        }
        if (sec.type == SectionType::Cone && !saw_cone) {
            saw_cone = true;
            CHECK(sec.point_count == 31); // vertex plus q copies of Q(4,2)
        }
        if (saw_elliptic && saw_cone) break;
    }
    CHECK(saw_elliptic);
    CHECK(saw_cone);
    CHECK_THROWS_AS(hyperplane_section(get("W:3:2"), Vec{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("nucleus projection identifies Q(2d,q) with W(2d-1,q), q even") {
    for (const char* sh : {"Q:4:2", "Q:6:2"}) {
        CAPTURE(sh);
        auto sp = get(sh);
        auto np = nucleus_projection(sp);
        CHECK(np.symplectic->num_points() == sp->num_points());
        CHECK(np.symplectic->num_generators() == sp->num_generators());
        // incidence and meets carry over
        for (std::size_t g = 0; g < sp->num_generators(); ++g)
            for (std::size_t h = g; h < sp->num_generators(); ++h)
                CHECK(sp->meet_dim(g, h) ==
                      np.symplectic->meet_dim(np.generator_map[g], np.generator_map[h]));
        for (std::size_t p = 0; p < sp->num_points(); ++p) {
            auto pen = sp->pencil(p).to_indices();
            for (auto g : pen) {
                CHECK(np.symplectic->generator(np.generator_map[g])
                          .points.test(np.point_map[p]));
            }
        }
    }
    CHECK_THROWS_AS(nucleus_projection(get("Q:4:3")), std::invalid_argument);
}

TEST_CASE("maximal isotropic dimension within a point set") {
    auto sp = get("W:3:2");
    std::vector<std::uint32_t> all;
    for (std::uint32_t p = 0; p < sp->num_points(); ++p) all.push_back(p);
    CHECK(max_isotropic_dim_within(*sp, all) == 1);
    CHECK(max_isotropic_dim_within(*sp, {0}) == 0);
    CHECK(max_isotropic_dim_within(*sp, {}) == -1);
}

TEST_CASE("shorthand parsing") {
    CHECK(parse_shorthand("W:5:2") == SpaceKind{Family::Symplectic, 3, 2});
    CHECK(parse_shorthand("Q+:7:2") == SpaceKind{Family::HyperbolicQuadric, 4, 2});
    CHECK(parse_shorthand("Q-:5:3") == SpaceKind{Family::EllipticQuadric, 2, 3});
    CHECK(parse_shorthand("Q:6:3") == SpaceKind{Family::ParabolicQuadric, 3, 3});
    CHECK(parse_shorthand("H:3:4") == SpaceKind{Family::HermitianOdd, 2, 4});
    CHECK(parse_shorthand("H:4:9") == SpaceKind{Family::HermitianEven, 2, 9});
    CHECK(to_shorthand(parse_shorthand("Q+:5:2")) == "Q+:5:2");
    CHECK_THROWS_AS(parse_shorthand("W:4:2"), std::invalid_argument);  // even ambient
    CHECK_THROWS_AS(parse_shorthand("H:3:3"), std::invalid_argument);  // q not square
    CHECK_THROWS_AS(parse_shorthand("X:3:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shorthand("W:3:6"), std::invalid_argument);
    CHECK(label(SpaceKind{Family::ParabolicQuadric, 3, 3}) == "Q(6,3)");
}
