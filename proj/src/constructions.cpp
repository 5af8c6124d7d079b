#include "clpolar/constructions/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace clpolar::constructions {

namespace {

using geometry::Family;

using Clock = std::chrono::steady_clock;

// Same ruling of a hyperbolic quadric: the meet dimension has the parity of
// d - 1, i.e. the relation index is even.
bool same_ruling(const PolarSpace& sp, std::size_t a, std::size_t b) {
    int gap = static_cast<int>(sp.rank()) - 1 - sp.meet_dim(a, b);
    return gap % 2 == 0;
}

GeneratorSet meet_at_least(const std::shared_ptr<const PolarSpace>& sp, std::size_t base,
                           int min_dim) {
    GeneratorSet L = GeneratorSet::empty(sp);
    for (std::size_t g = 0; g < sp->num_generators(); ++g)
        if (sp->meet_dim(g, base) >= min_dim) L.members.set(static_cast<std::uint32_t>(g));
    return L;
}

// Non-collinear in the polar space: the joining line is not totally
// isotropic, which for points of the space comes down to the pairing.
bool collinear(const PolarSpace& sp, std::size_t a, std::size_t b) {
    return sp.pair_form(sp.point(a), sp.point(b)) == 0;
}

// Lexicographically least extension of `chosen` to a partial ovoid of size x
// whose pencils avoid `blocked`. Plain DFS over ascending point indices.
bool extend_ovoid(const PolarSpace& sp, const Bitset& blocked, std::vector<std::size_t>& chosen,
                  std::size_t want, Clock::time_point deadline) {
    if (chosen.size() == want) return true;
    std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
    for (std::size_t p = start; p < sp.num_points(); ++p) {
        if (Clock::now() > deadline) return false;
        if (blocked.intersects(sp.pencil(p))) continue;
        bool ok = true;
        for (std::size_t c : chosen)
            if (collinear(sp, c, p)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(p);
        if (extend_ovoid(sp, blocked, chosen, want, deadline)) return true;
        chosen.pop_back();
    }
    return false;
}

GeneratorSet union_of_pencils(const std::shared_ptr<const PolarSpace>& sp,
                              const std::vector<std::size_t>& vertices) {
    GeneratorSet out = GeneratorSet::empty(sp);
    for (std::size_t v : vertices) out = clsets::set_union(out, point_pencil(sp, v));
    return out;
}

}  // namespace

GeneratorSet point_pencil(const std::shared_ptr<const PolarSpace>& sp, std::size_t point) {
    if (!sp) throw std::invalid_argument("point_pencil: null space");
    if (point >= sp->num_points()) throw std::invalid_argument("point_pencil: no such point");
    GeneratorSet L = GeneratorSet::empty(sp);
    L.members = sp->pencil(point);
    return L;
}

GeneratorSet base_generator_set(const std::shared_ptr<const PolarSpace>& sp, std::size_t base) {
    if (!sp || sp->rank() != 3)
        throw std::invalid_argument("base_generator_set: needs a rank-3 space");
    if (base >= sp->num_generators())
        throw std::invalid_argument("base_generator_set: no such generator");
    return meet_at_least(sp, base, 1);
}

GeneratorSet base_solid_set(const std::shared_ptr<const PolarSpace>& sp, std::size_t base) {
    if (!sp || sp->rank() != 4)
        throw std::invalid_argument("base_solid_set: needs a rank-4 space");
    if (base >= sp->num_generators())
        throw std::invalid_argument("base_solid_set: no such generator");
    return meet_at_least(sp, base, 2);
}

std::vector<HyperbolicEmbedding> hyperbolic_embeddings(
    const std::shared_ptr<const PolarSpace>& sp, std::size_t count) {
    if (!sp) throw std::invalid_argument("hyperbolic_embeddings: null space");
    Family fam = sp->kind().family;
    if (fam != Family::ParabolicQuadric && fam != Family::Symplectic)
        throw std::invalid_argument(
            "hyperbolic_embeddings: only parabolic and symplectic spaces carry them");
    if (sp->rank() % 2 == 0)
        throw std::invalid_argument("hyperbolic_embeddings: rank must be odd");
    if (fam == Family::Symplectic && sp->q() % 2 != 0)
        throw std::invalid_argument(
            "hyperbolic_embeddings: a symplectic space over an odd field has none");

    // Section finding lives on the parabolic quadric; a symplectic space
    // borrows its parent's sections through the nucleus projection.
    std::shared_ptr<const PolarSpace> parabolic = sp;
    const std::vector<std::uint32_t>* gmap = nullptr;
    geometry::NucleusProjection np;
    if (fam == Family::Symplectic) {
        parabolic = PolarSpace::build(
            geometry::SpaceKind{Family::ParabolicQuadric, sp->rank(), sp->q()});
        np = geometry::nucleus_projection(parabolic);
        gmap = &np.generator_map;
    }

    std::vector<HyperbolicEmbedding> out;
    for (const auto& h : geometry::hyperbolic_hyperplanes(*parabolic, count)) {
        geometry::Section sec = geometry::hyperplane_section(parabolic, h);
        HyperbolicEmbedding E;
        E.space = sp;
        E.generators = Bitset(sp->num_generators());
        E.cls[0] = Bitset(sp->num_generators());
        E.cls[1] = Bitset(sp->num_generators());
        std::uint32_t g0 = sec.contained_generators.front();
        std::vector<std::uint32_t> mapped;
        for (std::uint32_t g : sec.contained_generators) {
            int c = same_ruling(*parabolic, g, g0) ? 0 : 1;
            std::uint32_t amb = gmap ? (*gmap)[g] : g;
            E.generators.set(amb);
            E.cls[c].set(amb);
            mapped.push_back(amb);
        }
        // keep the class carrying the lowest ambient index in slot 0
        std::uint32_t least = *std::min_element(mapped.begin(), mapped.end());
        if (!E.cls[0].test(least)) std::swap(E.cls[0], E.cls[1]);
        out.push_back(std::move(E));
    }
    return out;
}

GeneratorSet hyperbolic_class(const HyperbolicEmbedding& H, int cls) {
    if (cls != 0 && cls != 1) throw std::invalid_argument("hyperbolic_class: class is 0 or 1");
    GeneratorSet L = GeneratorSet::empty(H.space);
    L.members = H.cls[cls];
    return L;
}

GeneratorSet embedded_hyperbolic(const HyperbolicEmbedding& H) {
    GeneratorSet L = GeneratorSet::empty(H.space);
    L.members = H.generators;
    return L;
}

std::optional<GeneratorSet> disjoint_pencil_family(const std::shared_ptr<const PolarSpace>& sp,
                                                   long x, std::chrono::milliseconds budget) {
    if (!sp) throw std::invalid_argument("disjoint_pencil_family: null space");
    if (x < 0) throw std::invalid_argument("disjoint_pencil_family: negative parameter");
    auto deadline = Clock::now() + budget;
    std::vector<std::size_t> chosen;
    Bitset blocked(sp->num_generators());
    if (!extend_ovoid(*sp, blocked, chosen, static_cast<std::size_t>(x), deadline))
        return std::nullopt;
    // set_union re-verifies pairwise disjointness while assembling
    return union_of_pencils(sp, chosen);
}

std::optional<GeneratorSet> classification_witness(const std::shared_ptr<const PolarSpace>& sp,
                                                   long x, long alpha,
                                                   std::chrono::milliseconds budget) {
    if (!sp) throw std::invalid_argument("classification_witness: null space");
    Family fam = sp->kind().family;
    if (sp->rank() != 3 || (fam != Family::ParabolicQuadric && fam != Family::Symplectic))
        throw std::invalid_argument(
            "classification_witness: needs a rank-3 parabolic or symplectic space");
    if (alpha < 0 || x < 0 || 2 * alpha > x)
        throw std::invalid_argument("classification_witness: need 0 <= 2*alpha <= x");
    if (fam == Family::Symplectic && sp->q() % 2 != 0 && alpha > 0)
        return std::nullopt;  // no embedded hyperbolic quadric exists at all

    auto deadline = Clock::now() + budget;

    // Choose alpha pairwise generator-disjoint embeddings, lexicographically
    // first among the candidate sections.
    GeneratorSet acc = GeneratorSet::empty(sp);
    if (alpha > 0) {
        std::size_t want_candidates = alpha == 1 ? 1 : 64;
        auto cands = hyperbolic_embeddings(sp, want_candidates);
        std::vector<std::size_t> pick;
        auto extend = [&](auto&& self, std::size_t start) -> bool {
            if (pick.size() == static_cast<std::size_t>(alpha)) return true;
            for (std::size_t i = start; i < cands.size(); ++i) {
                if (Clock::now() > deadline) return false;
                bool disjoint = true;
                for (std::size_t j : pick)
                    if (cands[j].generators.intersects(cands[i].generators)) {
                        disjoint = false;
                        break;
                    }
                if (!disjoint) continue;
                pick.push_back(i);
                if (self(self, i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (!extend(extend, 0)) return std::nullopt;
        for (std::size_t i : pick) acc = clsets::set_union(acc, embedded_hyperbolic(cands[i]));
    }

    // Pencils avoiding everything chosen so far; a blocked pencil is exactly
    // one whose vertex lies on a chosen quadric.
    std::vector<std::size_t> vertices;
    if (!extend_ovoid(*sp, acc.members, vertices, static_cast<std::size_t>(x - 2 * alpha),
                      deadline))
        return std::nullopt;
    for (std::size_t v : vertices) acc = clsets::set_union(acc, point_pencil(sp, v));

    if (clsets::parameter(acc) != x)
        throw std::logic_error("classification_witness: assembled parameter is off");
    return acc;
}

std::optional<GeneratorSet> spread_search(const std::shared_ptr<const PolarSpace>& sp,
                                          std::chrono::milliseconds budget) {
    if (!sp) throw std::invalid_argument("spread_search: null space");
    auto deadline = Clock::now() + budget;
    std::size_t npts = sp->num_points();

    Bitset covered(npts);
    std::vector<std::uint32_t> used;
    long nodes = 0;
    bool timed_out = false;

    auto dfs = [&](auto&& self) -> bool {
        if (covered.count() == npts) return true;
        if (++nodes % 1024 == 0 && Clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        std::size_t p = 0;
        while (covered.test(p)) ++p;
        for (std::uint32_t g : sp->pencil(p).to_indices()) {
            const Bitset& pts = sp->generator(g).points;
            if (covered.intersects(pts)) continue;
            Bitset before = covered;
            covered |= pts;
            used.push_back(g);
            if (self(self)) return true;
            if (timed_out) return false;
            used.pop_back();
            covered = before;
        }
        return false;
    };

    if (!dfs(dfs)) return std::nullopt;
    GeneratorSet S = GeneratorSet::of(sp, used);
    if (!clsets::is_spread(S)) throw std::logic_error("spread_search: unverified result");
    return S;
}

}  // namespace clpolar::constructions
