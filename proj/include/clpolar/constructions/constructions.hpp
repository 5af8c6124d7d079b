#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <vector>

#include "clpolar/clsets/clsets.hpp"

namespace clpolar::constructions {

using clsets::GeneratorSet;
using geometry::PolarSpace;

// All generators through an isotropic point. Parameter 1.
GeneratorSet point_pencil(const std::shared_ptr<const PolarSpace>& sp, std::size_t point);

// Rank 3 only: every plane meeting the base plane in at least a line, the
// base included. Cameron-Liebler with parameter 1 but not degree one.
GeneratorSet base_generator_set(const std::shared_ptr<const PolarSpace>& sp, std::size_t base);

// Rank 4 analogue (solids meeting a base solid in at least a plane). Kept for
// observation in hyperbolic rank-4 spaces; no membership status is asserted.
GeneratorSet base_solid_set(const std::shared_ptr<const PolarSpace>& sp, std::size_t base);

// A nonsingular hyperbolic quadric of full rank sitting inside the space,
// carried as ambient generator indices split into the two parity classes.
// cls[0] holds the lowest-index generator.
struct HyperbolicEmbedding {
    std::shared_ptr<const PolarSpace> space;
    Bitset generators;
    Bitset cls[2];
};

// Lexicographically first embeddings, at most `count`. Parabolic spaces take
// hyperplane sections directly; symplectic spaces with q even reuse the same
// section finder on the parabolic parent and push the result through the
// nucleus projection. Throws where no embedded hyperbolic quadric exists
// (wrong family, even rank, or a symplectic space over an odd field).
std::vector<HyperbolicEmbedding> hyperbolic_embeddings(
    const std::shared_ptr<const PolarSpace>& sp, std::size_t count);

// One parity class: Cameron-Liebler but not degree one. `cls` is 0 or 1.
GeneratorSet hyperbolic_class(const HyperbolicEmbedding& H, int cls);

// Both classes: degree one with parameter 2.
GeneratorSet embedded_hyperbolic(const HyperbolicEmbedding& H);

// Union of x pencils whose vertices form a partial ovoid (pairwise
// non-collinear points), found by lexicographic backtracking. Degree one with
// parameter x when present; absent when no such vertex set is found in time.
std::optional<GeneratorSet> disjoint_pencil_family(
    const std::shared_ptr<const PolarSpace>& sp, long x,
    std::chrono::milliseconds budget = std::chrono::seconds(10));

// alpha pairwise disjoint embedded hyperbolic quadrics plus x - 2*alpha
// pencils, all components pairwise generator-disjoint. Rank-3 parabolic or
// symplectic spaces only; alpha > 0 is never available in a symplectic space
// over an odd field, reported as absence.
std::optional<GeneratorSet> classification_witness(
    const std::shared_ptr<const PolarSpace>& sp, long x, long alpha,
    std::chrono::milliseconds budget = std::chrono::seconds(10));

// Exact-cover backtracking for a spread: every point on exactly one member.
// Deterministic (always branches on the lowest uncovered point, tries
// generators in index order), verified before return; absent on timeout.
std::optional<GeneratorSet> spread_search(
    const std::shared_ptr<const PolarSpace>& sp,
    std::chrono::milliseconds budget = std::chrono::seconds(10));

}  // namespace clpolar::constructions
