#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "clpolar/algebra/qfunc.hpp"
#include "clpolar/geometry/gf_linalg.hpp"
#include "clpolar/geometry/space_kind.hpp"
#include "clpolar/support/bitset.hpp"

namespace clpolar::geometry {

using algebra::BigInt;

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The sesquilinear data of a space. Quadrics carry the quadratic form (upper
// triangular coefficients) plus the Gram matrix of its polar form; symplectic
// spaces carry only the Gram matrix; hermitian spaces pair via conjugation.
struct FormData {
    bool hermitian = false;
    bool has_quadratic = false;
    GFMat quad; // Q(x) = sum_{i<=j} quad[i][j] x_i x_j
    GFMat gram; // bilinear pair B(x,y) = x G y^T (unused for hermitian)
};

struct Generator {
    GFMat basis;   // canonical RREF rows, rank() x (n+1)
    Bitset points; // over the space's point indices
};

// A finite classical polar space, fully enumerated: the ordered isotropic
// point list, the ordered generator list, and the point-generator incidence.
// Point order is lexicographic over normalized coordinate vectors; generator
// order is lexicographic over flattened canonical RREF matrices.
class PolarSpace {
public:
    static constexpr std::size_t default_generator_cap = 100000;

    static std::shared_ptr<const PolarSpace> build(SpaceKind kind,
                                                   std::size_t generator_cap = default_generator_cap);

    SpaceKind kind() const { return kind_; }
    int rank() const { return kind_.d; }
    int q() const { return kind_.q; }
    HalfInt e() const { return param_e(kind_.family); }
    int ambient() const { return n_; }
    SchemeType type() const { return classify_type(kind_); }
    const FiniteField& field() const { return *F_; }
    const FormData& form() const { return form_; }

    std::size_t num_points() const { return points_.size(); }
    std::size_t num_generators() const { return gens_.size(); }
    const Vec& point(std::size_t i) const { return points_[i]; }
    const Generator& generator(std::size_t i) const { return gens_[i]; }
    // generators through the point, as a bitset over generator indices
    const Bitset& pencil(std::size_t point_idx) const { return pencils_[point_idx]; }

    long point_index(Vec v) const;              // -1 when not a point of the space
    long generator_index(const GFMat& basis) const; // -1 when absent

    int pair_form(const Vec& x, const Vec& y) const;
    int quad_form(const Vec& x) const; // throws std::logic_error on non-quadrics
    bool is_singular(const Vec& x) const;
    // whether span(rows) is totally isotropic (rows need not be independent)
    bool is_totally_isotropic(const GFMat& rows) const;

    GFMat perp(const GFMat& subspace_basis) const;

    bool has_nucleus() const;
    Vec nucleus() const; // throws when has_nucleus() is false

    // projective dimension of generator(g1) meet generator(g2); -1 = disjoint
    int meet_dim(std::size_t g1, std::size_t g2) const;

    // embedded spaces remember their host
    bool is_embedded() const { return parent_ != nullptr; }
    std::shared_ptr<const PolarSpace> parent() const { return parent_; }
    const std::vector<std::uint32_t>& parent_point_index() const { return parent_points_; }
    const std::vector<std::uint32_t>& parent_generator_index() const { return parent_gens_; }

private:
    PolarSpace() = default;
    void init_forms();
    void enumerate_points();
    void enumerate_generators(std::size_t cap);
    void finalize(bool check_counts);

    friend struct SectionBuilder;

    SpaceKind kind_{};
    int n_ = 0; // ambient projective dimension of the coordinate frame
    const FiniteField* F_ = nullptr;
    FormData form_;
    std::vector<Vec> points_;
    std::unordered_map<std::uint64_t, std::uint32_t> point_idx_;
    std::vector<Generator> gens_;
    std::unordered_map<std::uint64_t, std::uint32_t> gen_idx_; // hash of flattened basis
    std::vector<Bitset> pencils_;
    std::vector<std::size_t> dim_to_count_; // (q^k - 1)/(q - 1)

    std::shared_ptr<const PolarSpace> parent_;
    std::vector<std::uint32_t> parent_points_;
    std::vector<std::uint32_t> parent_gens_;
};

// Normalized representatives of PG(n,q) in lexicographic coordinate order.
std::vector<Vec> projective_points(int n, int q);

enum class SectionType { Hyperbolic, Elliptic, Cone };

struct Section {
    SectionType type = SectionType::Cone;
    Vec hyperplane;
    std::size_t point_count = 0;
    // parent generators lying inside the hyperplane (hyperbolic sections only)
    std::vector<std::uint32_t> contained_generators;
    // full polar space view of a hyperbolic section, embedded in the parent
    std::shared_ptr<const PolarSpace> space;
    // largest projective dimension of a totally isotropic subspace inside the
    // section, computed for elliptic sections (rank drop witness)
    int max_isotropic_dim = -2;
};

// Section of a parabolic quadric by the hyperplane with the given functional
// coefficients. Throws std::invalid_argument for other space kinds.
Section hyperplane_section(const std::shared_ptr<const PolarSpace>& parent, const Vec& hyperplane);

// Lexicographically first hyperplanes whose section is nonsingular hyperbolic.
std::vector<Vec> hyperbolic_hyperplanes(const PolarSpace& parent, std::size_t count);

struct NucleusProjection {
    std::shared_ptr<const PolarSpace> symplectic;    // canonical W(2d-1,q)
    std::vector<std::uint32_t> point_map;            // parent point -> W point, bijective
    std::vector<std::uint32_t> generator_map;        // parent generator -> W generator, bijective
};

// Projection of Q(2d,q), q even, from its nucleus onto the hyperplane x_0 = 0.
NucleusProjection nucleus_projection(const std::shared_ptr<const PolarSpace>& parabolic);

// Largest projective dimension of a totally isotropic subspace spanned inside
// the given point subset (indices into the space's point list).
int max_isotropic_dim_within(const PolarSpace& space, const std::vector<std::uint32_t>& point_subset);

} // namespace clpolar::geometry
