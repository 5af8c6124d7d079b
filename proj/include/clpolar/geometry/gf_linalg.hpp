#pragma once

#include <cstdint>
#include <vector>

#include "clpolar/algebra/gf.hpp"

namespace clpolar::geometry {

using algebra::FiniteField;
using Vec = std::vector<std::uint8_t>; // coordinates, entries 0..q-1

// Row-major matrix over GF(q) for the small ambient-dimension work.
struct GFMat {
    std::size_t cols = 0;
    std::vector<Vec> rows;
};

// Reduced row echelon form in place (unit pivots, zeros above and below);
// zero rows are erased. Returns pivot columns.
std::vector<std::size_t> gf_rref(GFMat& m, const FiniteField& F);

std::size_t gf_rank(GFMat m, const FiniteField& F);

// Basis of the right kernel, one RREF-style row per free column.
std::vector<Vec> gf_kernel(const GFMat& m, const FiniteField& F);

// First nonzero coordinate scaled to 1; zero vector stays zero.
void normalize_point(Vec& v, const FiniteField& F);

std::uint64_t encode_vec(const Vec& v, int q);

// v + c*w componentwise
Vec add_scaled(const Vec& v, const Vec& w, int c, const FiniteField& F);

} // namespace clpolar::geometry
