#pragma once

#include <cstddef>
#include <vector>

#include "clpolar/algebra/qfunc.hpp"

namespace clpolar::algebra {

// Dense matrix over Q with exact entries. No floating point anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix transposed() const;

    // Reduced row echelon form in place; returns the pivot columns in order.
    // Idempotent: rref(rref(M)) == rref(M).
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Basis of { x : M x = 0 }, one vector per non-pivot column, each scaled
    // to integer entries with content 1.
    std::vector<std::vector<Rational>> kernel_basis() const;

    bool in_column_space(const std::vector<Rational>& v) const;

    bool operator==(const RationalMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Row-list integer matrix used by the elimination-heavy paths. Rows are kept
// integral and divided by their content after every combination step.
struct IntRows {
    std::size_t cols = 0;
    std::vector<std::vector<BigInt>> r;
};

// In-place reduction to a full echelon form (zeros below and above pivots,
// positive pivots, every row content-reduced). Returns pivot columns; zero
// rows are erased.
std::vector<std::size_t> int_echelon(IntRows& m);

std::size_t int_rank(IntRows m);

// Integer basis of the right kernel { x : M x = 0 }, content-reduced.
std::vector<std::vector<BigInt>> int_kernel_basis(IntRows m);

// Whether v lies in the row space of an echelonized matrix (as produced by
// int_echelon with the returned pivot columns).
bool in_row_space(const IntRows& ech, const std::vector<std::size_t>& pivots,
                  const std::vector<BigInt>& v);

} // namespace clpolar::algebra
