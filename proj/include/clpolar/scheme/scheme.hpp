#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clpolar/algebra/halfint.hpp"
#include "clpolar/algebra/qfunc.hpp"
#include "clpolar/geometry/polar_space.hpp"
#include "clpolar/support/bitset.hpp"

namespace clpolar::scheme {

using algebra::BigInt;
using algebra::HalfInt;
using algebra::Rational;

// Eigenvalue P_{ji} of the relation "generators meeting in a (d-i-1)-space"
// on the j-th common eigenspace, for rank d and parameter e:
//   sum_s (-1)^{j+s} [j s] [d-j, d-i-s] q^{e(i+s-j) + C(j-s,2) + C(i+s-j,2)}
// with s running from max(0, j-i) to min(j, d-i).
BigInt p_eigenvalue(int d, HalfInt e, int q, int j, int i);

// Full (d+1) x (d+1) matrix, P[j][i] = p_eigenvalue(d, e, q, j, i).
std::vector<std::vector<BigInt>> eigenvalue_matrix(int d, HalfInt e, int q);

// Eigenspace dimension implied by P alone: m_j = N / sum_i (P_ji^2 / n_i)
// with valencies n_i = P_0i and N = sum_i n_i. Throws on nonpositive valencies.
Rational closed_form_multiplicity(const std::vector<std::vector<BigInt>>& P, int j);

// Pairs (j, i) with j >= 2, i >= 1 and P_{1i} = P_{ji}, predicted family by
// family: hyperbolic spaces (e = 0) give (d-1, i) for even i; parabolic and
// symplectic spaces (e = 1) of odd rank give (d, d); no other family has any.
std::vector<std::pair<int, int>> verify_coincidences(int d, HalfInt e, int q);

// The same pairs read off the P matrix entry by entry.
std::vector<std::pair<int, int>> coincidence_scan(int d, HalfInt e, int q);

// Exponent of q in P_{ji}, infinite when P_{ji} = 0. Hermitian spaces carry
// half-integral exponents (their entries are powers of sqrt(q)).
struct PhiValue {
    bool infinite = false;
    HalfInt value{0};

    static PhiValue inf() { return PhiValue{true, HalfInt{0}}; }
    static PhiValue of(HalfInt v) { return PhiValue{false, v}; }

    friend bool operator==(const PhiValue& a, const PhiValue& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    std::string str() const;
};

// Valuation of the exact entry; i >= 1 required.
PhiValue phi_valuation(int d, HalfInt e, int q, int i, int j);

// phi_i(1) = C(i-1,2) + e(i-1), the exponent of the whole second row.
HalfInt phi_first_column(HalfInt e, int i);

// Closed form of phi_i(j) for i >= 2 inside the window
// 0 <= j - i/2 - e/2 <= d - i; nullopt outside it. Depends on q only through
// the family, so q is not a parameter.
std::optional<PhiValue> closed_form_phi(int d, HalfInt e, int i, int j);

// Exact eigendecomposition of a relation family generated by its first
// nontrivial relation. Everything is verified during construction: the
// intersection numbers are constant over every relation class, the minimal
// polynomial of A_1 splits into distinct integer roots, the multiplicities
// are the unique solution of the power-trace system (positive integers
// summing to n), and each A_i is an exact polynomial f_i in A_1.
struct Spectrum {
    int classes = 0;                          // number of relations - 1
    std::vector<std::vector<BigInt>> b1;      // b1[k][i]: common count of an R_1 and an R_i neighbour over an R_k pair
    std::vector<BigInt> min_poly;             // of A_1; monic, index = degree
    std::vector<BigInt> theta;                // eigenvalues of A_1, strictly decreasing
    std::vector<BigInt> mult;                 // eigenspace dimensions, sum = n
    std::vector<std::vector<Rational>> poly;  // poly[i]: coefficients of f_i
    std::vector<std::vector<BigInt>> values;  // values[s][i] = f_i(theta[s]), eigenvalue of A_i
};

// The generator association scheme of a polar space: relation byte matrix,
// bit-packed relation matrices, the closed-form P matrix, and the verified
// spectrum of the built matrices. Immutable after build_scheme.
struct SchemeData {
    std::shared_ptr<const geometry::PolarSpace> space;
    int d = 0;
    HalfInt e{0};
    int q = 0;
    std::uint32_t n = 0;                 // generator count
    std::vector<std::uint8_t> relation;  // n*n relation indices, d-1-meet_dim
    std::vector<std::vector<Bitset>> A;  // A[i][r]: row r of the i-th relation matrix
    std::vector<BigInt> valency;         // constant row sums n_i
    std::vector<std::vector<BigInt>> P;  // closed-form eigenvalue matrix
    Spectrum spec;

    int rel(std::uint32_t r, std::uint32_t c) const {
        return relation[std::size_t(r) * n + c];
    }
};

SchemeData build_scheme(std::shared_ptr<const geometry::PolarSpace> space);

// Row-by-row comparison of a closed-form eigenvalue matrix (with the
// multiplicities it implies) against a computed spectrum. Rows are matched
// through column 1, which must take distinct values.
struct SpectrumMatch {
    bool ok = false;
    std::vector<int> row_slot;  // row j -> index into spec.theta
    std::string detail;         // first failure, empty when ok
};
SpectrumMatch match_spectrum(const std::vector<std::vector<BigInt>>& P, const Spectrum& spec);

// Index into spec.theta carrying the closed-form row j, matched via column 1.
int slot_for_row(const SchemeData& S, int j);

// Integer row basis of the A_1-eigenspace for spec.theta[slot], extracted
// from the columns of the polynomial projector onto that eigenspace. Every
// returned vector is re-verified as an exact eigenvector.
std::vector<std::vector<BigInt>> eigenspace_basis(const SchemeData& S, int slot);

// Exact test A v = lambda v for a relation matrix given by its bit rows.
bool is_eigenvector(const std::vector<Bitset>& rows, const std::vector<Rational>& v,
                    const Rational& lambda);

// chi shifted into an eigenvector candidate of A_i: v = chi + (beta/(P - P_0i)) j
// with P = alpha - beta. Throws std::invalid_argument when P = P_0i.
struct ShiftResult {
    std::vector<Rational> v;
    BigInt eigenvalue;  // alpha - beta
    bool is_member;     // A_i v = (alpha - beta) v exactly
};
ShiftResult eigenvector_shift(const SchemeData& S, const Bitset& chi, const BigInt& alpha,
                              const BigInt& beta, int i);

// One class of a hyperbolic space of even rank, carrying the even relations
// restricted to it. Expected eigenvalues are the parent rows at doubled
// column index. Holds a pointer into the parent, which must outlive it.
struct OneClassScheme {
    const SchemeData* parent = nullptr;
    std::vector<std::uint8_t> cls;       // class id per parent generator; class 0 holds generator 0
    std::vector<std::uint32_t> members;  // parent indices of class 0, ascending
    std::uint32_t n = 0;
    std::vector<std::uint8_t> relation;  // parent relation / 2 within the class
    std::vector<std::vector<Bitset>> A;
    std::vector<BigInt> valency;
    std::vector<std::vector<BigInt>> P;  // P[j][i] = parent P[j][2i], j,i = 0..d/2
    Spectrum spec;

    int rel(std::uint32_t r, std::uint32_t c) const {
        return relation[std::size_t(r) * n + c];
    }
};

// Requires a hyperbolic space of even rank; throws std::invalid_argument
// otherwise. Generators in the same class meet in dimension of the same
// parity as d - 1, so class relations carry even parent indices only.
OneClassScheme restrict_one_class(const SchemeData& S);

// v restricted to the given coordinates, in their order.
std::vector<Rational> restrict_vector(const std::vector<Rational>& v,
                                      const std::vector<std::uint32_t>& idx);

}  // namespace clpolar::scheme
