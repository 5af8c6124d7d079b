#include "clpolar/scheme/scheme.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "clpolar/algebra/matrix.hpp"

namespace clpolar::scheme {

using algebra::binom2;
using algebra::gaussian_binomial;
using algebra::q_pow;
using algebra::RationalMatrix;

BigInt p_eigenvalue(int d, HalfInt e, int q, int j, int i) {
    if (d < 1 || q < 2) throw std::invalid_argument("p_eigenvalue: bad rank or field size");
    if (i < 0 || i > d || j < 0 || j > d) throw std::invalid_argument("p_eigenvalue: index out of range");
    BigInt total = 0;
    const int lo = std::max(0, j - i);
    const int hi = std::min(j, d - i);
    for (int s = lo; s <= hi; ++s) {
        // both binomial coefficients and the exponent are nonnegative in range
        HalfInt exp = e * (i + s - j) + HalfInt(int(binom2(j - s) + binom2(i + s - j)));
        BigInt term = gaussian_binomial(j, s, q) * gaussian_binomial(d - j, d - i - s, q) * q_pow(q, exp);
        if ((j + s) & 1)
            total -= term;
        else
            total += term;
    }
    return total;
}

std::vector<std::vector<BigInt>> eigenvalue_matrix(int d, HalfInt e, int q) {
    std::vector<std::vector<BigInt>> P(d + 1, std::vector<BigInt>(d + 1));
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= d; ++i) P[j][i] = p_eigenvalue(d, e, q, j, i);
    return P;
}

Rational closed_form_multiplicity(const std::vector<std::vector<BigInt>>& P, int j) {
    if (j < 0 || j >= (int)P.size()) throw std::invalid_argument("closed_form_multiplicity: bad row");
    BigInt total = 0;
    Rational dual_norm = 0;
    for (size_t i = 0; i < P[0].size(); ++i) {
        if (P[0][i] <= 0) throw std::invalid_argument("closed_form_multiplicity: nonpositive valency");
        total += P[0][i];
        dual_norm += Rational(P[j][i] * P[j][i]) / Rational(P[0][i]);
    }
    return Rational(total) / dual_norm;
}

std::vector<std::pair<int, int>> verify_coincidences(int d, HalfInt e, int q) {
    (void)q;  // the pattern depends only on the family and the rank
    std::vector<std::pair<int, int>> out;
    if (e == HalfInt(0) && d >= 3) {
        for (int i = 2; i <= d; i += 2) out.emplace_back(d - 1, i);
    } else if (e == HalfInt(1) && d >= 3 && d % 2 == 1) {
        out.emplace_back(d, d);
    }
    return out;
}

std::vector<std::pair<int, int>> coincidence_scan(int d, HalfInt e, int q) {
    auto P = eigenvalue_matrix(d, e, q);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= d; ++i)
        for (int j = 2; j <= d; ++j)
            if (P[1][i] == P[j][i]) out.emplace_back(j, i);
    return out;
}

std::string PhiValue::str() const { return infinite ? "inf" : value.str(); }

PhiValue phi_valuation(int d, HalfInt e, int q, int i, int j) {
    if (i < 1) throw std::invalid_argument("phi_valuation: i >= 1 required");
    BigInt p = p_eigenvalue(d, e, q, j, i);
    if (p == 0) return PhiValue::inf();
    int base = e.is_integer() ? q : algebra::exact_sqrt(q);
    int steps = 0;
    BigInt t = abs(p);
    while (t % base == 0) {
        t /= base;
        ++steps;
    }
    // hermitian entries are powers of sqrt(q); one sqrt(q) step is half a q step
    return PhiValue::of(e.is_integer() ? HalfInt(steps) : HalfInt::from_twice(steps));
}

HalfInt phi_first_column(HalfInt e, int i) {
    return HalfInt(int(binom2(i - 1))) + e * (i - 1);
}

std::optional<PhiValue> closed_form_phi(int d, HalfInt e, int i, int j) {
    if (i < 2) return std::nullopt;
    const int window4 = 4 * j - 2 * i - e.twice;  // 4 (j - i/2 - e/2)
    if (window4 < 0 || window4 > 4 * (d - i)) return std::nullopt;
    const bool even_i = i % 2 == 0;
    switch (e.twice) {
        case 0:  // hyperbolic
            if (even_i) return PhiValue::of(HalfInt::from_twice(i * (i - 2) / 2));
            if (2 * j == d) return PhiValue::inf();
            return PhiValue::of(HalfInt::from_twice((i - 1) * (i - 1) / 2));
        case 1:  // hermitian, odd ambient dimension
            return PhiValue::of(HalfInt::from_twice(i * (i - 1) / 2));
        case 2:  // parabolic and symplectic
            if (!even_i) return PhiValue::of(HalfInt::from_twice((i * i - 1) / 2));
            if (d % 4 == 0 && 2 * i == d && 2 * j == d + 2) return PhiValue::inf();
            return PhiValue::of(HalfInt::from_twice(i * i / 2));
        case 3:  // hermitian, even ambient dimension
            return PhiValue::of(HalfInt::from_twice((i - 1) * (i + 2) / 2));
        case 4:  // elliptic
            if (even_i) return PhiValue::of(HalfInt::from_twice(i * i / 2 + i - 2));
            if (d % 4 == 2 && 2 * i == d && 2 * j == d + 4) return PhiValue::inf();
            return PhiValue::of(HalfInt::from_twice((i - 1) * (i + 3) / 2));
        default:
            throw std::invalid_argument("closed_form_phi: unsupported parameter e");
    }
}

namespace {

std::vector<std::vector<Bitset>> slice_relations(const std::vector<std::uint8_t>& relation,
                                                 std::uint32_t n, int classes) {
    std::vector<std::vector<Bitset>> A(classes + 1, std::vector<Bitset>(n, Bitset(n)));
    for (std::uint32_t r = 0; r < n; ++r) {
        const std::uint8_t* row = &relation[std::size_t(r) * n];
        for (std::uint32_t c = 0; c < n; ++c) {
            if (row[c] > classes) throw std::logic_error("relation index out of range");
            A[row[c]][r].set(c);
        }
    }
    return A;
}

std::vector<BigInt> constant_valencies(const std::vector<std::vector<Bitset>>& A, std::uint32_t n) {
    std::vector<BigInt> val;
    val.reserve(A.size());
    BigInt sum = 0;
    for (size_t i = 0; i < A.size(); ++i) {
        size_t first = A[i][0].count();
        for (std::uint32_t r = 1; r < n; ++r)
            if (A[i][r].count() != first) throw std::logic_error("relation row sums are not constant");
        if (first == 0) throw std::logic_error("empty relation class");
        val.emplace_back((unsigned long)first);
        sum += val.back();
    }
    if (val[0] != 1) throw std::logic_error("diagonal relation is not trivial");
    for (std::uint32_t r = 0; r < n; ++r)
        if (!A[0][r].test(r)) throw std::logic_error("diagonal relation misses the identity");
    if (sum != (unsigned long)n) throw std::logic_error("relations do not partition the pairs");
    return val;
}

// b[k][i] = popcount(R_1(r) & R_i(c)) for (r, c) in R_k, verified constant
// over all n^2 pairs for i = 1..classes-1; i = 0 and i = classes follow from
// the partition. Constancy makes A_1 A_i = sum_k b[k][i] A_k an exact identity.
std::vector<std::vector<BigInt>> intersection_numbers(const std::vector<std::uint8_t>& relation,
                                                      const std::vector<std::vector<Bitset>>& A,
                                                      const std::vector<BigInt>& valency,
                                                      std::uint32_t n, int classes) {
    const long long unset = -1;
    std::vector<std::vector<long long>> b(classes + 1, std::vector<long long>(classes + 1, unset));
    long long n1 = valency[1].get_si();
    for (std::uint32_t r = 0; r < n; ++r) {
        const std::uint8_t* row = &relation[std::size_t(r) * n];
        for (std::uint32_t c = 0; c < n; ++c) {
            int k = row[c];
            long long rest = n1 - (k == 1 ? 1 : 0);
            for (int i = 1; i < classes; ++i) {
                long long v = (long long)A[1][r].count_and(A[i][c]);
                long long& slot = b[k][i];
                if (slot == unset)
                    slot = v;
                else if (slot != v)
                    throw std::logic_error("intersection numbers are not constant");
                rest -= v;
            }
            if (rest < 0) throw std::logic_error("intersection numbers exceed valency");
            long long& last = b[k][classes];
            if (last == unset)
                last = rest;
            else if (last != rest)
                throw std::logic_error("intersection numbers are not constant");
        }
    }
    std::vector<std::vector<BigInt>> out(classes + 1, std::vector<BigInt>(classes + 1));
    for (int k = 0; k <= classes; ++k) {
        b[k][0] = (k == 1) ? 1 : 0;
        for (int i = 0; i <= classes; ++i) {
            if (b[k][i] == unset) throw std::logic_error("intersection number left undetermined");
            out[k][i] = (long)b[k][i];
        }
    }
    return out;
}

// solve sum_s a_s cols[s] = target over the rationals; nullopt if inconsistent
std::optional<std::vector<Rational>> solve_combination(const std::vector<std::vector<BigInt>>& cols,
                                                       const std::vector<BigInt>& target) {
    const size_t m = target.size();
    const size_t S = cols.size();
    RationalMatrix M(m, S + 1);
    for (size_t r = 0; r < m; ++r) {
        for (size_t s = 0; s < S; ++s) M.at(r, s) = Rational(cols[s][r]);
        M.at(r, S) = Rational(target[r]);
    }
    auto pivots = M.rref();
    for (size_t p : pivots)
        if (p == S) return std::nullopt;
    std::vector<Rational> a(S, Rational(0));
    for (size_t row = 0; row < pivots.size(); ++row) a[pivots[row]] = M.at(row, S);
    return a;
}

BigInt eval_poly(const std::vector<BigInt>& p, const BigInt& t) {
    BigInt acc = 0;
    for (size_t m = p.size(); m-- > 0;) acc = acc * t + p[m];
    return acc;
}

Rational eval_poly(const std::vector<Rational>& p, const BigInt& t) {
    Rational acc = 0;
    for (size_t m = p.size(); m-- > 0;) acc = acc * Rational(t) + p[m];
    return acc;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Spectrum compute_spectrum(const std::vector<std::uint8_t>& relation,
                          const std::vector<std::vector<Bitset>>& A,
                          const std::vector<BigInt>& valency, std::uint32_t n, int classes) {
    Spectrum sp;
    sp.classes = classes;
    sp.b1 = intersection_numbers(relation, A, valency, n, classes);
    const int m = classes + 1;

    // Krylov chain of e_0 under the coefficient recursion: c[s] expresses
    // A_1^s = sum_k c[s][k] A_k, faithful because the A_k have disjoint
    // nonempty supports. The first dependence gives the minimal polynomial.
    std::vector<std::vector<BigInt>> c;
    std::vector<BigInt> e0(m, BigInt(0));
    e0[0] = 1;
    c.push_back(e0);
    std::vector<Rational> dependence;
    while (true) {
        std::vector<BigInt> next(m, BigInt(0));
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < m; ++i) next[k] += sp.b1[k][i] * c.back()[i];
        auto combo = solve_combination(c, next);
        c.push_back(std::move(next));
        if (combo) {
            dependence = std::move(*combo);
            break;
        }
        if ((int)c.size() > m + 1) throw std::logic_error("Krylov chain exceeded the algebra dimension");
    }
    const int kappa = (int)c.size() - 1;
    if (kappa != m)
        throw std::logic_error("first relation does not generate the adjacency algebra");
    sp.min_poly.assign(kappa + 1, BigInt(0));
    sp.min_poly[kappa] = 1;
    for (int s = 0; s < kappa; ++s) {
        if (dependence[s].get_den() != 1)
            throw std::logic_error("minimal polynomial is not integral");
        sp.min_poly[s] = -dependence[s].get_num();
    }

    // integer roots, scanned downward from the valency; the factorisation
    // check proves the list complete and the roots simple
    BigInt bound = valency[1];
    for (BigInt t = bound; t >= -bound; t -= 1)
        if (eval_poly(sp.min_poly, t) == 0) sp.theta.push_back(t);
    if ((int)sp.theta.size() != kappa)
        throw std::logic_error("minimal polynomial does not split into distinct integer roots");
    std::vector<BigInt> product{1};
    for (const BigInt& t : sp.theta) product = poly_mul(product, {-t, BigInt(1)});
    if (product != sp.min_poly)
        throw std::logic_error("root factorisation does not reproduce the minimal polynomial");
    if (sp.theta.front() != bound) throw std::logic_error("valency is not the top eigenvalue");

    // multiplicities from the power traces tr A_1^s = n c[s][0] (all A_k with
    // k >= 1 have zero diagonal); the Vandermonde system has a unique solution
    RationalMatrix V(kappa, kappa + 1);
    for (int s = 0; s < kappa; ++s) {
        for (int jj = 0; jj < kappa; ++jj) {
            BigInt power = 1;
            for (int rep = 0; rep < s; ++rep) power *= sp.theta[jj];
            V.at(s, jj) = Rational(power);
        }
        V.at(s, kappa) = Rational(BigInt(n) * c[s][0]);
    }
    auto vp = V.rref();
    if ((int)vp.size() != kappa) throw std::logic_error("trace system is singular");
    BigInt mult_sum = 0;
    for (int jj = 0; jj < kappa; ++jj) {
        Rational mj = V.at(jj, kappa);
        if (mj.get_den() != 1 || mj.get_num() <= 0)
            throw std::logic_error("eigenspace dimensions are not positive integers");
        sp.mult.push_back(mj.get_num());
        mult_sum += sp.mult.back();
    }
    if (mult_sum != (unsigned long)n) throw std::logic_error("eigenspace dimensions do not sum to n");
    if (sp.mult.front() != 1) throw std::logic_error("top eigenspace is not a line");
    // spare moment as an independent cross-check
    Rational extra = 0;
    for (int jj = 0; jj < kappa; ++jj) {
        BigInt power = 1;
        for (int rep = 0; rep < kappa; ++rep) power *= sp.theta[jj];
        extra += Rational(sp.mult[jj] * power);
    }
    if (extra != Rational(BigInt(n) * c[kappa][0]))
        throw std::logic_error("eigenspace dimensions fail the spare power trace");

    // f_i with f_i(A_1) = A_i: solve against the Krylov matrix, then verify
    // the combination reproduces e_i exactly
    for (int i = 0; i < m; ++i) {
        std::vector<BigInt> ei(m, BigInt(0));
        ei[i] = 1;
        std::vector<std::vector<BigInt>> basis(c.begin(), c.begin() + kappa);
        auto combo = solve_combination(basis, ei);
        if (!combo) throw std::logic_error("relation matrix is not a polynomial in the first relation");
        for (int k = 0; k < m; ++k) {
            Rational acc = 0;
            for (int s = 0; s < kappa; ++s) acc += (*combo)[s] * Rational(c[s][k]);
            if (acc != Rational(ei[k])) throw std::logic_error("polynomial solve failed verification");
        }
        sp.poly.push_back(std::move(*combo));
    }

    // eigenvalues of every A_i per eigenspace; row sums witness J = sum_i A_i
    sp.values.assign(kappa, std::vector<BigInt>(m));
    for (int s = 0; s < kappa; ++s) {
        BigInt row_sum = 0;
        for (int i = 0; i < m; ++i) {
            Rational v = eval_poly(sp.poly[i], sp.theta[s]);
            if (v.get_den() != 1) throw std::logic_error("relation eigenvalue is not an integer");
            sp.values[s][i] = v.get_num();
            row_sum += sp.values[s][i];
        }
        BigInt expected = (s == 0) ? BigInt((unsigned long)n) : BigInt(0);
        if (row_sum != expected) throw std::logic_error("eigenvalue row sum contradicts the all-ones matrix");
    }
    for (int i = 0; i < m; ++i)
        if (sp.values[0][i] != valency[i]) throw std::logic_error("top eigenvalue row is not the valency row");
    return sp;
}

void check_generator_capacity(std::size_t n) {
    if (n > 5000) throw geometry::CapacityError("scheme: generator count exceeds the dense-relation capacity");
}

}  // namespace

SchemeData build_scheme(std::shared_ptr<const geometry::PolarSpace> space) {
    if (!space) throw std::invalid_argument("build_scheme: null space");
    check_generator_capacity(space->num_generators());
    SchemeData S;
    S.space = space;
    S.d = space->rank();
    S.e = space->e();
    S.q = space->q();
    S.n = (std::uint32_t)space->num_generators();
    S.relation.assign(std::size_t(S.n) * S.n, 0);
    for (std::uint32_t r = 0; r < S.n; ++r) {
        for (std::uint32_t c = r; c < S.n; ++c) {
            int rel = S.d - 1 - space->meet_dim(r, c);
            S.relation[std::size_t(r) * S.n + c] = (std::uint8_t)rel;
            S.relation[std::size_t(c) * S.n + r] = (std::uint8_t)rel;
        }
    }
    S.A = slice_relations(S.relation, S.n, S.d);
    S.valency = constant_valencies(S.A, S.n);
    S.P = eigenvalue_matrix(S.d, S.e, S.q);
    S.spec = compute_spectrum(S.relation, S.A, S.valency, S.n, S.d);
    return S;
}

SpectrumMatch match_spectrum(const std::vector<std::vector<BigInt>>& P, const Spectrum& spec) {
    SpectrumMatch M;
    auto fail = [&M](const std::string& why) {
        M.ok = false;
        M.detail = why;
        return M;
    };
    const int rows = (int)P.size();
    if (rows != (int)spec.theta.size()) return fail("row count differs from the computed eigenvalue count");
    for (int a = 0; a < rows; ++a)
        for (int b = a + 1; b < rows; ++b)
            if (P[a][1] == P[b][1]) return fail("column 1 of the formula matrix is not injective");
    M.row_slot.assign(rows, -1);
    for (int j = 0; j < rows; ++j) {
        for (int s = 0; s < rows; ++s)
            if (spec.theta[s] == P[j][1]) M.row_slot[j] = s;
        if (M.row_slot[j] < 0) {
            std::ostringstream os;
            os << "row " << j << ": formula eigenvalue " << P[j][1].get_str()
               << " is missing from the computed spectrum";
            return fail(os.str());
        }
    }
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < (int)P[j].size(); ++i) {
            if (spec.values[M.row_slot[j]][i] != P[j][i]) {
                std::ostringstream os;
                os << "entry (" << j << ", " << i << "): formula " << P[j][i].get_str()
                   << " vs computed " << spec.values[M.row_slot[j]][i].get_str();
                return fail(os.str());
            }
        }
        Rational mj = closed_form_multiplicity(P, j);
        if (mj != Rational(spec.mult[M.row_slot[j]])) {
            std::ostringstream os;
            os << "row " << j << ": formula multiplicity " << mj.get_str() << " vs computed "
               << spec.mult[M.row_slot[j]].get_str();
            return fail(os.str());
        }
    }
    M.ok = true;
    return M;
}

int slot_for_row(const SchemeData& S, int j) {
    if (j < 0 || j > S.d) throw std::invalid_argument("slot_for_row: bad row");
    for (int s = 0; s < (int)S.spec.theta.size(); ++s)
        if (S.spec.theta[s] == S.P[j][1]) return s;
    throw std::logic_error("slot_for_row: eigenvalue not found");
}

namespace {

// w <- p(A_1) e_c by Horner iteration over integer vectors
std::vector<BigInt> projector_column(const std::vector<Bitset>& a1, const std::vector<BigInt>& p,
                                     std::uint32_t col, std::uint32_t n) {
    std::vector<BigInt> acc(n, BigInt(0));
    acc[col] = p.back();
    for (size_t m = p.size() - 1; m-- > 0;) {
        std::vector<BigInt> next(n, BigInt(0));
        for (std::uint32_t r = 0; r < n; ++r) {
            BigInt s = 0;
            a1[r].for_each([&](size_t cc) { s += acc[cc]; });
            next[r] = s;
        }
        next[col] += p[m];
        acc = std::move(next);
    }
    return acc;
}

void content_normalise(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    for (BigInt& x : v) x /= g;
    for (const BigInt& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (BigInt& y : v) y = -y;
        break;
    }
}

}  // namespace

std::vector<std::vector<BigInt>> eigenspace_basis(const SchemeData& S, int slot) {
    if (slot < 0 || slot >= (int)S.spec.theta.size())
        throw std::invalid_argument("eigenspace_basis: bad slot");
    std::vector<BigInt> proj{1};
    for (int k = 0; k < (int)S.spec.theta.size(); ++k)
        if (k != slot) proj = poly_mul(proj, {-S.spec.theta[k], BigInt(1)});
    const size_t target = S.spec.mult[slot].get_ui();
    std::vector<std::vector<BigInt>> basis;
    std::vector<std::uint32_t> pivot;
    for (std::uint32_t c = 0; c < S.n && basis.size() < target; ++c) {
        auto w = projector_column(S.A[1], proj, c, S.n);
        for (size_t b = 0; b < basis.size(); ++b) {
            if (w[pivot[b]] == 0) continue;
            BigInt wc = w[pivot[b]], bc = basis[b][pivot[b]];
            for (std::uint32_t x = 0; x < S.n; ++x) w[x] = w[x] * bc - basis[b][x] * wc;
        }
        content_normalise(w);
        std::uint32_t p = S.n;
        for (std::uint32_t x = 0; x < S.n; ++x)
            if (w[x] != 0) {
                p = x;
                break;
            }
        if (p == S.n) continue;
        basis.push_back(std::move(w));
        pivot.push_back(p);
    }
    if (basis.size() != target) throw std::logic_error("eigenspace basis extraction fell short");
    for (const auto& v : basis) {
        for (std::uint32_t r = 0; r < S.n; ++r) {
            BigInt s = 0;
            S.A[1][r].for_each([&](size_t cc) { s += v[cc]; });
            if (s != S.spec.theta[slot] * v[r])
                throw std::logic_error("extracted vector is not an eigenvector");
        }
    }
    return basis;
}

bool is_eigenvector(const std::vector<Bitset>& rows, const std::vector<Rational>& v,
                    const Rational& lambda) {
    if (rows.size() != v.size()) throw std::invalid_argument("is_eigenvector: size mismatch");
    for (size_t r = 0; r < rows.size(); ++r) {
        Rational acc = 0;
        rows[r].for_each([&](size_t c) { acc += v[c]; });
        if (acc != lambda * v[r]) return false;
    }
    return true;
}

ShiftResult eigenvector_shift(const SchemeData& S, const Bitset& chi, const BigInt& alpha,
                              const BigInt& beta, int i) {
    if (i < 0 || i > S.d) throw std::invalid_argument("eigenvector_shift: bad relation index");
    if (chi.size() != S.n) throw std::invalid_argument("eigenvector_shift: indicator size mismatch");
    BigInt p = alpha - beta;
    if (p == S.P[0][i])
        throw std::invalid_argument("eigenvector_shift: difference equals the valency, shift undefined");
    Rational offset = Rational(beta) / Rational(p - S.P[0][i]);
    ShiftResult res;
    res.eigenvalue = p;
    res.v.assign(S.n, offset);
    chi.for_each([&](size_t g) { res.v[g] += 1; });
    res.is_member = is_eigenvector(S.A[i], res.v, Rational(p));
    return res;
}

OneClassScheme restrict_one_class(const SchemeData& S) {
    if (!(S.e == HalfInt(0)) || S.d % 2 != 0)
        throw std::invalid_argument("restrict_one_class: needs a hyperbolic space of even rank");
    OneClassScheme O;
    O.parent = &S;
    O.cls.assign(S.n, 0);
    for (std::uint32_t g = 0; g < S.n; ++g) O.cls[g] = (std::uint8_t)(S.rel(g, 0) % 2);
    for (std::uint32_t g = 0; g < S.n; ++g)
        if (O.cls[g] == 0) O.members.push_back(g);
    if (O.members.size() * 2 != S.n) throw std::logic_error("generator classes are not balanced");
    O.n = (std::uint32_t)O.members.size();
    const int half = S.d / 2;
    O.relation.assign(std::size_t(O.n) * O.n, 0);
    for (std::uint32_t r = 0; r < O.n; ++r) {
        for (std::uint32_t c = 0; c < O.n; ++c) {
            int pr = S.rel(O.members[r], O.members[c]);
            if (pr % 2 != 0) throw std::logic_error("odd relation inside a class");
            O.relation[std::size_t(r) * O.n + c] = (std::uint8_t)(pr / 2);
        }
    }
    O.A = slice_relations(O.relation, O.n, half);
    O.valency = constant_valencies(O.A, O.n);
    O.P.assign(half + 1, std::vector<BigInt>(half + 1));
    for (int j = 0; j <= half; ++j)
        for (int i = 0; i <= half; ++i) O.P[j][i] = S.P[j][2 * i];
    O.spec = compute_spectrum(O.relation, O.A, O.valency, O.n, half);
    return O;
}

std::vector<Rational> restrict_vector(const std::vector<Rational>& v,
                                      const std::vector<std::uint32_t>& idx) {
    std::vector<Rational> out;
    out.reserve(idx.size());
    for (std::uint32_t i : idx) out.push_back(v.at(i));
    return out;
}

}  // namespace clpolar::scheme
