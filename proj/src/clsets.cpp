#include "clpolar/clsets/clsets.hpp"

#include <stdexcept>
#include <utility>

namespace clpolar::clsets {

using algebra::binom2;
using algebra::gaussian_binomial;
using algebra::q_pow;
using geometry::PolarSpace;

namespace {

constexpr std::size_t witness_cap = 16;

void add_witness(std::vector<Witness>& w, std::uint32_t g, Rational expected, BigInt actual) {
    if (w.size() < witness_cap) w.push_back({g, std::move(expected), std::move(actual)});
}

void require_same_space(const GeneratorSet& a, const GeneratorSet& b) {
    if (a.space != b.space)
        throw std::invalid_argument("generator sets live in different spaces");
}

BigInt count(const Bitset& b) { return BigInt(static_cast<unsigned long>(b.count())); }

BigInt count_and(const Bitset& a, const Bitset& b) {
    return BigInt(static_cast<unsigned long>(a.count_and(b)));
}

}  // namespace

GeneratorSet GeneratorSet::empty(std::shared_ptr<const PolarSpace> sp) {
    GeneratorSet L;
    L.members = Bitset(sp->num_generators());
    L.space = std::move(sp);
    return L;
}

GeneratorSet GeneratorSet::full(std::shared_ptr<const PolarSpace> sp) {
    GeneratorSet L = empty(std::move(sp));
    L.members = L.members.complement();
    return L;
}

GeneratorSet GeneratorSet::of(std::shared_ptr<const PolarSpace> sp,
                              const std::vector<std::uint32_t>& indices) {
    GeneratorSet L = empty(std::move(sp));
    for (auto g : indices) {
        if (g >= L.members.size())
            throw std::invalid_argument("generator index out of range");
        L.members.set(g);
    }
    return L;
}

BigInt pencil_size(int d, HalfInt e, int q) {
    BigInt p = 1;
    for (int i = 0; i <= d - 2; ++i) p *= q_pow(q, e + i) + 1;
    return p;
}

BigInt max_parameter(int d, HalfInt e, int q) { return q_pow(q, e + (d - 1)) + 1; }

Rational parameter(const GeneratorSet& L) {
    const PolarSpace& sp = *L.space;
    Rational x(count(L.members));
    x /= Rational(pencil_size(sp.rank(), sp.e(), sp.q()));
    return x;
}

const IncidenceEchelon& CLContext::incidence() const {
    if (!inc_) {
        auto e = std::make_unique<IncidenceEchelon>();
        const PolarSpace& sp = *S.space;
        e->rows.cols = S.n;
        e->rows.r.reserve(sp.num_points());
        for (std::size_t p = 0; p < sp.num_points(); ++p) {
            std::vector<BigInt> row(S.n);
            sp.pencil(p).for_each([&](std::size_t g) { row[g] = 1; });
            e->rows.r.push_back(std::move(row));
        }
        e->pivots = algebra::int_echelon(e->rows);
        inc_ = std::move(e);
    }
    return *inc_;
}

DisjointnessCheck is_cl_disjointness(const CLContext& C, const GeneratorSet& L) {
    const auto& S = C.S;
    DisjointnessCheck res;
    res.x = parameter(L);
    res.x_integral = res.x.get_den() == 1;
    Rational scale(q_pow(S.q, HalfInt(binom2(S.d - 1)) + S.e * (S.d - 1)));
    const auto& disjoint_rows = S.A[S.d];
    res.counts_ok = true;
    for (std::uint32_t r = 0; r < S.n; ++r) {
        Rational expected = (res.x - (L.members.test(r) ? 1 : 0)) * scale;
        BigInt actual = count_and(disjoint_rows[r], L.members);
        if (Rational(actual) != expected) {
            res.counts_ok = false;
            add_witness(res.witnesses, r, expected, actual);
        }
    }
    res.ok = res.counts_ok && res.x_integral;
    return res;
}

bool degree_one_incidence(const CLContext& C, const GeneratorSet& L) {
    const IncidenceEchelon& inc = C.incidence();
    std::vector<BigInt> chi(C.S.n);
    L.members.for_each([&](std::size_t g) { chi[g] = 1; });
    return algebra::in_row_space(inc.rows, inc.pivots, chi);
}

bool degree_one_eigenvalue(const CLContext& C, const GeneratorSet& L) {
    const auto& S = C.S;
    const BigInt& p01 = S.P[0][1];
    const BigInt& p11 = S.P[1][1];
    for (int j = 0; j <= S.d; ++j)
        if (j != 1 && S.P[j][1] == p11)
            throw std::logic_error("first-column eigenvalue is not unique to V_1");
    BigInt n(S.n), s = count(L.members);
    for (std::uint32_t r = 0; r < S.n; ++r) {
        BigInt lhs = n * count_and(S.A[1][r], L.members) - s * p01;
        BigInt rhs = p11 * (L.members.test(r) ? BigInt(n - s) : BigInt(-s));
        if (lhs != rhs) return false;
    }
    return true;
}

bool is_degree_one(const CLContext& C, const GeneratorSet& L) {
    bool via_incidence = degree_one_incidence(C, L);
    bool via_eigenvalue = degree_one_eigenvalue(C, L);
    if (via_incidence != via_eigenvalue)
        throw std::logic_error("degree-one routes disagree");
    return via_incidence;
}

bool admissible_converse_index(const PolarSpace& sp, int i) {
    using geometry::Family;
    Family f = sp.kind().family;
    int d = sp.rank();
    if (f == Family::HyperbolicQuadric) return i % 2 == 1;
    if ((f == Family::ParabolicQuadric || f == Family::Symplectic) && d % 2 == 1)
        return i != d;
    return true;
}

ProfileCheck intersection_profile(const CLContext& C, const GeneratorSet& L, int i) {
    const auto& S = C.S;
    if (i < 1 || i > S.d) throw std::invalid_argument("relation index out of range");
    ProfileCheck pc;
    pc.i = i;
    pc.admissible = admissible_converse_index(*S.space, i);
    Rational x = parameter(L);
    Rational base(q_pow(S.q, HalfInt(binom2(i - 1)) + S.e * (i - 1)));
    Rational gb_low(gaussian_binomial(S.d - 1, i - 1, S.q));
    Rational high(q_pow(S.q, S.e + (i - 1)) * gaussian_binomial(S.d - 1, i, S.q));
    pc.expected_member = ((x - 1) * gb_low + high) * base;
    pc.expected_outside = x * gb_low * base;
    pc.ok = true;
    for (std::uint32_t r = 0; r < S.n; ++r) {
        const Rational& expected =
            L.members.test(r) ? pc.expected_member : pc.expected_outside;
        BigInt actual = count_and(S.A[i][r], L.members);
        if (Rational(actual) != expected) {
            pc.ok = false;
            add_witness(pc.witnesses, r, expected, actual);
        }
    }
    return pc;
}

CLReport full_report(const CLContext& C, const GeneratorSet& L) {
    CLReport rep;
    DisjointnessCheck dis = is_cl_disjointness(C, L);
    rep.x = dis.x;
    rep.x_integral = dis.x_integral;
    rep.is_cl = dis.ok;
    rep.cl_witnesses = std::move(dis.witnesses);
    rep.is_degree_one = is_degree_one(C, L);
    for (int i = 1; i <= C.S.d; ++i) rep.profile.push_back(intersection_profile(C, L, i));
    return rep;
}

bool shifted_chi_in_V1(const CLContext& C, const GeneratorSet& L) {
    const auto& S = C.S;
    BigInt n(S.n), s = count(L.members);
    for (int i = 1; i <= S.d; ++i) {
        const BigInt& p0 = S.P[0][i];
        const BigInt& p1 = S.P[1][i];
        for (std::uint32_t r = 0; r < S.n; ++r) {
            BigInt lhs = n * count_and(S.A[i][r], L.members) - s * p0;
            BigInt rhs = p1 * (L.members.test(r) ? BigInt(n - s) : BigInt(-s));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_spread(const GeneratorSet& S) {
    const PolarSpace& sp = *S.space;
    for (std::size_t p = 0; p < sp.num_points(); ++p)
        if (sp.pencil(p).count_and(S.members) != 1) return false;
    return true;
}

bool spread_intersection_check(const CLContext& C, const GeneratorSet& L,
                               const GeneratorSet& S) {
    require_same_space(L, S);
    (void)C;
    if (!is_spread(S)) throw std::invalid_argument("not a spread");
    return Rational(count_and(L.members, S.members)) == parameter(L);
}

GeneratorSet complement(const GeneratorSet& L) {
    GeneratorSet r = L;
    r.members = L.members.complement();
    return r;
}

GeneratorSet set_union(const GeneratorSet& a, const GeneratorSet& b) {
    require_same_space(a, b);
    if (a.members.intersects(b.members))
        throw std::invalid_argument("union requires disjoint sets");
    GeneratorSet r = a;
    r.members |= b.members;
    return r;
}

GeneratorSet set_difference(const GeneratorSet& big, const GeneratorSet& small) {
    require_same_space(big, small);
    if (!small.members.is_subset_of(big.members))
        throw std::invalid_argument("difference requires a contained set");
    GeneratorSet r = big;
    r.members &= small.members.complement();
    return r;
}

GeneratorSet restrict_to_embedded(const GeneratorSet& L,
                                  std::shared_ptr<const PolarSpace> sub) {
    if (!sub->is_embedded() || sub->parent() != L.space)
        throw std::invalid_argument("not an embedded view of the set's space");
    if (sub->rank() != L.space->rank())
        throw std::invalid_argument("embedded restriction requires equal rank");
    const auto& gmap = sub->parent_generator_index();
    GeneratorSet r = GeneratorSet::empty(std::move(sub));
    for (std::size_t k = 0; k < gmap.size(); ++k)
        if (L.members.test(gmap[k])) r.members.set(k);
    return r;
}

Rational one_class_parameter(const scheme::OneClassScheme& O, const Bitset& members) {
    if (members.size() != O.n)
        throw std::invalid_argument("membership bitset does not index the class");
    const auto& S = *O.parent;
    BigInt p = 1;
    for (int i = 1; i <= S.d - 2; ++i) p *= q_pow(S.q, HalfInt(i)) + 1;
    Rational x(count(members));
    x /= Rational(p);
    return x;
}

bool one_class_is_cl(const scheme::OneClassScheme& O, const Bitset& members) {
    if (members.size() != O.n)
        throw std::invalid_argument("membership bitset does not index the class");
    int classes = static_cast<int>(O.P.size()) - 1;
    const BigInt& p01 = O.P[0][1];
    const BigInt& p11 = O.P[1][1];
    for (int j = 0; j <= classes; ++j)
        if (j != 1 && O.P[j][1] == p11)
            throw std::logic_error("restricted first-column eigenvalue is not unique to V'_1");
    BigInt n(O.n), s = count(members);
    for (std::uint32_t r = 0; r < O.n; ++r) {
        BigInt lhs = n * count_and(O.A[1][r], members) - s * p01;
        BigInt rhs = p11 * (members.test(r) ? BigInt(n - s) : BigInt(-s));
        if (lhs != rhs) return false;
    }
    return true;
}

OneClassProfile one_class_profile(const scheme::OneClassScheme& O, const Bitset& members,
                                  int i) {
    const auto& S = *O.parent;
    if (i < 1 || 2 * i > S.d) throw std::invalid_argument("relation index out of range");
    OneClassProfile pc;
    pc.i = i;
    Rational x = one_class_parameter(O, members);
    Rational base(q_pow(S.q, HalfInt((2 * i - 1) * (i - 1))));
    Rational gb_low(gaussian_binomial(S.d - 1, 2 * i - 1, S.q));
    Rational high(q_pow(S.q, HalfInt(2 * i - 1)) * gaussian_binomial(S.d - 1, 2 * i, S.q));
    pc.expected_member = ((x - 1) * gb_low + high) * base;
    pc.expected_outside = x * gb_low * base;
    pc.ok = true;
    for (std::uint32_t r = 0; r < O.n; ++r) {
        const Rational& expected = members.test(r) ? pc.expected_member : pc.expected_outside;
        BigInt actual = count_and(O.A[i][r], members);
        if (Rational(actual) != expected) {
            pc.ok = false;
            add_witness(pc.witnesses, r, expected, actual);
        }
    }
    return pc;
}

SkewCountReport s1_s2_d2(const CLContext& C, const GeneratorSet& L) {
    const auto& S = C.S;
    if (S.d != 3 || S.e != HalfInt(1))
        throw std::invalid_argument("skew counts require a rank-3 space with e = 1");
    SkewCountReport rep;
    rep.x = parameter(L);
    BigInt q(S.q), q2 = q * q, q3 = q2 * q;
    rep.s1 = Rational(q3) + rep.x * Rational(q2 + q + 1);
    rep.d2 = (rep.x - 2) * Rational(q2 * (q - 1));
    rep.s2 = rep.x * Rational((q2 + 1) * (q + 1)) - (rep.x - 1) * Rational(2 * q3) + rep.d2;
    const auto& skew = S.A[S.d];
    auto idx = L.indices();
    BigInt size(static_cast<unsigned long>(idx.size()));
    rep.s1_ok = true;
    for (auto g : idx) {
        BigInt meets = size - count_and(skew[g], L.members);
        if (Rational(meets) != rep.s1) {
            rep.s1_ok = false;
            add_witness(rep.witnesses, g, rep.s1, meets);
        }
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if (!skew[idx[a]].test(idx[b])) continue;
            rep.has_skew_pair = true;
            BigInt da = count_and(skew[idx[a]], L.members);
            BigInt db = count_and(skew[idx[b]], L.members);
            BigInt both_skew(
                static_cast<unsigned long>(L.members.count_and2(skew[idx[a]], skew[idx[b]])));
            BigInt meets_both = size - da - db + both_skew;
            if (Rational(both_skew) != rep.d2) {
                rep.d2_ok = false;
                add_witness(rep.witnesses, idx[a], rep.d2, both_skew);
            }
            if (Rational(meets_both) != rep.s2) {
                rep.s2_ok = false;
                add_witness(rep.witnesses, idx[a], rep.s2, meets_both);
            }
        }
    }
    return rep;
}

bool skew_bound(int q, const BigInt& x, long c) {
    if (c < 0) throw std::invalid_argument("c must be nonnegative");
    BigInt Q(q), q2 = Q * Q, q3 = q2 * Q;
    BigInt s1 = q3 + x * (q2 + Q + 1);
    BigInt d2 = (x - 2) * q2 * (Q - 1);
    BigInt s2 = x * (q2 + 1) * (Q + 1) - 2 * (x - 1) * q3 + d2;
    BigInt pairs = BigInt(c + 1) * c / 2;
    BigInt lhs = (c + 1) * s1 - pairs * s2;
    BigInt rhs = x * (q2 + 1) * (Q + 1);
    return lhs > rhs;
}

bool in_corollary_range(int q, const BigInt& x) {
    if (x < 2) return false;
    Rational t(x);
    t -= Rational(1) / Rational(6);
    Rational D = Rational(9) * t * t + Rational(24 * q);
    Rational A = Rational(432) * Rational(BigInt(q) * q) - Rational(27) * t * t * t -
                 Rational(9) * t * D;
    if (A < 0) return false;
    Rational B = Rational(27) * t * t + D;
    return A * A >= B * B * D;
}

}  // namespace clpolar::clsets
