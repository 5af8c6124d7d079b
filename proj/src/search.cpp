#include "clpolar/search/search.hpp"

#include <cmath>
#include <stdexcept>

#include "clpolar/support/parallel.hpp"

namespace clpolar::search {

namespace {

using algebra::BigInt;
using algebra::HalfInt;

void capacity_guard(std::size_t n, std::size_t m, bool pruned) {
    if (m > n) throw std::invalid_argument("search: target size exceeds the generator count");
    double bits = static_cast<double>(m) * std::log2(static_cast<double>(n) + 1.0);
    if (pruned ? bits > 48.0 : (n > 64 || bits > 40.0))
        throw geometry::CapacityError("search: instance exceeds the enumeration guard");
}

// the exact count of fellow members meeting a member in a (d-i-1)-space,
// mandatory for every degree-one set of parameter x
long member_target(const scheme::SchemeData& S, long x, int i) {
    using algebra::gaussian_binomial;
    using algebra::q_pow;
    BigInt base = q_pow(S.q, HalfInt(algebra::binom2(i - 1)) + S.e * (i - 1));
    BigInt low = gaussian_binomial(S.d - 1, i - 1, S.q);
    BigInt high = q_pow(S.q, S.e + (i - 1)) * gaussian_binomial(S.d - 1, i, S.q);
    BigInt v = (BigInt(x - 1) * low + high) * base;
    if (!v.fits_slong_p()) throw geometry::CapacityError("search: count does not fit a long");
    return v.get_si();
}

// DFS state: chosen members ascending with their running pair counts against
// the two pruning relations.
struct Engine {
    const CLContext& C;
    std::size_t m;
    bool pruned;
    long a1, ad;

    std::vector<std::uint32_t> chosen;
    std::vector<long> cnt1, cntd;
    std::vector<Bitset> found;
    long nodes = 0;

    Engine(const CLContext& c, std::size_t m_, bool pruned_, long a1_, long ad_)
        : C(c), m(m_), pruned(pruned_), a1(a1_), ad(ad_) {}

    bool try_push(std::uint32_t g) {
        const auto& S = C.S;
        std::size_t t = chosen.size();
        long c1 = 0, cd = 0;
        if (pruned) {
            long remaining = static_cast<long>(m) - static_cast<long>(t) - 1;
            for (std::size_t k = 0; k < t; ++k) {
                int r = S.rel(g, chosen[k]);
                long n1 = cnt1[k], nd = cntd[k];
                if (r == 1) {
                    ++c1;
                    ++n1;
                } else if (r == S.d) {
                    ++cd;
                    ++nd;
                }
                if (n1 > a1 || nd > ad) return false;
                if (n1 + remaining < a1 || nd + remaining < ad) return false;
            }
            if (c1 > a1 || cd > ad) return false;
            if (c1 + remaining < a1 || cd + remaining < ad) return false;
        } else {
            for (std::size_t k = 0; k < t; ++k) {
                int r = S.rel(g, chosen[k]);
                if (r == 1) ++c1;
                else if (r == S.d) ++cd;
            }
        }
        for (std::size_t k = 0; k < t; ++k) {
            int r = S.rel(g, chosen[k]);
            if (r == 1) ++cnt1[k];
            else if (r == S.d) ++cntd[k];
        }
        chosen.push_back(g);
        cnt1.push_back(c1);
        cntd.push_back(cd);
        return true;
    }

    void pop() {
        std::uint32_t g = chosen.back();
        chosen.pop_back();
        cnt1.pop_back();
        cntd.pop_back();
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            int r = C.S.rel(g, chosen[k]);
            if (r == 1) --cnt1[k];
            else if (r == C.S.d) --cntd[k];
        }
    }

    void leaf() {
        GeneratorSet L = GeneratorSet::empty(C.S.space);
        for (std::uint32_t g : chosen) L.members.set(g);
        if (clsets::is_degree_one(C, L)) found.push_back(L.members);
    }
};

// Walks the subtree hanging at the replayed prefix; with root_depth 0 this is
// the whole remaining enumeration (cursor semantics), with root_depth equal
// to the prefix length it is exactly one branch (parallel fan-out).
struct WalkOutcome {
    std::vector<Bitset> found;
    bool complete = true;
    Cursor cursor;
    long nodes = 0;
};

WalkOutcome walk(const CLContext& C, std::size_t m, bool pruned, long a1, long ad, long budget,
                 const Cursor& start, std::size_t root_depth) {
    std::uint32_t n = C.S.n;
    Engine E(C, m, pruned, a1, ad);
    for (std::uint32_t g : start.chosen)
        if (!E.try_push(g)) throw std::logic_error("search: cursor prefix fails its own bounds");
    std::vector<std::uint32_t> nxt(start.chosen.size() + 1);
    for (std::size_t k = 0; k < start.chosen.size(); ++k) nxt[k] = start.chosen[k] + 1;
    nxt.back() = start.next;

    WalkOutcome out;
    for (;;) {
        std::size_t depth = E.chosen.size();
        std::uint32_t c = nxt[depth];
        if (c >= n || static_cast<std::size_t>(n - c) < m - depth) {
            if (depth == root_depth) break;
            E.pop();
            nxt.pop_back();
            continue;
        }
        if (budget >= 0 && E.nodes >= budget) {
            out.complete = false;
            out.cursor.chosen = E.chosen;
            out.cursor.next = c;
            break;
        }
        ++E.nodes;
        nxt[depth] = c + 1;
        if (!E.try_push(c)) continue;
        if (E.chosen.size() == m) {
            E.leaf();
            E.pop();
            continue;
        }
        nxt.push_back(c + 1);
    }
    out.found = std::move(E.found);
    out.nodes = E.nodes;
    return out;
}

}  // namespace

EnumerationResult exhaustive_degree_one(const CLContext& C, long x,
                                        const EnumerationOptions& opts) {
    const auto& S = C.S;
    if (x < 0) throw std::invalid_argument("exhaustive_degree_one: negative parameter");
    BigInt want = BigInt(x) * clsets::pencil_size(S.d, S.e, S.q);
    if (!want.fits_ulong_p() || want.get_ui() > S.n)
        throw std::invalid_argument("exhaustive_degree_one: target size exceeds the space");
    std::size_t m = want.get_ui();
    capacity_guard(S.n, m, opts.pruned);

    EnumerationResult res;
    if (m == 0) {
        res.sets.push_back(GeneratorSet::empty(S.space));
        return res;
    }
    long a1 = member_target(S, x, 1);
    long ad = member_target(S, x, S.d);
    C.incidence();  // materialize the lazy cache before any fan-out

    bool fresh = !opts.resume.has_value();
    if (fresh && opts.node_budget < 0 && thread_count() > 1) {
        std::size_t branches = S.n - m + 1;
        std::vector<WalkOutcome> parts(branches);
        parallel_for(branches, [&](std::size_t g0) {
            Cursor c;
            c.chosen = {static_cast<std::uint32_t>(g0)};
            c.next = static_cast<std::uint32_t>(g0 + 1);
            parts[g0] = walk(C, m, opts.pruned, a1, ad, -1, c, 1);
        });
        for (auto& p : parts) {
            for (auto& b : p.found) {
                GeneratorSet L = GeneratorSet::empty(S.space);
                L.members = b;
                res.sets.push_back(std::move(L));
            }
            res.nodes += p.nodes;
        }
        res.nodes += static_cast<long>(branches);  // the roots themselves
        return res;
    }

    Cursor start = opts.resume.value_or(Cursor{});
    WalkOutcome out = walk(C, m, opts.pruned, a1, ad, opts.node_budget, start, 0);
    for (auto& b : out.found) {
        GeneratorSet L = GeneratorSet::empty(S.space);
        L.members = b;
        res.sets.push_back(std::move(L));
    }
    res.complete = out.complete;
    res.cursor = out.cursor;
    res.nodes = out.nodes;
    return res;
}

DisjointWitness max_disjoint(const GeneratorSet& L) {
    const auto& sp = *L.space;
    std::vector<std::uint32_t> idx = L.indices();
    std::size_t k = idx.size();
    std::vector<Bitset> adj(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (sp.meet_dim(idx[i], idx[j]) == -1) {
                adj[i].set(j);
                adj[j].set(i);
            }

    std::vector<std::uint32_t> best, cur;
    auto expand = [&](auto&& self, const Bitset& P) -> void {
        if (cur.size() + P.count() <= best.size()) return;
        Bitset rest = P;
        for (std::uint32_t v : P.to_indices()) {
            if (cur.size() + rest.count() <= best.size()) return;
            rest.reset(v);
            cur.push_back(v);
            if (cur.size() > best.size()) best = cur;
            Bitset next = rest;
            next &= adj[v];
            self(self, next);
            cur.pop_back();
        }
    };
    Bitset all(k);
    all = all.complement();
    expand(expand, all);

    DisjointWitness w;
    w.size = best.size();
    std::vector<std::uint32_t> members;
    for (std::uint32_t b : best) members.push_back(idx[b]);
    w.witness = GeneratorSet::of(L.space, members);
    return w;
}

X1Report classify_x1(const CLContext& C, const EnumerationOptions& opts) {
    EnumerationResult res = exhaustive_degree_one(C, 1, opts);
    const auto& sp = *C.S.space;
    X1Report rep;
    rep.complete = res.complete;
    rep.found = res.sets.size();
    for (auto& L : res.sets) {
        bool pencil = false;
        for (std::size_t p = 0; p < sp.num_points() && !pencil; ++p)
            pencil = sp.pencil(p) == L.members;
        if (!pencil) rep.non_pencils.push_back(L);
    }
    rep.confirmed =
        res.complete && rep.non_pencils.empty() && rep.found == sp.num_points();
    return rep;
}

OneClassX1 exhaustive_one_class_x1(const scheme::OneClassScheme& O) {
    BigInt denom = 1;
    for (int i = 1; i <= O.parent->d - 2; ++i)
        denom *= algebra::q_pow(O.parent->q, HalfInt(i)) + 1;
    if (!denom.fits_ulong_p() || denom.get_ui() > O.n)
        throw std::invalid_argument("exhaustive_one_class_x1: restricted pencil too large");
    std::size_t m = denom.get_ui();
    capacity_guard(O.n, m, false);

    OneClassX1 out;
    std::vector<std::uint32_t> pick;
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        if (pick.size() == m) {
            Bitset b(O.n);
            for (std::uint32_t v : pick) b.set(v);
            if (clsets::one_class_is_cl(O, b)) out.sets.push_back(b);
            return;
        }
        for (std::uint32_t c = start; c + (m - pick.size()) <= O.n; ++c) {
            pick.push_back(c);
            self(self, c + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace clpolar::search
