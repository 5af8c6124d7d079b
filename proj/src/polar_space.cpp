#include "clpolar/geometry/polar_space.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace clpolar::geometry {

namespace {

std::string flatten_basis(const GFMat& m) {
    std::string s;
    s.reserve(m.rows.size() * m.cols);
    for (const auto& r : m.rows)
        for (auto x : r) s.push_back(static_cast<char>(x));
    return s;
}

int functional_dot(const Vec& h, const Vec& v, const FiniteField& F) {
    int acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        acc = F.add(acc, F.mul(h[i], v[i]));
    return acc;
}

// lexicographically first (b, c) with t^2 + b t + c irreducible over GF(q)
std::pair<int, int> irreducible_quadratic(const FiniteField& F) {
    for (int b = 0; b < F.q(); ++b)
        for (int c = 0; c < F.q(); ++c) {
            bool has_root = false;
            for (int t = 0; t < F.q() && !has_root; ++t)
                if (F.add(F.add(F.mul(t, t), F.mul(b, t)), c) == 0) has_root = true;
            if (!has_root) return {b, c};
        }
    throw std::logic_error("no irreducible quadratic found");
}

} // namespace

std::vector<Vec> projective_points(int n, int q) {
    std::vector<Vec> out;
    for (int lead = n; lead >= 0; --lead) {
        Vec v(static_cast<std::size_t>(n) + 1, 0);
        v[lead] = 1;
        while (true) {
            out.push_back(v);
            // advance the suffix (positions lead+1..n) as a base-q counter,
            // least significant digit last: this is lexicographic order
            int pos = n;
            while (pos > lead) {
                if (v[pos] + 1 < q) {
                    ++v[pos];
                    break;
                }
                v[pos] = 0;
                --pos;
            }
            if (pos == lead) break;
        }
    }
    return out;
}

void PolarSpace::init_forms() {
    const int m = n_ + 1;
    form_ = FormData{};
    auto zero_mat = [&](GFMat& g) {
        g.cols = static_cast<std::size_t>(m);
        g.rows.assign(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(m), 0));
    };
    switch (kind_.family) {
        case Family::Symplectic: {
            zero_mat(form_.gram);
            for (int i = 0; i < kind_.d; ++i) {
                form_.gram.rows[2 * i][2 * i + 1] = 1;
                form_.gram.rows[2 * i + 1][2 * i] = static_cast<std::uint8_t>(F_->neg(1));
            }
            return;
        }
        case Family::HermitianOdd:
        case Family::HermitianEven: {
            form_.hermitian = true;
            return;
        }
        case Family::HyperbolicQuadric: {
            form_.has_quadratic = true;
            zero_mat(form_.quad);
            for (int i = 0; i < kind_.d; ++i) form_.quad.rows[2 * i][2 * i + 1] = 1;
            break;
        }
        case Family::ParabolicQuadric: {
            form_.has_quadratic = true;
            zero_mat(form_.quad);
            form_.quad.rows[0][0] = 1;
            for (int i = 0; i < kind_.d; ++i) form_.quad.rows[2 * i + 1][2 * i + 2] = 1;
            break;
        }
        case Family::EllipticQuadric: {
            form_.has_quadratic = true;
            zero_mat(form_.quad);
            auto [b, c] = irreducible_quadratic(*F_);
            form_.quad.rows[0][0] = 1;
            form_.quad.rows[0][1] = static_cast<std::uint8_t>(b);
            form_.quad.rows[1][1] = static_cast<std::uint8_t>(c);
            for (int i = 1; i <= kind_.d; ++i) form_.quad.rows[2 * i][2 * i + 1] = 1;
            break;
        }
    }
    // Gram matrix of the polar form b(x,y) = Q(x+y) - Q(x) - Q(y)
    zero_mat(form_.gram);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int qij = i <= j ? form_.quad.rows[i][j] : 0;
            int qji = j <= i ? form_.quad.rows[j][i] : 0;
            int v = i == j ? F_->mul(F_->add(1, 1), qij) : F_->add(qij, qji);
            form_.gram.rows[i][j] = static_cast<std::uint8_t>(v);
        }
}

int PolarSpace::pair_form(const Vec& x, const Vec& y) const {
    const FiniteField& F = *F_;
    int acc = 0;
    if (form_.hermitian) {
        for (std::size_t i = 0; i < x.size(); ++i)
            acc = F.add(acc, F.mul(x[i], F.conj(y[i])));
        return acc;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        int row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            row = F.add(row, F.mul(form_.gram.rows[i][j], y[j]));
        acc = F.add(acc, F.mul(x[i], row));
    }
    return acc;
}

int PolarSpace::quad_form(const Vec& x) const {
    if (!form_.has_quadratic) throw std::logic_error("quad_form: space has no quadratic form");
    const FiniteField& F = *F_;
    int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = i; j < x.size(); ++j) {
            int c = form_.quad.rows[i][j];
            if (c == 0 || x[j] == 0) continue;
            acc = F.add(acc, F.mul(c, F.mul(x[i], x[j])));
        }
    }
    return acc;
}

bool PolarSpace::is_singular(const Vec& x) const {
    if (form_.has_quadratic) return quad_form(x) == 0;
    if (form_.hermitian) return pair_form(x, x) == 0;
    return true; // symplectic: every point is isotropic
}

bool PolarSpace::is_totally_isotropic(const GFMat& rows) const {
    for (std::size_t i = 0; i < rows.rows.size(); ++i) {
        if (!is_singular(rows.rows[i])) return false;
        for (std::size_t j = i + 1; j < rows.rows.size(); ++j)
            if (pair_form(rows.rows[i], rows.rows[j]) != 0) return false;
    }
    return true;
}

void PolarSpace::enumerate_points() {
    for (auto& v : projective_points(n_, kind_.q)) {
        if (!is_singular(v)) continue;
        point_idx_.emplace(encode_vec(v, kind_.q), static_cast<std::uint32_t>(points_.size()));
        points_.push_back(std::move(v));
    }
}

long PolarSpace::point_index(Vec v) const {
    normalize_point(v, *F_);
    auto it = point_idx_.find(encode_vec(v, kind_.q));
    return it == point_idx_.end() ? -1 : static_cast<long>(it->second);
}

long PolarSpace::generator_index(const GFMat& basis) const {
    GFMat c = basis;
    gf_rref(c, *F_);
    auto it = gen_idx_.find(std::hash<std::string>{}(flatten_basis(c)));
    if (it == gen_idx_.end()) return -1;
    // hash map stores one index per hash; verify against the actual basis
    if (flatten_basis(gens_[it->second].basis) != flatten_basis(c)) return -1;
    return static_cast<long>(it->second);
}

void PolarSpace::enumerate_generators(std::size_t cap) {
    // expected generator count prod_{i=0}^{d-1} (q^{i+e} + 1)
    BigInt expected = 1;
    for (int i = 0; i < kind_.d; ++i)
        expected *= algebra::q_pow(kind_.q, e() + i) + 1;
    if (expected > BigInt(static_cast<unsigned long>(cap)))
        throw CapacityError(label(kind_) + " has " + expected.get_str() +
                            " generators, over the cap of " + std::to_string(cap));

    const FiniteField& F = *F_;
    const std::size_t P = points_.size();
    const int d = kind_.d;

    std::vector<Vec> span_vecs;                 // all vectors of the current span
    span_vecs.push_back(Vec(static_cast<std::size_t>(n_) + 1, 0));
    std::vector<std::uint32_t> span_pts;        // sorted point indices of the span
    GFMat basis;
    basis.cols = static_cast<std::size_t>(n_) + 1;

    // orderly depth-first search: a point extends the chain only if it is the
    // smallest point the extension adds, so every subspace is reached along
    // exactly one chain
    auto rec = [&](auto&& self, long last) -> void {
        if (static_cast<int>(basis.rows.size()) == d) {
            GFMat canon = basis;
            gf_rref(canon, F);
            if (canon.rows.size() != static_cast<std::size_t>(d))
                throw std::logic_error("generator basis lost rank");
            Generator g;
            g.basis = std::move(canon);
            g.points = Bitset(P);
            for (auto pi : span_pts) g.points.set(pi);
            gens_.push_back(std::move(g));
            return;
        }
        const std::size_t k = basis.rows.size();
        for (std::size_t p = static_cast<std::size_t>(last + 1); p < P; ++p) {
            if (std::binary_search(span_pts.begin(), span_pts.end(), static_cast<std::uint32_t>(p)))
                continue;
            const Vec& pv = points_[p];
            bool ok = true;
            for (const auto& row : basis.rows)
                if (pair_form(pv, row) != 0) { ok = false; break; }
            if (!ok) continue;

            // points the extension adds: one per vector of the current span
            std::vector<std::uint32_t> new_pts;
            new_pts.reserve(span_vecs.size());
            for (const auto& v : span_vecs) {
                Vec u = add_scaled(v, pv, 1, F);
                normalize_point(u, F);
                auto it = point_idx_.find(encode_vec(u, kind_.q));
                if (it == point_idx_.end())
                    throw std::logic_error("span left the point set");
                if (it->second < p) { ok = false; break; }
                new_pts.push_back(it->second);
            }
            if (!ok) continue;

            const std::size_t save_vecs = span_vecs.size();
            const std::size_t save_pts = span_pts.size();
            for (std::size_t vi = 0; vi < save_vecs; ++vi)
                for (int c = 1; c < F.q(); ++c)
                    span_vecs.push_back(add_scaled(span_vecs[vi], pv, c, F));
            span_pts.insert(span_pts.end(), new_pts.begin(), new_pts.end());
            std::sort(span_pts.begin(), span_pts.end());
            basis.rows.push_back(pv);

            self(self, static_cast<long>(p));

            basis.rows.pop_back();
            span_pts.resize(save_pts);
            std::sort(span_pts.begin(), span_pts.end());
            span_vecs.resize(save_vecs);
        }
    };
    rec(rec, -1);

    if (BigInt(static_cast<unsigned long>(gens_.size())) != expected)
        throw std::logic_error(label(kind_) + ": enumerated " + std::to_string(gens_.size()) +
                               " generators, expected " + expected.get_str());
}

void PolarSpace::finalize(bool check_counts) {
    if (check_counts) {
        // point count (q^{d+e-1} + 1)(q^d - 1)/(q - 1)
        BigInt pts = (algebra::q_pow(kind_.q, e() + (kind_.d - 1)) + 1) *
                     (algebra::q_pow(kind_.q, HalfInt(kind_.d)) - 1) / (kind_.q - 1);
        if (pts != BigInt(static_cast<unsigned long>(points_.size())))
            throw std::logic_error(label(kind_) + ": " + std::to_string(points_.size()) +
                                   " points, expected " + pts.get_str());
        BigInt gexp = 1;
        for (int i = 0; i < kind_.d; ++i)
            gexp *= algebra::q_pow(kind_.q, e() + i) + 1;
        if (gexp != BigInt(static_cast<unsigned long>(gens_.size())))
            throw std::logic_error(label(kind_) + ": " + std::to_string(gens_.size()) +
                                   " generators, expected " + gexp.get_str());
    }

    std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) {
        return flatten_basis(a.basis) < flatten_basis(b.basis);
    });
    gen_idx_.clear();
    for (std::size_t i = 0; i < gens_.size(); ++i)
        gen_idx_.emplace(std::hash<std::string>{}(flatten_basis(gens_[i].basis)),
                         static_cast<std::uint32_t>(i));
    if (gen_idx_.size() != gens_.size())
        throw std::logic_error("generator hash collision or duplicate generator");

    pencils_.assign(points_.size(), Bitset(gens_.size()));
    for (std::size_t g = 0; g < gens_.size(); ++g)
        gens_[g].points.for_each([&](std::size_t p) { pencils_[p].set(g); });

    dim_to_count_.assign(static_cast<std::size_t>(kind_.d) + 1, 0);
    std::size_t c = 0, pw = 1;
    for (int k = 0; k <= kind_.d; ++k) {
        dim_to_count_[k] = c; // (q^k - 1)/(q - 1)
        c += pw;
        pw *= static_cast<std::size_t>(kind_.q);
    }
}

int PolarSpace::meet_dim(std::size_t g1, std::size_t g2) const {
    std::size_t common = gens_[g1].points.count_and(gens_[g2].points);
    for (int k = kind_.d; k >= 0; --k)
        if (dim_to_count_[k] == common) return k - 1;
    throw std::logic_error("meet point count is not a subspace size");
}

GFMat PolarSpace::perp(const GFMat& subspace_basis) const {
    GFMat functionals;
    functionals.cols = static_cast<std::size_t>(n_) + 1;
    for (const auto& s : subspace_basis.rows) {
        Vec f(functionals.cols, 0);
        if (form_.hermitian) {
            for (std::size_t j = 0; j < f.size(); ++j)
                f[j] = static_cast<std::uint8_t>(F_->conj(s[j]));
        } else {
            for (std::size_t j = 0; j < f.size(); ++j) {
                int acc = 0;
                for (std::size_t i = 0; i < f.size(); ++i)
                    acc = F_->add(acc, F_->mul(s[i], form_.gram.rows[i][j]));
                f[j] = static_cast<std::uint8_t>(acc);
            }
        }
        functionals.rows.push_back(std::move(f));
    }
    GFMat out;
    out.cols = functionals.cols;
    out.rows = gf_kernel(functionals, *F_);
    gf_rref(out, *F_);
    return out;
}

bool PolarSpace::has_nucleus() const {
    return kind_.family == Family::ParabolicQuadric && kind_.q % 2 == 0;
}

Vec PolarSpace::nucleus() const {
    if (!has_nucleus()) throw std::logic_error("nucleus: not a parabolic quadric in even characteristic");
    auto rad = gf_kernel(form_.gram, *F_);
    if (rad.size() != 1) throw std::logic_error("nucleus: radical dimension != 1");
    Vec v = rad[0];
    normalize_point(v, *F_);
    return v;
}

std::shared_ptr<const PolarSpace> PolarSpace::build(SpaceKind kind, std::size_t generator_cap) {
    validate_kind(kind);
    auto sp = std::shared_ptr<PolarSpace>(new PolarSpace());
    sp->kind_ = kind;
    sp->n_ = ambient_dim(kind);
    sp->F_ = &FiniteField::get(kind.q);
    sp->init_forms();
    sp->enumerate_points();
    sp->enumerate_generators(generator_cap);
    sp->finalize(true);
    return sp;
}

// --- sections ---------------------------------------------------------------

struct SectionBuilder {
    static std::shared_ptr<const PolarSpace> hyperbolic_view(
        const std::shared_ptr<const PolarSpace>& parent,
        const std::vector<std::uint32_t>& sec_points,
        const std::vector<std::uint32_t>& sec_gens) {
        auto sp = std::shared_ptr<PolarSpace>(new PolarSpace());
        sp->kind_ = SpaceKind{Family::HyperbolicQuadric, parent->rank(), parent->q()};
        sp->n_ = parent->ambient();
        sp->F_ = &parent->field();
        sp->form_ = parent->form();
        sp->parent_ = parent;

        std::vector<std::uint32_t> parent_to_new(parent->num_points(),
                                                 std::numeric_limits<std::uint32_t>::max());
        for (auto pi : sec_points) {
            parent_to_new[pi] = static_cast<std::uint32_t>(sp->points_.size());
            sp->point_idx_.emplace(encode_vec(parent->point(pi), sp->kind_.q),
                                   static_cast<std::uint32_t>(sp->points_.size()));
            sp->points_.push_back(parent->point(pi));
            sp->parent_points_.push_back(pi);
        }
        for (auto gi : sec_gens) {
            Generator g;
            g.basis = parent->generator(gi).basis;
            g.points = Bitset(sp->points_.size());
            parent->generator(gi).points.for_each([&](std::size_t p) {
                g.points.set(parent_to_new[p]);
            });
            sp->gens_.push_back(std::move(g));
            sp->parent_gens_.push_back(gi);
        }
        // canonical order and the parent maps must stay aligned
        std::vector<std::size_t> order(sp->gens_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return flatten_basis(sp->gens_[a].basis) < flatten_basis(sp->gens_[b].basis);
        });
        std::vector<Generator> gs;
        std::vector<std::uint32_t> pg;
        for (auto i : order) {
            gs.push_back(std::move(sp->gens_[i]));
            pg.push_back(sp->parent_gens_[i]);
        }
        sp->gens_ = std::move(gs);
        sp->parent_gens_ = std::move(pg);
        sp->finalize(true);
        return sp;
    }
};

namespace {

bool tangent_hyperplane(const PolarSpace& parent, const Vec& h) {
    const FiniteField& F = parent.field();
    if (parent.has_nucleus())
        return functional_dot(h, parent.nucleus(), F) == 0;
    // odd characteristic: the section is singular iff the polar form restricted
    // to the hyperplane is degenerate
    GFMat hm;
    hm.cols = h.size();
    hm.rows.push_back(h);
    auto basis = gf_kernel(hm, F);
    GFMat gram;
    gram.cols = basis.size();
    for (const auto& u : basis) {
        Vec row(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            row[j] = static_cast<std::uint8_t>(parent.pair_form(u, basis[j]));
        gram.rows.push_back(std::move(row));
    }
    return gf_rank(gram, F) < basis.size();
}

} // namespace

Section hyperplane_section(const std::shared_ptr<const PolarSpace>& parent, const Vec& hyperplane) {
    if (parent->kind().family != Family::ParabolicQuadric)
        throw std::invalid_argument("hyperplane_section: parent must be a parabolic quadric");
    if (hyperplane.size() != static_cast<std::size_t>(parent->ambient()) + 1)
        throw std::invalid_argument("hyperplane_section: coefficient count mismatch");
    Vec h = hyperplane;
    normalize_point(h, parent->field());
    bool nonzero = false;
    for (auto x : h) nonzero = nonzero || x != 0;
    if (!nonzero) throw std::invalid_argument("hyperplane_section: zero functional");

    Section sec;
    sec.hyperplane = h;

    std::vector<std::uint32_t> sec_points;
    Bitset in_section(parent->num_points());
    for (std::size_t p = 0; p < parent->num_points(); ++p)
        if (functional_dot(h, parent->point(p), parent->field()) == 0) {
            sec_points.push_back(static_cast<std::uint32_t>(p));
            in_section.set(p);
        }
    sec.point_count = sec_points.size();

    for (std::size_t g = 0; g < parent->num_generators(); ++g)
        if (parent->generator(g).points.is_subset_of(in_section))
            sec.contained_generators.push_back(static_cast<std::uint32_t>(g));

    if (tangent_hyperplane(*parent, h)) {
        sec.type = SectionType::Cone;
        return sec;
    }
    if (!sec.contained_generators.empty()) {
        sec.type = SectionType::Hyperbolic;
        sec.space = SectionBuilder::hyperbolic_view(parent, sec_points, sec.contained_generators);
        return sec;
    }
    sec.type = SectionType::Elliptic;
    sec.max_isotropic_dim = max_isotropic_dim_within(*parent, sec_points);
    return sec;
}

std::vector<Vec> hyperbolic_hyperplanes(const PolarSpace& parent, std::size_t count) {
    if (parent.kind().family != Family::ParabolicQuadric)
        throw std::invalid_argument("hyperbolic_hyperplanes: parent must be a parabolic quadric");
    const FiniteField& F = parent.field();
    std::vector<Vec> out;
    for (auto& h : projective_points(parent.ambient(), parent.q())) {
        if (out.size() >= count) break;
        if (tangent_hyperplane(parent, h)) continue;
        Bitset in_section(parent.num_points());
        for (std::size_t p = 0; p < parent.num_points(); ++p)
            if (functional_dot(h, parent.point(p), F) == 0) in_section.set(p);
        for (std::size_t g = 0; g < parent.num_generators(); ++g)
            if (parent.generator(g).points.is_subset_of(in_section)) {
                out.push_back(h);
                break;
            }
    }
    return out;
}

NucleusProjection nucleus_projection(const std::shared_ptr<const PolarSpace>& parabolic) {
    if (!parabolic->has_nucleus())
        throw std::invalid_argument("nucleus_projection: needs a parabolic quadric, q even");
    const FiniteField& F = parabolic->field();
    Vec nuc = parabolic->nucleus();
    if (nuc[0] != 1)
        throw std::logic_error("nucleus_projection: nucleus is not (1,0,...,0)");

    NucleusProjection np;
    auto W = PolarSpace::build(SpaceKind{Family::Symplectic, parabolic->rank(), parabolic->q()});
    np.symplectic = W;

    auto project = [&](const Vec& v) {
        Vec w(v.begin() + 1, v.end());
        normalize_point(w, F);
        return w;
    };

    np.point_map.resize(parabolic->num_points());
    std::vector<bool> seen_p(W->num_points(), false);
    for (std::size_t p = 0; p < parabolic->num_points(); ++p) {
        long idx = W->point_index(project(parabolic->point(p)));
        if (idx < 0 || seen_p[static_cast<std::size_t>(idx)])
            throw std::logic_error("nucleus_projection: point map is not a bijection");
        seen_p[static_cast<std::size_t>(idx)] = true;
        np.point_map[p] = static_cast<std::uint32_t>(idx);
    }

    np.generator_map.resize(parabolic->num_generators());
    std::vector<bool> seen_g(W->num_generators(), false);
    for (std::size_t g = 0; g < parabolic->num_generators(); ++g) {
        GFMat proj;
        proj.cols = static_cast<std::size_t>(W->ambient()) + 1;
        for (const auto& row : parabolic->generator(g).basis.rows)
            proj.rows.push_back(Vec(row.begin() + 1, row.end()));
        long idx = W->generator_index(proj);
        if (idx < 0 || seen_g[static_cast<std::size_t>(idx)])
            throw std::logic_error("nucleus_projection: generator map is not a bijection");
        seen_g[static_cast<std::size_t>(idx)] = true;
        np.generator_map[g] = static_cast<std::uint32_t>(idx);
    }
    return np;
}

int max_isotropic_dim_within(const PolarSpace& space, const std::vector<std::uint32_t>& point_subset) {
    const FiniteField& F = space.field();
    int best = -1;
    std::vector<Vec> span_vecs;
    span_vecs.push_back(Vec(static_cast<std::size_t>(space.ambient()) + 1, 0));
    std::vector<std::uint32_t> span_pts;
    GFMat basis;
    basis.cols = static_cast<std::size_t>(space.ambient()) + 1;
    Bitset allowed(space.num_points());
    for (auto p : point_subset) allowed.set(p);

    auto rec = [&](auto&& self, std::size_t from) -> void {
        best = std::max(best, static_cast<int>(basis.rows.size()) - 1);
        for (std::size_t t = from; t < point_subset.size(); ++t) {
            std::uint32_t p = point_subset[t];
            if (std::binary_search(span_pts.begin(), span_pts.end(), p)) continue;
            const Vec& pv = space.point(p);
            bool ok = true;
            for (const auto& row : basis.rows)
                if (space.pair_form(pv, row) != 0) { ok = false; break; }
            if (!ok) continue;
            std::vector<std::uint32_t> new_pts;
            for (const auto& v : span_vecs) {
                Vec u = add_scaled(v, pv, 1, F);
                normalize_point(u, F);
                long idx = space.point_index(u);
                if (idx < 0 || !allowed.test(static_cast<std::size_t>(idx))) { ok = false; break; }
                new_pts.push_back(static_cast<std::uint32_t>(idx));
            }
            if (!ok) continue;
            const std::size_t save_vecs = span_vecs.size();
            const std::size_t save_pts = span_pts.size();
            for (std::size_t vi = 0; vi < save_vecs; ++vi)
                for (int c = 1; c < F.q(); ++c)
                    span_vecs.push_back(add_scaled(span_vecs[vi], pv, c, F));
            span_pts.insert(span_pts.end(), new_pts.begin(), new_pts.end());
            std::sort(span_pts.begin(), span_pts.end());
            basis.rows.push_back(pv);
            self(self, t + 1);
            basis.rows.pop_back();
            span_pts.resize(save_pts);
            std::sort(span_pts.begin(), span_pts.end());
            span_vecs.resize(save_vecs);
        }
    };
    rec(rec, 0);
    return best;
}

} // namespace clpolar::geometry
