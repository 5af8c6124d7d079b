#include "clpolar/geometry/gf_linalg.hpp"

#include <algorithm>

namespace clpolar::geometry {

std::vector<std::size_t> gf_rref(GFMat& m, const FiniteField& F) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows.size() && m.rows[sel][col] == 0) ++sel;
        if (sel == m.rows.size()) continue;
        std::swap(m.rows[sel], m.rows[row]);
        int inv = F.inv(m.rows[row][col]);
        if (inv != 1)
            for (std::size_t j = col; j < m.cols; ++j)
                m.rows[row][j] = static_cast<std::uint8_t>(F.mul(m.rows[row][j], inv));
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (i == row) continue;
            int c = m.rows[i][col];
            if (c == 0) continue;
            int nc = F.neg(c);
            for (std::size_t j = col; j < m.cols; ++j)
                m.rows[i][j] = static_cast<std::uint8_t>(
                    F.add(m.rows[i][j], F.mul(nc, m.rows[row][j])));
        }
        pivots.push_back(col);
        ++row;
    }
    m.rows.resize(row);
    return pivots;
}

std::size_t gf_rank(GFMat m, const FiniteField& F) { return gf_rref(m, F).size(); }

std::vector<Vec> gf_kernel(const GFMat& m, const FiniteField& F) {
    GFMat e = m;
    auto pivots = gf_rref(e, F);
    std::vector<long> pivot_of_col(m.cols, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<long>(r);
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        Vec v(m.cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = static_cast<std::uint8_t>(F.neg(e.rows[r][f]));
        basis.push_back(std::move(v));
    }
    return basis;
}

void normalize_point(Vec& v, const FiniteField& F) {
    for (auto x : v) {
        if (x == 0) continue;
        if (x != 1) {
            int inv = F.inv(x);
            for (auto& y : v) y = static_cast<std::uint8_t>(F.mul(y, inv));
        }
        return;
    }
}

std::uint64_t encode_vec(const Vec& v, int q) {
    std::uint64_t e = 0;
    for (std::size_t i = v.size(); i-- > 0;) e = e * static_cast<std::uint64_t>(q) + v[i];
    return e;
}

Vec add_scaled(const Vec& v, const Vec& w, int c, const FiniteField& F) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = static_cast<std::uint8_t>(F.add(v[i], F.mul(c, w[i])));
    return r;
}

} // namespace clpolar::geometry
