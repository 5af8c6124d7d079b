#include "clpolar/algebra/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace clpolar::algebra {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

std::vector<std::size_t> RationalMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = col; j < cols_; ++j)
                std::swap(at(sel, j), at(row, j));
        Rational p = at(row, col);
        for (std::size_t j = col; j < cols_; ++j) at(row, j) /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix c = *this;
    return c.rref().size();
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
    IntRows m;
    m.cols = cols_;
    m.r.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        BigInt den = 1;
        for (std::size_t j = 0; j < cols_; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), at(i, j).get_den_mpz_t());
        m.r[i].resize(cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            Rational v = at(i, j) * Rational(den);
            v.canonicalize();
            m.r[i][j] = v.get_num();
        }
    }
    auto ker = int_kernel_basis(std::move(m));
    std::vector<std::vector<Rational>> out;
    out.reserve(ker.size());
    for (auto& k : ker) {
        std::vector<Rational> v(k.size());
        for (std::size_t j = 0; j < k.size(); ++j) v[j] = Rational(k[j]);
        out.push_back(std::move(v));
    }
    return out;
}

bool RationalMatrix::in_column_space(const std::vector<Rational>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("in_column_space: size mismatch");
    RationalMatrix t = transposed();
    auto pivots = t.rref();
    std::vector<Rational> w = v;
    std::size_t r = 0;
    for (auto col : pivots) {
        if (w[col] != 0) {
            Rational f = w[col] / t.at(r, col);
            for (std::size_t j = 0; j < rows_; ++j) w[j] -= f * t.at(r, j);
        }
        ++r;
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

namespace {

void content_reduce(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& x : row) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& x : row)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// row_i := row_i * p - row_pivot * c, content-reduced afterwards
void eliminate(std::vector<BigInt>& target, const std::vector<BigInt>& pivot_row,
               const BigInt& p, const BigInt& c, std::size_t from) {
    BigInt t;
    for (std::size_t j = from; j < target.size(); ++j) {
        target[j] *= p;
        t = pivot_row[j] * c;
        target[j] -= t;
    }
    content_reduce(target);
}

} // namespace

std::vector<std::size_t> int_echelon(IntRows& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t nrows = m.r.size();
    for (auto& r : m.r) content_reduce(r);
    for (std::size_t col = 0; col < m.cols && row < nrows; ++col) {
        // smallest nonzero |pivot| keeps the integer growth down
        std::size_t sel = nrows;
        for (std::size_t i = row; i < nrows; ++i) {
            if (m.r[i][col] == 0) continue;
            if (sel == nrows ||
                mpz_cmpabs(m.r[i][col].get_mpz_t(), m.r[sel][col].get_mpz_t()) < 0)
                sel = i;
        }
        if (sel == nrows) continue;
        std::swap(m.r[sel], m.r[row]);
        if (m.r[row][col] < 0)
            for (auto& x : m.r[row]) x = -x;
        const std::vector<BigInt>& pr = m.r[row];
        BigInt p = pr[col];
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m.r[i][col] == 0) continue;
            BigInt c = m.r[i][col];
            BigInt g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
            BigInt pf, cf;
            mpz_divexact(pf.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(cf.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
            // rows above the pivot get rescaled by pf, so touch them in full
            eliminate(m.r[i], pr, pf, cf, i < row ? 0 : col);
        }
        pivots.push_back(col);
        ++row;
    }
    // drop zero rows (all rows below `row` are zero by construction)
    m.r.resize(row);
    return pivots;
}

std::size_t int_rank(IntRows m) { return int_echelon(m).size(); }

std::vector<std::vector<BigInt>> int_kernel_basis(IntRows m) {
    const std::size_t n = m.cols;
    auto pivots = int_echelon(m);
    std::vector<long> pivot_of_col(n, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<long>(r);

    BigInt L = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), m.r[r][pivots[r]].get_mpz_t());

    std::vector<std::vector<BigInt>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<BigInt> v(n, BigInt(0));
        v[f] = L;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (m.r[r][f] == 0) continue;
            BigInt t = m.r[r][f] * L;
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), m.r[r][pivots[r]].get_mpz_t());
            v[pivots[r]] = -t;
        }
        content_reduce(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const IntRows& ech, const std::vector<std::size_t>& pivots,
                  const std::vector<BigInt>& v) {
    if (v.size() != ech.cols) throw std::invalid_argument("in_row_space: size mismatch");
    std::vector<BigInt> w = v;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::size_t col = pivots[r];
        if (w[col] == 0) continue;
        const BigInt& p = ech.r[r][col];
        BigInt c = w[col];
        BigInt g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), c.get_mpz_t());
        BigInt pf, cf;
        mpz_divexact(pf.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(cf.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        BigInt t;
        for (std::size_t j = 0; j < w.size(); ++j) {
            w[j] *= pf;
            t = ech.r[r][j] * cf;
            w[j] -= t;
        }
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

} // namespace clpolar::algebra
