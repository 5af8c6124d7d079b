#include "clpolar/algebra/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace clpolar::algebra {

namespace {

struct FieldSpec {
    int p, h, gen;
    // primitive polynomial x^h + c[h-1] x^{h-1} + ... + c[0], coefficients mod p
    std::array<int, 3> c;
};

// gen is a primitive element: 1 generates the trivial group of GF(2)*, and for
// the extensions the polynomial x (encoded p) is primitive by construction.
FieldSpec spec_for(int q) {
    switch (q) {
        case 2: return {2, 1, 1, {}};
        case 3: return {3, 1, 2, {}};
        case 4: return {2, 2, 2, {1, 1, 0}};   // x^2 + x + 1
        case 5: return {5, 1, 2, {}};
        case 7: return {7, 1, 3, {}};
        case 8: return {2, 3, 2, {1, 1, 0}};   // x^3 + x + 1
        case 9: return {3, 2, 3, {2, 2, 0}};   // x^2 + 2x + 2
        default: throw std::domain_error("FiniteField: unsupported q=" + std::to_string(q));
    }
}

void to_digits(int a, int p, int h, int* d) {
    for (int i = 0; i < h; ++i) { d[i] = a % p; a /= p; }
}

int from_digits(const int* d, int p, int h) {
    int a = 0;
    for (int i = h - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

} // namespace

FiniteField::FiniteField(int q) : q_(q) {
    FieldSpec s = spec_for(q);
    p_ = s.p;
    h_ = s.h;
    gen_ = s.gen;
    sqrt_q_ = 0;
    for (int r = 2; r * r <= q_; ++r)
        if (r * r == q_) sqrt_q_ = r;

    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        int da[3] = {0, 0, 0}, dn[3] = {0, 0, 0};
        to_digits(a, p_, h_, da);
        for (int i = 0; i < h_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = from_digits(dn, p_, h_);
        for (int b = 0; b < q_; ++b) {
            int db[3] = {0, 0, 0}, dsum[3] = {0, 0, 0};
            to_digits(b, p_, h_, db);
            for (int i = 0; i < h_; ++i) dsum[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = from_digits(dsum, p_, h_);
        }
    }

    // antilog by repeated multiplication with the generator; multiplication by
    // x is a digit shift reduced with the primitive polynomial.
    auto mul_by_gen = [&](int a) -> int {
        if (h_ == 1) return static_cast<int>((static_cast<long>(a) * gen_) % p_);
        int d[4] = {0, 0, 0, 0};
        to_digits(a, p_, h_, d);
        int carry = d[h_ - 1];
        for (int i = h_ - 1; i > 0; --i) d[i] = d[i - 1];
        d[0] = 0;
        for (int i = 0; i < h_; ++i) d[i] = (d[i] + (p_ - s.c[i]) % p_ * carry) % p_;
        return from_digits(d, p_, h_);
    };

    antilog_.resize(q_ - 1);
    log_.assign(q_, -1);
    int cur = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        antilog_[k] = cur;
        if (log_[cur] != -1)
            throw std::logic_error("FiniteField: generator is not primitive");
        log_[cur] = k;
        cur = mul_by_gen(cur);
    }
    if (cur != 1) throw std::logic_error("FiniteField: generator order mismatch");

    frob_.resize(q_);
    frob_[0] = 0;
    for (int a = 1; a < q_; ++a)
        frob_[a] = antilog_[(static_cast<long>(log_[a]) * p_) % (q_ - 1)];

    if (sqrt_q_ != 0) {
        conj_.resize(q_);
        conj_[0] = 0;
        for (int a = 1; a < q_; ++a)
            conj_[a] = antilog_[(static_cast<long>(log_[a]) * sqrt_q_) % (q_ - 1)];
    }
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::domain_error("FiniteField::inv(0)");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::pow(int a, long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("FiniteField::pow: 0 to negative power");
        return e == 0 ? 1 : 0;
    }
    long m = ((log_[a] * (e % (q_ - 1))) % (q_ - 1) + (q_ - 1)) % (q_ - 1);
    return antilog_[m];
}

int FiniteField::conj(int a) const {
    if (conj_.empty()) throw std::domain_error("FiniteField::conj: q is not a square");
    return conj_[a];
}

bool FiniteField::supported(int q) {
    switch (q) {
        case 2: case 3: case 4: case 5: case 7: case 8: case 9: return true;
        default: return false;
    }
}

const FiniteField& FiniteField::get(int q) {
    static std::mutex mu;
    static std::map<int, FiniteField> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, FiniteField(q)).first;
    return it->second;
}

} // namespace clpolar::algebra
