#include "clpolar/algebra/qfunc.hpp"

#include <stdexcept>

namespace clpolar::algebra {

BigInt gaussian_binomial(int a, int b, int q) {
    if (a < 0) throw std::domain_error("gaussian_binomial: a < 0");
    if (q < 2) throw std::domain_error("gaussian_binomial: q < 2");
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    // prod_{i=1}^{b} (q^{a-b+i} - 1) / (q^i - 1); the division is exact.
    BigInt Q = q;
    BigInt num = 1, den = 1;
    for (int i = 1; i <= b; ++i) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(a - b + i));
        num *= t - 1;
        mpz_pow_ui(t.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(i));
        den *= t - 1;
    }
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

int exact_sqrt(int q) {
    for (int r = 1; r * r <= q; ++r)
        if (r * r == q) return r;
    return 0;
}

BigInt q_pow(int q, HalfInt e) {
    if (q < 2) throw std::domain_error("q_pow: q < 2");
    if (e.twice < 0) throw std::domain_error("q_pow: negative exponent");
    BigInt base;
    unsigned long exp;
    if (e.is_integer()) {
        base = q;
        exp = static_cast<unsigned long>(e.whole());
    } else {
        int r = exact_sqrt(q);
        if (r == 0) throw std::domain_error("q_pow: half-integer exponent needs square q");
        base = r;
        exp = static_cast<unsigned long>(e.twice);
    }
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

} // namespace clpolar::algebra
