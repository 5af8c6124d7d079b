#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace clpolar::algebra {

// GF(q) for q in {2,3,4,5,7,8,9}. Elements are encoded as 0..q-1; for an
// extension field GF(p^h) the encoding is the base-p digit vector of the
// polynomial representation, so 0 and 1 are always the field's 0 and 1.
//
// Multiplication runs on log/antilog tables over a fixed primitive element:
// the documented generators are 1 (q=2), 2 (q=3), 2 (q=5), 3 (q=7) and the
// class of x modulo the primitive polynomials
//   x^2 + x + 1   (q=4),  x^3 + x + 1   (q=8),  x^2 + 2x + 2  (q=9).
class FiniteField {
public:
    static const FiniteField& get(int q); // throws std::domain_error if unsupported
    static bool supported(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return h_; }
    // square root of q as field size, 0 when q is not a square
    int sqrt_q() const { return sqrt_q_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const; // throws std::domain_error on 0
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long e) const;

    // Frobenius x -> x^p
    int frobenius(int a) const { return frob_[a]; }
    // x -> x^sqrt(q); identity for prime fields of square order does not
    // arise here (q=4,9 are the only squares). Throws when q is not a square.
    int conj(int a) const;

    int primitive_element() const { return gen_; }

private:
    explicit FiniteField(int q);

    int q_, p_, h_, gen_, sqrt_q_;
    std::vector<int> add_;     // q*q
    std::vector<int> neg_;     // q
    std::vector<int> log_;     // q (log_[0] unused)
    std::vector<int> antilog_; // q-1
    std::vector<int> frob_;    // q
    std::vector<int> conj_;    // q (empty when q is not a square)
};

} // namespace clpolar::algebra
