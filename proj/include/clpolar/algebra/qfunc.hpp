#pragma once

#include <gmpxx.h>

#include "clpolar/algebra/halfint.hpp"

namespace clpolar::algebra {

using BigInt = mpz_class;
using Rational = mpq_class;

// binomial(n, 2) extended by binom2(n) = 0 for n < 2
constexpr long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Gaussian binomial [a choose b]_q; zero when b < 0 or b > a.
BigInt gaussian_binomial(int a, int b, int q);

// q^e for half-integer e >= 0. Requires q to be a perfect square when e is
// not an integer; throws std::domain_error otherwise.
BigInt q_pow(int q, HalfInt e);

// Largest integer r with r*r == q, or 0 if q is not a perfect square.
int exact_sqrt(int q);

} // namespace clpolar::algebra
