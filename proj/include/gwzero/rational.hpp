#pragma once

#include <gmpxx.h>

#include <string>

namespace gwzero {

// Coefficient field: exact arbitrary-precision rationals (GMP).
// Canonical form: reduced, denominator > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// Build a canonical rational from a (possibly unreduced) fraction.
Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// Serialization contract: "p/q" with q > 0 and reduced, or "p" when q = 1.
std::string rat_str(const Rational& r);
// Inverse of rat_str; accepts any "p/q" or "p" and canonicalizes.
Rational rat_parse(const std::string& text);

Integer factorial_z(unsigned long n);
Integer binomial_z(unsigned long n, unsigned long k);

// Multinomial coefficient n! / (k_1! ... k_m!); requires sum k_i == n.
Integer multinomial_z(unsigned long n, const std::vector<unsigned long>& ks);

// r^e for integer e; e < 0 requires r != 0.
Rational rat_pow(const Rational& r, long e);

// Bernoulli number B_n, convention B_1 = -1/2 (only |B_{2g}| is consumed
// downstream, so the sign of B_1 never matters). Memoized per process.
Rational bernoulli(unsigned n);

// b_g = (2^{2g-1}-1)/2^{2g-1} * |B_{2g}| / (2g)!  for g >= 1.
Rational lambda_g_constant(int g);

// zeta(1-k) = -B_k / k for positive even k.
Rational zeta_at_negative(int k);

} // namespace gwzero
