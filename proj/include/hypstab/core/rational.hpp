#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hypstab {

using Rational = mpq_class;
using Integer = mpz_class;

// canonicalized num/den (mpq_class(n, d) alone does not canonicalize)
inline Rational frac(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// "num/den", or just "num" when den == 1
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
// accepts "a", "-a", "a/b"
Rational parse_rational(const std::string& s);

Integer binomial(long n, long k);
Integer factorial(long n);
Integer ipow(const Integer& b, unsigned long e);
Rational rpow(const Rational& b, long e);

int mobius(long n);
std::vector<long> divisors(long n);
// number of monic irreducibles of degree n over F_q
Integer necklace(const Integer& q, long n);

}  // namespace hypstab
