#ifndef LEL_RATIONAL_HPP
#define LEL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lel/errors.hpp"

namespace lel {

// Exact arithmetic scalars. mpq_class keeps values canonical (lowest terms,
// positive denominator) through all arithmetic, which is exactly the ring
// contract we need; Integer is the denominator-cleared workhorse.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "num", "num/den" and a leading sign; exact, no rounding.
Rational rat_from_string(const std::string& s);

// Emits "num" or "num/den", matching rat_from_string bit-exactly.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace lel

#endif
