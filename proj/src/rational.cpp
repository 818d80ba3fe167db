#include "lel/rational.hpp"

namespace lel {

Rational rat_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::empty_input, "empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    fail(Errc::bad_input, "not a rational literal: '" + s + "'");
  if (q.get_den() == 0)
    fail(Errc::division_by_zero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace lel
