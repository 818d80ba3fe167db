#include "lel/big_float.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace lel {

namespace {
long max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat BigFloat::from(double x, long prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from(long x, long prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from(const Rational& q, long prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from(const Integer& z, long prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::catalan(long prec) {
  BigFloat r(prec);
  mpfr_const_catalan(r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 2;
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
  int need = mpfr_snprintf(nullptr, 0, fmt, v_);
  std::vector<char> buf(static_cast<size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
  return std::string(buf.data());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_log(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat pow_si(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

BigFloat round_to(const BigFloat& a, long prec) {
  BigFloat r(prec);
  mpfr_set(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

}  // namespace lel
