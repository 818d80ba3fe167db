#ifndef LEL_BIG_FLOAT_HPP
#define LEL_BIG_FLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "lel/rational.hpp"

namespace lel {

inline constexpr long kDefaultPrecision = 256;
inline constexpr long kMinPrecision = 53;

// MPFR-backed float with per-value mantissa precision. Every operation
// rounds to nearest; binary operations carry max(precision of operands).
// Values are immutable in spirit: the in-place operators exist for the
// linear-algebra kernels, which never share values across threads.
class BigFloat {
public:
  BigFloat() { mpfr_init2(v_, kDefaultPrecision); mpfr_set_zero(v_, 1); }
  explicit BigFloat(long prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from(double x, long prec = kDefaultPrecision);
  static BigFloat from(long x, long prec = kDefaultPrecision);
  static BigFloat from(const Rational& q, long prec = kDefaultPrecision);
  static BigFloat from(const Integer& z, long prec = kDefaultPrecision);
  static BigFloat pi(long prec);
  static BigFloat catalan(long prec);

  long precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal string with the given significant digits (default: full precision).
  std::string str(int digits = 0) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  // this -= a*b, one rounding. The elimination kernels live on this.
  void submul(const BigFloat& a, const BigFloat& b) {
    mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN);
    mpfr_neg(v_, v_, MPFR_RNDN);
  }
  // this += a*b, one rounding and a single MPFR call.
  void addmul(const BigFloat& a, const BigFloat& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); }
  void negate() { mpfr_neg(v_, v_, MPFR_RNDN); }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat pow_si(const BigFloat& a, long e);
  // a rounded to prec bits.
  friend BigFloat round_to(const BigFloat& a, long prec);

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

private:
  static long clamp(long prec) { return prec < kMinPrecision ? kMinPrecision : prec; }
  mpfr_t v_;
};

}  // namespace lel

#endif
