#ifndef LEL_PI_POLY_HPP
#define LEL_PI_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "lel/big_float.hpp"
#include "lel/rational.hpp"

namespace lel {

// Element of Q[x] with x = 1/pi, stored dense with exact rational
// coefficients, constant term first. Canonical form: no trailing zeros,
// so the zero polynomial has no coefficients and a - a == PiPoly{}.
class PiPoly {
public:
  PiPoly() = default;
  PiPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit PiPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static PiPoly constant(const Rational& a) { return PiPoly({a}); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend PiPoly operator+(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator-(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  PiPoly operator-() const;
  PiPoly& operator+=(const PiPoly& o) { *this = *this + o; return *this; }
  PiPoly& operator-=(const PiPoly& o) { *this = *this - o; return *this; }
  PiPoly& operator*=(const PiPoly& o) { *this = *this * o; return *this; }

  friend PiPoly operator*(const Rational& s, const PiPoly& a);

  // Division by a nonzero integer; always exact over Q. Exists so the
  // adjugate iteration can assert the exactness of its internal divisions.
  PiPoly div_exact(long k) const;

  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PiPoly& a, const PiPoly& b) { return !(a == b); }

  // Sum c_i (1/pi)^i, evaluated with guard bits and rounded to prec.
  BigFloat eval(long prec = kDefaultPrecision) const;

  // Textual form "a0 + a1/pi + a2/pi^2 + ...", rationals as num/den;
  // parse/format round-trip bit-exactly.
  std::string str() const;
  static PiPoly parse(const std::string& text);

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace lel

#endif
