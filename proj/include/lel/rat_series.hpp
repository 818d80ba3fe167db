#ifndef LEL_RAT_SERIES_HPP
#define LEL_RAT_SERIES_HPP

#include <vector>

#include "lel/rational.hpp"

namespace lel {

// Truncated power series over Q with an explicit truncation order:
// coefficients for z^0 .. z^order are exact, anything beyond is undefined.
// Mixed-order operations truncate to the smaller order; silent promotion
// is how wrong-coefficient bugs happen.
class RatSeries {
public:
  RatSeries() = default;
  explicit RatSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
  RatSeries(std::vector<Rational> coeffs, int order)
      : c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(order) + 1);
  }

  static RatSeries constant(const Rational& a, int order) {
    RatSeries s(order);
    s.c_[0] = a;
    return s;
  }
  static RatSeries one(int order) { return constant(Rational(1), order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  Rational& coeff(int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(const Rational& s, const RatSeries& a);
  RatSeries operator-() const;

  RatSeries& operator+=(const RatSeries& o) { *this = *this + o; return *this; }
  RatSeries& operator-=(const RatSeries& o) { *this = *this - o; return *this; }
  RatSeries& operator*=(const RatSeries& o) { *this = *this * o; return *this; }

  // 1/this; requires a unit (nonzero) constant term.
  RatSeries reciprocal() const;
  // exp(this); requires zero constant term.
  RatSeries exp() const;
  // Formal integral: z^k -> z^{k+1}/(k+1); top coefficient is dropped so
  // the result is exact at the same order.
  RatSeries integral() const;
  RatSeries derivative() const;
  // Multiply by z^k (order kept; top coefficients fall off).
  RatSeries shift(int k) const;
  RatSeries truncate(int order) const;

  Rational eval(const Rational& z) const;

  friend bool operator==(const RatSeries& a, const RatSeries& b) { return a.c_ == b.c_; }

private:
  std::vector<Rational> c_;
};

}  // namespace lel

#endif
