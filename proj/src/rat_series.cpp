#include "lel/rat_series.hpp"

#include <algorithm>

#include "lel/errors.hpp"

namespace lel {

namespace {
size_t joint_size(const RatSeries& a, const RatSeries& b) {
  return static_cast<size_t>(std::min(a.order(), b.order())) + 1;
}
}  // namespace

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
  size_t n = joint_size(a, b);
  std::vector<Rational> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RatSeries(std::move(c), static_cast<int>(n) - 1);
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
  size_t n = joint_size(a, b);
  std::vector<Rational> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RatSeries(std::move(c), static_cast<int>(n) - 1);
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  size_t n = joint_size(a, b);
  std::vector<Rational> c(n);
  Rational t;
  for (size_t i = 0; i < n; ++i) {
    const Rational& ai = a.coeff(static_cast<int>(i));
    if (ai == 0) continue;
    for (size_t j = 0; i + j < n; ++j) {
      const Rational& bj = b.coeff(static_cast<int>(j));
      if (bj == 0) continue;
      t = ai * bj;
      c[i + j] += t;
    }
  }
  return RatSeries(std::move(c), static_cast<int>(n) - 1);
}

RatSeries operator*(const Rational& s, const RatSeries& a) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x *= s;
  return RatSeries(std::move(c), a.order());
}

RatSeries RatSeries::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x = -x;
  return RatSeries(std::move(c), order());
}

RatSeries RatSeries::reciprocal() const {
  if (c_.empty() || c_[0] == 0)
    fail(Errc::division_by_zero, "series reciprocal requires nonzero constant term");
  size_t n = c_.size();
  std::vector<Rational> r(n);
  Rational inv0 = 1 / c_[0];
  r[0] = inv0;
  for (size_t k = 1; k < n; ++k) {
    Rational s;
    for (size_t j = 1; j <= k; ++j) s += c_[j] * r[k - j];
    r[k] = -s * inv0;
  }
  return RatSeries(std::move(r), order());
}

RatSeries RatSeries::exp() const {
  if (!c_.empty() && c_[0] != 0)
    fail(Errc::bad_input, "series exp requires zero constant term");
  // e' = f' e  =>  k e_k = sum_{j=1}^{k} j f_j e_{k-j}
  size_t n = c_.size();
  std::vector<Rational> e(n);
  e[0] = 1;
  for (size_t k = 1; k < n; ++k) {
    Rational s;
    for (size_t j = 1; j <= k; ++j) s += Rational(static_cast<long>(j)) * c_[j] * e[k - j];
    e[k] = s / Rational(static_cast<long>(k));
  }
  return RatSeries(std::move(e), order());
}

RatSeries RatSeries::integral() const {
  std::vector<Rational> c(c_.size());
  for (size_t k = 0; k + 1 < c_.size(); ++k)
    c[k + 1] = c_[k] / Rational(static_cast<long>(k) + 1);
  return RatSeries(std::move(c), order());
}

RatSeries RatSeries::derivative() const {
  std::vector<Rational> c(c_.size());
  for (size_t k = 1; k < c_.size(); ++k)
    c[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return RatSeries(std::move(c), order());
}

RatSeries RatSeries::shift(int k) const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i + static_cast<size_t>(k) < c_.size(); ++i)
    c[i + static_cast<size_t>(k)] = c_[i];
  return RatSeries(std::move(c), order());
}

RatSeries RatSeries::truncate(int new_order) const {
  std::vector<Rational> c(c_.begin(),
                          c_.begin() + std::min(c_.size(), static_cast<size_t>(new_order) + 1));
  return RatSeries(std::move(c), new_order);
}

Rational RatSeries::eval(const Rational& z) const {
  Rational acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

}  // namespace lel
