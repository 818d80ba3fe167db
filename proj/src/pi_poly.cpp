#include "lel/pi_poly.hpp"

#include <algorithm>
#include <sstream>

#include "lel/errors.hpp"

namespace lel {

PiPoly operator+(const PiPoly& a, const PiPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return PiPoly(std::move(c));
}

PiPoly operator-(const PiPoly& a, const PiPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return PiPoly(std::move(c));
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  if (a.is_zero() || b.is_zero()) return PiPoly{};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PiPoly(std::move(c));
}

PiPoly PiPoly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return PiPoly(std::move(c));
}

PiPoly operator*(const Rational& s, const PiPoly& a) {
  if (s == 0) return PiPoly{};
  std::vector<Rational> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
  return PiPoly(std::move(c));
}

PiPoly PiPoly::div_exact(long k) const {
  if (k == 0) fail(Errc::division_by_zero, "PiPoly division by zero");
  return rat(1, k) * *this;
}

BigFloat PiPoly::eval(long prec) const {
  if (is_zero()) return BigFloat(prec);
  const long work = prec + 16;
  BigFloat x = BigFloat::from(1L, work) / BigFloat::pi(work);
  BigFloat acc = BigFloat::from(c_.back(), work);
  for (size_t i = c_.size() - 1; i-- > 0;) {
    acc *= x;
    acc += BigFloat::from(c_[i], work);
  }
  return round_to(acc, prec);
}

std::string PiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) os << " + ";
    os << to_string(c_[i]);
    if (i == 1) os << "/pi";
    if (i > 1) os << "/pi^" << i;
  }
  return os.str();
}

PiPoly PiPoly::parse(const std::string& text) {
  if (text.empty()) fail(Errc::empty_input, "empty polynomial");
  if (text == "0") return PiPoly{};
  std::vector<Rational> coeffs;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(" + ", pos);
    std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? text.size() : next + 3;

    size_t power = coeffs.size();
    size_t slash_pi = term.rfind("/pi");
    std::string num = term;
    size_t parsed_power = 0;
    if (slash_pi != std::string::npos) {
      std::string tail = term.substr(slash_pi + 3);
      if (tail.empty()) {
        parsed_power = 1;
      } else if (tail[0] == '^') {
        parsed_power = std::stoul(tail.substr(1));
      } else {
        slash_pi = std::string::npos;  // "/pi" was part of nothing we know
      }
    }
    if (slash_pi != std::string::npos) {
      num = term.substr(0, slash_pi);
      if (parsed_power != power)
        fail(Errc::bad_input, "polynomial terms out of order: '" + term + "'");
    } else if (power != 0) {
      fail(Errc::bad_input, "expected /pi^" + std::to_string(power) + " in '" + term + "'");
    }
    coeffs.push_back(rat_from_string(num));
  }
  return PiPoly(std::move(coeffs));
}

}  // namespace lel
