#include <doctest.h>

#include "lel/rat_series.hpp"

using namespace lel;

namespace {

RatSeries random_series(uint64_t seed, int order, bool unit) {
  uint64_t s = seed;
  auto next = [&] {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return z ^ (z >> 31);
  };
  RatSeries r(order);
  for (int k = 0; k <= order; ++k)
    r.coeff(k) = rat(static_cast<long>(next() % 19) - 9, 1 + static_cast<long>(next() % 6));
  if (unit) r.coeff(0) = 1;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("series_core");

TEST_CASE("mixed orders truncate to the minimum") {
  RatSeries a = RatSeries::one(10);
  RatSeries b = RatSeries::one(4);
  CHECK((a * b).order() == 4);
  CHECK((a + b).order() == 4);
}

TEST_CASE("associativity and reciprocal") {
  for (uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
    RatSeries a = random_series(seed, 12, false);
    RatSeries b = random_series(seed + 10, 12, false);
    RatSeries c = random_series(seed + 20, 12, false);
    CHECK((a * b) * c == a * (b * c));
    RatSeries u = random_series(seed + 30, 12, true);
    CHECK(u * u.reciprocal() == RatSeries::one(12));
  }
  CHECK_THROWS_AS(RatSeries(4).reciprocal(), DomainError);
}

TEST_CASE("exp, integral and derivative fit together") {
  // exp(z)^ coefficients are 1/k!
  RatSeries z(8);
  z.coeff(1) = 1;
  RatSeries e = z.exp();
  Rational factorial(1);
  for (int k = 1; k <= 8; ++k) {
    factorial *= k;
    CHECK(e.coeff(k) == 1 / factorial);
  }
  // d/dz integral = identity (up to the dropped top coefficient)
  RatSeries a = random_series(77, 10, false);
  RatSeries round_trip = a.integral().derivative();
  for (int k = 0; k < 10; ++k) CHECK(round_trip.coeff(k) == a.coeff(k));
  CHECK_THROWS_AS(RatSeries::one(4).exp(), DomainError);
}

TEST_CASE("shift and eval") {
  RatSeries a(4);
  a.coeff(0) = 3;
  a.coeff(1) = 1;
  RatSeries sh = a.shift(2);
  CHECK(sh.coeff(2) == 3);
  CHECK(sh.coeff(3) == 1);
  CHECK(sh.coeff(0) == 0);
  CHECK(a.eval(rat(1, 2)) == rat(7, 2));
}

TEST_SUITE_END();
