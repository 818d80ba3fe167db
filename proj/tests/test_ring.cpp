#include <doctest.h>

#include "lel/big_float.hpp"
#include "lel/pi_poly.hpp"
#include "lel/rational.hpp"

using namespace lel;

namespace {

// Deterministic small-value generator for the property checks.
struct Gen {
  uint64_t s;
  explicit Gen(uint64_t seed) : s(seed) {}
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  Rational rational() {
    long num = static_cast<long>(next() % 41) - 20;
    long den = 1 + static_cast<long>(next() % 12);
    return rat(num, den);
  }
  PiPoly poly() {
    size_t deg = next() % 5;
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = rational();
    return PiPoly(std::move(c));
  }
};

}  // namespace

TEST_SUITE_BEGIN("ring");

TEST_CASE("rational parse/emit round trip") {
  CHECK(to_string(rat_from_string("3/4")) == "3/4");
  CHECK(to_string(rat_from_string("-6/8")) == "-3/4");
  CHECK(to_string(rat_from_string("5")) == "5");
  CHECK(rat_from_string("2/4") == rat(1, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), DomainError);
  CHECK_THROWS_AS(rat_from_string(""), DomainError);
  CHECK_THROWS_AS(rat_from_string("x"), DomainError);
}

TEST_CASE("pipoly arithmetic basics") {
  PiPoly a({rat(1, 2), rat(1)});   // 1/2 + x
  PiPoly b({rat(1, 2), rat(-1)});  // 1/2 - x
  PiPoly prod = a * b;             // 1/4 - x^2
  CHECK(prod == PiPoly({rat(1, 4), rat(0), rat(-1)}));

  CHECK((PiPoly({rat(0), rat(-1)}) + PiPoly({rat(0), rat(1)})).is_zero());
  CHECK(PiPoly({rat(2), rat(4)}).div_exact(2) == PiPoly({rat(1), rat(2)}));
  CHECK_THROWS_AS(PiPoly({rat(1)}).div_exact(0), DomainError);
}

TEST_CASE("pipoly canonical form and degree") {
  PiPoly z({rat(1), rat(2), rat(0), rat(0)});
  CHECK(z.degree() == 1);
  Gen g(7);
  for (int i = 0; i < 200; ++i) {
    PiPoly a = g.poly();
    CHECK((a - a).is_zero());
    PiPoly b = g.poly();
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("ring axioms on random values") {
  Gen g(1234);
  for (int i = 0; i < 150; ++i) {
    PiPoly a = g.poly(), b = g.poly(), c = g.poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("pipoly evaluation") {
  CHECK(PiPoly{}.eval().to_double() == 0.0);
  CHECK(PiPoly({rat(1, 8)}).eval().to_double() == doctest::Approx(0.125).epsilon(1e-15));
  // -4/pi
  double v = PiPoly({rat(0), rat(-4)}).eval().to_double();
  CHECK(v == doctest::Approx(-1.2732395447351628).epsilon(1e-14));
}

TEST_CASE("eval commutes with multiplication at 256 bits") {
  Gen g(99);
  BigFloat tol = pow_si(BigFloat::from(2L, 256), -200);
  for (int i = 0; i < 60; ++i) {
    PiPoly a = g.poly(), b = g.poly();
    BigFloat lhs = (a * b).eval(256);
    BigFloat rhs = a.eval(256) * b.eval(256);
    BigFloat scale = abs(rhs);
    if (scale < BigFloat::from(1L, 256)) scale = BigFloat::from(1L, 256);
    CHECK(abs(lhs - rhs) < tol * scale);
  }
}

TEST_CASE("pipoly text round trip") {
  PiPoly p({rat(1, 2), rat(0), rat(-3, 7)});
  CHECK(p.str() == "1/2 + 0/pi + -3/7/pi^2");
  CHECK(PiPoly::parse(p.str()) == p);
  CHECK(PiPoly::parse("0").is_zero());
  CHECK(PiPoly::parse("1/8") == PiPoly({rat(1, 8)}));
  Gen g(5);
  for (int i = 0; i < 100; ++i) {
    PiPoly a = g.poly();
    CHECK(PiPoly::parse(a.str()) == a);
  }
}

TEST_CASE("bigfloat precision semantics") {
  BigFloat a = BigFloat::from(1L, 128);
  BigFloat b = BigFloat::from(3L, 512);
  CHECK((a / b).precision() == 512);
  CHECK(BigFloat::pi(256).precision() == 256);
  // catalan constant, first digits
  CHECK(BigFloat::catalan(128).to_double() == doctest::Approx(0.9159655941772190).epsilon(1e-15));
  CHECK(BigFloat().precision() == kDefaultPrecision);
}

TEST_SUITE_END();
