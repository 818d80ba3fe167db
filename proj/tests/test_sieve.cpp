#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "lel/golden.hpp"
#include "lel/green.hpp"
#include "lel/linalg.hpp"
#include "lel/sieve.hpp"

using namespace lel;

namespace {

PiPoly golden_long_sap_polynomial() {
  Integer den(golden::kLongSapDenominator);
  std::vector<Rational> c(13);
  for (size_t k = 0; k < 13; ++k) {
    Rational q(Integer(golden::kLongSapCoeffs[k]), den);
    q.canonicalize();
    c[12 - k] = q;
  }
  return PiPoly(std::move(c));
}

std::vector<Point> translated(const std::vector<Point>& pts, Point by) {
  std::vector<Point> out = pts;
  for (Point& p : out) p = p + by;
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("sieve");

TEST_CASE("edge fraction is exactly 1/8") {
  PiPoly f = sieve::fraction_exact(parse_sap("RL"));
  CHECK(f == PiPoly({rat(1, 8)}));
  CHECK(f.eval().to_double() == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("unit square fraction: exact polynomial and value") {
  PiPoly f = sieve::fraction_exact(parse_sap("RULD"));
  // 128(pi-2)/(4^4 pi^3) expanded in 1/pi: x^2/2 - x^3.
  CHECK(f == PiPoly({rat(0), rat(0), rat(1, 2), rat(-1)}));
  CHECK(f.eval().to_double() == doctest::Approx(golden::kUnitSquareFraction).epsilon(1e-12));
}

TEST_CASE("small rectangle fractions match printed digits") {
  CHECK(sieve::fraction_exact(parse_sap("RRULLD")).eval().to_double() ==
        doctest::Approx(golden::kRect1x2Fraction).epsilon(1e-9));
  CHECK(sieve::fraction_exact(parse_sap("RRRULLLD")).eval().to_double() ==
        doctest::Approx(golden::kRect1x3Fraction).epsilon(1e-7));
  CHECK(sieve::fraction_exact(parse_sap("RRUULLDD")).eval().to_double() ==
        doctest::Approx(golden::kSquare2x2Fraction).epsilon(1e-7));
}

TEST_CASE("18-step polygon reproduces its 13-coefficient closed form") {
  PiPoly f = sieve::fraction_exact(parse_sap(golden::kLongSapSteps));
  CHECK(f == golden_long_sap_polynomial());
  CHECK(f.eval().to_double() == doctest::Approx(golden::kLongSapFraction).epsilon(5e-5));
}

TEST_CASE("orientation invariance, exact") {
  for (const Sap& p : enumerate_anchored_saps(6))
    CHECK(sieve::fraction_exact(p) == sieve::fraction_exact(reverse(p)));
}

TEST_CASE("translation invariance, exact") {
  Sap p = parse_sap("RRULLD");
  PiPoly base = sieve::fraction_exact(p);
  CHECK(sieve::fraction_exact_of_support(translated(p.vertices, {3, -2}), p.length) == base);
  CHECK(sieve::fraction_exact_of_support(translated(p.vertices, {-7, 11}), p.length) == base);
}

TEST_CASE("sieve evaluand satisfies M adj(M) = det(M) I") {
  for (const char* steps : {"RL", "RULD", "RRULLD"}) {
    PatchGraph g = build_patch(parse_sap(steps));
    int n = static_cast<int>(g.vertices.size());
    MatrixPoly cm = green::matrix(g);
    MatrixPoly m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PiPoly acc;
        for (int l = 0; l < n; ++l)
          if (g.incident(l, j)) acc += cm(i, l);
        m(i, j) = rat(1, 4) * acc;
        if (i == j) m(i, j) += PiPoly::constant(rat(1));
      }
    AdjugateResult r = adjugate_det(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PiPoly dot;
        for (int k = 0; k < n; ++k) dot += m(i, k) * r.adjugate(k, j);
        CHECK(dot == (i == j ? r.det : PiPoly{}));
      }
  }
}

TEST_CASE("exact and numeric paths agree far below working precision") {
  BigFloat tol = pow_si(BigFloat::from(10L, 256), -50);
  for (const Sap& p : enumerate_anchored_saps(8)) {
    BigFloat numeric = sieve::fraction_numeric(p, 256);
    BigFloat exact = sieve::fraction_exact(p).eval(256);
    CHECK(abs(exact - numeric) < tol);
  }
  // Spot checks at longer lengths.
  for (const char* steps : {"RRRRRULLLLLD", "RRRUULLLDD", "RRULURDLLD"}) {
    Sap p = parse_sap(steps);
    CHECK(abs(sieve::fraction_exact(p).eval(256) - sieve::fraction_numeric(p, 256)) < tol);
  }
}

TEST_CASE("fraction results stay inside (0,1) with sane metadata") {
  for (const Sap& p : enumerate_anchored_saps(6)) {
    sieve::FractionResult r = sieve::fraction(p, false);
    CHECK(r.numeric.sign() > 0);
    CHECK(r.numeric < BigFloat::from(1L));
    CHECK(r.ell == p.length);
    CHECK(r.patch_size >= p.length);
    CHECK(r.patch_size <= 4 * p.length);
    CHECK(r.sap_key == p.steps);
  }
}

TEST_CASE("numeric precision monotonicity on the unit square") {
  BigFloat lo = sieve::fraction_numeric(parse_sap("RULD"), 53);
  BigFloat hi = sieve::fraction_numeric(parse_sap("RULD"), 256);
  CHECK(std::abs(lo.to_double() - hi.to_double()) < 1e-10);
}

TEST_CASE("singular evaluand falls back to the exact path") {
  // A single vertex: the evaluand is exactly singular; every closed walk
  // erases its last loop at its base vertex, so the value is 1 at length 0.
  BigFloat v = sieve::fraction_numeric_of_support({{0, 0}}, 0, 128);
  CHECK(v.to_double() == doctest::Approx(1.0).epsilon(1e-20));
  CHECK(sieve::fraction_exact_of_support({{0, 0}}, 0) == PiPoly::constant(rat(1)));
}

TEST_CASE("sweep reproduces the cumulative table prefix") {
  sieve::SweepOptions opt;
  opt.max_len = 8;
  sieve::SweepTable t = sieve::sweep(opt);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].S.to_double() == doctest::Approx(0.5).epsilon(1e-30));
  CHECK(t.rows[1].S.to_double() == doctest::Approx(0.6473).epsilon(1e-4));
  CHECK(t.rows[2].S.to_double() == doctest::Approx(0.7093).epsilon(1e-4));
  CHECK(t.rows[3].S.to_double() == doctest::Approx(0.7493).epsilon(1e-4));
  CHECK(t.rows[0].count == 4);
  CHECK(t.rows[1].count == 12);
  CHECK(t.rows[2].count == 36);
  CHECK(t.rows[3].count == 148);
  for (size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].S > t.rows[i - 1].S);
  CHECK(t.rows.back().S < BigFloat::from(1L));
}

TEST_CASE("shape dedup is an optimization, not a semantic change") {
  sieve::SweepOptions a;
  a.max_len = 6;
  sieve::SweepOptions b = a;
  b.dedup = false;
  sieve::SweepTable ta = sieve::sweep(a);
  sieve::SweepTable tb = sieve::sweep(b);
  REQUIRE(ta.rows.size() == tb.rows.size());
  for (size_t i = 0; i < ta.rows.size(); ++i) {
    CHECK(ta.rows[i].S == tb.rows[i].S);
    CHECK(ta.rows[i].count == tb.rows[i].count);
  }
}

TEST_CASE("sweep output is independent of the thread count") {
  sieve::SweepOptions a;
  a.max_len = 8;
  a.threads = 1;
  sieve::SweepOptions b = a;
  b.threads = 3;
  sieve::SweepTable ta = sieve::sweep(a);
  sieve::SweepTable tb = sieve::sweep(b);
  for (size_t i = 0; i < ta.rows.size(); ++i) CHECK(ta.rows[i].S == tb.rows[i].S);
}

TEST_CASE("exponent fit") {
  // The published rows land near the asymptotic exponent.
  sieve::SweepTable t;
  int L = 2;
  for (double s : golden::kSweepTable) {
    t.rows.push_back({L, BigFloat::from(s, 64), 0});
    L += 2;
  }
  double slope = sieve::fit_exponent(t);
  CHECK(slope > -0.75);
  CHECK(slope < -0.45);

  // Synthetic exact power law S(L) = 1 - L^(-3/5).
  sieve::SweepTable synth;
  for (int l = 6; l <= 20; l += 2)
    synth.rows.push_back({l, BigFloat::from(1.0 - std::pow(l, -0.6), 64), 0});
  CHECK(sieve::fit_exponent(synth) == doctest::Approx(-0.6).epsilon(1e-7));

  sieve::SweepTable tiny;
  tiny.rows.push_back({6, BigFloat::from(0.7, 64), 0});
  tiny.rows.push_back({6, BigFloat::from(0.7, 64), 0});
  CHECK_THROWS_AS(sieve::fit_exponent(tiny), DomainError);
}

TEST_SUITE_END();
