#include <doctest.h>

#include "lel/green.hpp"
#include "lel/linalg.hpp"

using namespace lel;

namespace {

MatrixPoly random_poly_matrix(uint64_t seed, int n, int deg) {
  uint64_t s = seed;
  auto next = [&] {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return z ^ (z >> 31);
  };
  MatrixPoly m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> c(static_cast<size_t>(deg) + 1);
      for (auto& x : c) x = rat(static_cast<long>(next() % 9) - 4, 1 + static_cast<long>(next() % 4));
      m(i, j) = PiPoly(std::move(c));
    }
  return m;
}

MatrixPoly identity_poly(int n) {
  MatrixPoly m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? PiPoly::constant(rat(1)) : PiPoly{};
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("adjugate identity M adj(M) = det(M) I over Q[1/pi]") {
  for (uint64_t seed : {11ULL, 22ULL, 33ULL}) {
    for (int n : {1, 2, 3, 5}) {
      MatrixPoly m = random_poly_matrix(seed * 100 + static_cast<uint64_t>(n), n, 2);
      AdjugateResult r = adjugate_det(m);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          PiPoly dot;
          for (int k = 0; k < n; ++k) dot += m(i, k) * r.adjugate(k, j);
          if (i == j)
            CHECK(dot == r.det);
          else
            CHECK(dot.is_zero());
        }
    }
  }
}

TEST_CASE("adjugate of 2x2 rational matrix is the textbook swap") {
  MatrixPoly m(2, 2);
  m(0, 0) = PiPoly::constant(rat(3));
  m(0, 1) = PiPoly::constant(rat(1, 2));
  m(1, 0) = PiPoly::constant(rat(-1));
  m(1, 1) = PiPoly::constant(rat(5, 3));
  AdjugateResult r = adjugate_det(m);
  CHECK(r.adjugate(0, 0) == PiPoly::constant(rat(5, 3)));
  CHECK(r.adjugate(0, 1) == PiPoly::constant(rat(-1, 2)));
  CHECK(r.adjugate(1, 0) == PiPoly::constant(rat(1)));
  CHECK(r.adjugate(1, 1) == PiPoly::constant(rat(3)));
  CHECK(r.det == PiPoly::constant(rat(11, 2)));
}

TEST_CASE("bilinear contraction matches the full adjugate") {
  MatrixPoly m = random_poly_matrix(777, 4, 1);
  Eigen::VectorXi w(4);
  w << 2, 0, 1, 3;
  auto [bil, det] = adjugate_bilinear(m, w);
  AdjugateResult full = adjugate_det(m);
  PiPoly expect;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expect += rat(w[i]) * full.adjugate(i, j);
  CHECK(bil == expect);
  CHECK(det == full.det);
}

TEST_CASE("lu reproduces determinant and solves") {
  int n = 6;
  MatrixF m(n, n);
  uint64_t s = 4242;
  auto next = [&] {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return z ^ (z >> 31);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = BigFloat::from(static_cast<double>(next() % 1000) / 100.0 - 5.0, 192);
  LuResult f = lu_decompose(m, 1);
  REQUIRE(!f.singular);
  VectorF rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = BigFloat::from(static_cast<long>(i + 1), 192);
  VectorF x = lu_solve(f, rhs);
  for (int i = 0; i < n; ++i) {
    BigFloat acc(192);
    for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
    CHECK(abs(acc - rhs[i]).to_double() < 1e-40);
  }
  // Same factorization with two threads: identical bits.
  LuResult f2 = lu_decompose(m, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(f.lu(i, j) == f2.lu(i, j));
}

TEST_CASE("series determinant matches cofactor expansion on a 3x3") {
  int order = 6;
  MatrixSeries m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RatSeries e(order);
      e.coeff(0) = (i == j) ? 1 : 0;
      e.coeff(1) = rat((i * 3 + j) % 5 - 2);
      e.coeff(2) = rat((i + 2 * j) % 3);
      m(i, j) = e;
    }
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
  };
  RatSeries cof =
      m(0, 0) * minor2(1, 2, 1, 2) - m(0, 1) * minor2(1, 2, 0, 2) + m(0, 2) * minor2(1, 2, 0, 1);
  CHECK(det_series(m) == cof);
}

TEST_CASE("char poly of I - zA via traces") {
  // Directed 3-cycle: det(I - zA) = 1 - z^3.
  MatrixQ a = MatrixQ::Constant(3, 3, Rational(0));
  a(0, 1) = 1;
  a(1, 2) = 1;
  a(2, 0) = 1;
  auto c = char_poly_IzA(a);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == 1);
  CHECK(c[1] == 0);
  CHECK(c[2] == 0);
  CHECK(c[3] == -1);

  // Weighted loop: det(I - zA) = 1 - wz.
  MatrixQ w = MatrixQ::Constant(1, 1, rat(3, 7));
  auto cw = char_poly_IzA(w);
  CHECK(cw[1] == rat(-3, 7));
}

TEST_CASE("identity adjugate") {
  AdjugateResult r = adjugate_det(identity_poly(4));
  CHECK(r.det == PiPoly::constant(rat(1)));
  for (int i = 0; i < 4; ++i) CHECK(r.adjugate(i, i) == PiPoly::constant(rat(1)));
}

TEST_SUITE_END();
