#include <doctest.h>

#include "lel/green.hpp"

using namespace lel;

TEST_SUITE_BEGIN("green");

TEST_CASE("seed values") {
  CHECK(green::entry(0, 0).is_zero());
  CHECK(green::entry(1, 0) == PiPoly({rat(-1)}));
  // The first diagonal value must be -4/pi: seeding the diagonal sum at
  // k=1 instead of k=0 would give 0 here, which is inconsistent with the
  // harmonic relation (it forces c(1,1) = (4*c(1,0) - c(0,0) - c(2,0))/2
  // with c(2,0) = -4 + 8/pi) and with the quadrature value -1.27324.
  CHECK(green::entry(1, 1) == PiPoly({rat(0), rat(-4)}));
  CHECK(green::entry(2, 0) == PiPoly({rat(-4), rat(8)}));
  CHECK(green::entry(3, 0) == PiPoly({rat(-17), rat(48)}));
}

TEST_CASE("one-sided harmonic relation holds out to radius 10") {
  for (int dx = -10; dx <= 10; ++dx)
    for (int dy = -10; dy <= 10; ++dy) {
      PiPoly nb = green::entry(dx + 1, dy) + green::entry(dx - 1, dy) + green::entry(dx, dy + 1) +
                  green::entry(dx, dy - 1);
      PiPoly lhs = rat(4) * green::entry(dx, dy);
      if (dx == 0 && dy == 0) lhs -= PiPoly::constant(rat(4));
      CHECK(lhs == nb);
    }
}

TEST_CASE("second-neighbour identity 4c(2,0) + 8c(1,1) = -16") {
  PiPoly v = rat(4) * green::entry(2, 0) + rat(8) * green::entry(1, 1);
  CHECK(v == PiPoly({rat(-16)}));
}

TEST_CASE("dihedral symmetry") {
  for (int dx = 0; dx <= 6; ++dx)
    for (int dy = 0; dy <= 6; ++dy) {
      PiPoly e = green::entry(dx, dy);
      CHECK(e == green::entry(dy, dx));
      CHECK(e == green::entry(-dx, dy));
      CHECK(e == green::entry(dx, -dy));
      CHECK(e == green::entry(-dx, -dy));
    }
}

TEST_CASE("every entry has degree <= 1 in 1/pi") {
  for (int dx = 0; dx <= 12; ++dx)
    for (int dy = 0; dy <= dx; ++dy) CHECK(green::entry(dx, dy).degree() <= 1);
}

TEST_CASE("quadrature oracle agrees with the exact table") {
  CHECK(green::entry_numeric(0, 0, 1e-10) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(green::entry_numeric(1, 0, 1e-10) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(green::entry_numeric(1, 1, 1e-10) == doctest::Approx(-1.27324).epsilon(1e-5));
  for (int dx = 0; dx <= 6; ++dx)
    for (int dy = 0; dy <= dx; ++dy) {
      double exact = green::entry(dx, dy).eval().to_double();
      double numeric = green::entry_numeric(dx, dy, 1e-10);
      CHECK(std::abs(exact - numeric) < 1e-8);
    }
}

TEST_CASE("quadrature rejects bad tolerance") {
  CHECK_THROWS_AS(green::entry_numeric(1, 0, 0.0), DomainError);
}

TEST_CASE("patch matrix restriction") {
  PatchGraph patch = build_patch(parse_sap("RL"));
  MatrixPoly m = green::matrix(patch);
  int n = static_cast<int>(patch.vertices.size());
  for (int i = 0; i < n; ++i) {
    CHECK(m(i, i).is_zero());
    for (int j = 0; j < n; ++j) {
      CHECK(m(i, j) == m(j, i));
      if (patch.adjacency(i, j)) CHECK(m(i, j) == PiPoly({rat(-1)}));
    }
  }
  // Degenerate single-point patch: the 1x1 zero matrix.
  PatchGraph single;
  single.vertices = {{2, 3}};
  single.support_size = 1;
  single.adjacency = Eigen::MatrixXi::Zero(1, 1);
  single.incident = Eigen::MatrixXi::Zero(1, 1);
  single.degree = Eigen::VectorXi::Zero(1);
  MatrixPoly sm = green::matrix(single);
  CHECK(sm.rows() == 1);
  CHECK(sm(0, 0).is_zero());
}

TEST_SUITE_END();
