#include <doctest.h>

#include <cmath>

#include "lel/finite.hpp"

using namespace lel;
using finite::Digraph;

namespace {

Digraph three_cycle() {
  MatrixQ a = MatrixQ::Constant(3, 3, Rational(0));
  a(0, 1) = 1;
  a(1, 2) = 1;
  a(2, 0) = 1;
  return Digraph(std::move(a));
}

Digraph complete3() {
  MatrixQ a = MatrixQ::Constant(3, 3, Rational(1));
  for (int i = 0; i < 3; ++i) a(i, i) = 0;
  return Digraph(std::move(a));
}

Digraph random_digraph(uint64_t seed, int n) {
  uint64_t s = seed;
  auto next = [&] {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    return z ^ (z >> 31);
  };
  MatrixQ a = MatrixQ::Constant(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (next() % 3 == 0) a(i, j) = rat(1 + static_cast<long>(next() % 3), 1 + static_cast<long>(next() % 2));
  return Digraph(std::move(a));
}

}  // namespace

TEST_SUITE_BEGIN("finite");

TEST_CASE("zeta of the directed 3-cycle is 1/(1-z^3)") {
  RatSeries z = finite::hike_zeta_series(three_cycle(), 12);
  for (int k = 0; k <= 12; ++k) CHECK(z.coeff(k) == ((k % 3 == 0) ? 1 : 0));
}

TEST_CASE("zeta of a weighted self-loop is geometric") {
  MatrixQ a = MatrixQ::Constant(1, 1, rat(2, 3));
  RatSeries z = finite::hike_zeta_series(Digraph(std::move(a)), 6);
  Rational w(1);
  for (int k = 0; k <= 6; ++k) {
    CHECK(z.coeff(k) == w);
    w *= rat(2, 3);
  }
}

TEST_CASE("zeta of the complete digraph on three vertices") {
  // det(I - zA) = (1-2z)(1+z)^2; reciprocal starts 1, 0, 3, 2, 9.
  RatSeries z = finite::hike_zeta_series(complete3(), 4);
  CHECK(z.coeff(0) == 1);
  CHECK(z.coeff(1) == 0);
  CHECK(z.coeff(2) == 3);
  CHECK(z.coeff(3) == 2);
  CHECK(z.coeff(4) == 9);
}

TEST_CASE("moebius polynomial of the 3-cycle") {
  auto mu = finite::moebius_poly(three_cycle());
  REQUIRE(mu.size() == 4);
  CHECK(mu[0] == 1);
  CHECK(mu[1] == 0);
  CHECK(mu[2] == 0);
  CHECK(mu[3] == -1);
}

TEST_CASE("zeta times moebius is one") {
  for (uint64_t seed : {3ULL, 14ULL, 159ULL}) {
    Digraph g = random_digraph(seed, 4);
    RatSeries z = finite::hike_zeta_series(g, 10);
    RatSeries mu(std::vector<Rational>(finite::moebius_poly(g).begin(),
                                       finite::moebius_poly(g).end()),
                 10);
    CHECK(z * mu == RatSeries::one(10));
  }
}

TEST_CASE("von Mangoldt series of the 3-cycle counts rearrangements") {
  RatSeries lam = finite::von_mangoldt_series(three_cycle(), 9);
  for (int k = 1; k <= 9; ++k) CHECK(lam.coeff(k) == ((k % 3 == 0) ? 3 : 0));
}

TEST_CASE("von Mangoldt equals z zeta'/zeta") {
  for (uint64_t seed : {5ULL, 6ULL}) {
    Digraph g = random_digraph(seed, 4);
    int order = 10;
    RatSeries zeta = finite::hike_zeta_series(g, order);
    RatSeries lhs = zeta.derivative().shift(1) * zeta.reciprocal();
    RatSeries rhs = finite::von_mangoldt_series(g, order);
    for (int k = 0; k < order; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
  }
}

TEST_CASE("last-loop series on the 3-cycle") {
  RatSeries s = finite::last_loop_series(three_cycle(), {0, 1, 2}, 3, 12);
  for (int k = 0; k <= 12; ++k) CHECK(s.coeff(k) == ((k % 3 == 0 && k > 0) ? 1 : 0));
}

TEST_CASE("last-loop series on the 8x8 torus edge") {
  TorusGraph t = make_torus(8);
  Digraph g = Digraph::from_torus(t);
  // Vertices 0 and 1 are lattice neighbours.
  RatSeries s = finite::last_loop_series(g, {0, 1}, 2, 6);
  CHECK(s.coeff(0) == 0);
  CHECK(s.coeff(1) == 0);
  CHECK(s.coeff(2) == 1);
  CHECK(s.coeff(4) == 7);
}

TEST_CASE("asymptote: 3-cycle and the whole-graph prime") {
  BigFloat one = finite::loop_fraction_asymptote(three_cycle(), {0, 1, 2}, 3);
  CHECK(one.to_double() == doctest::Approx(1.0).epsilon(1e-25));
  // Deleting every vertex leaves the empty determinant 1: lambda^(-len).
  Digraph k3 = complete3();
  BigFloat v = finite::loop_fraction_asymptote(k3, {0, 1, 2}, 3);
  CHECK(v.to_double() == doctest::Approx(1.0 / 8.0).epsilon(1e-12));  // lambda = 2
}

TEST_CASE("asymptote matches the large-length coefficient ratio on the torus") {
  TorusGraph t = make_torus(8);
  Digraph g = Digraph::from_torus(t);
  BigFloat asym = finite::loop_fraction_asymptote(g, {0, 1}, 2);
  RatSeries walks = finite::last_loop_series(g, {0, 1}, 2, 60);
  RatSeries hikes = finite::hike_zeta_series(g, 60);
  double ratio = to_double(walks.coeff(60) / hikes.coeff(60));
  CHECK(std::abs(asym.to_double() - ratio) < 1e-3);
}

TEST_CASE("error term makes the asymptote exact on the 8x8 torus") {
  TorusGraph t = make_torus(8);
  Digraph g = Digraph::from_torus(t);
  finite::VertexSet edge{0, 1};
  BigFloat asym = finite::loop_fraction_asymptote(g, edge, 2, 256);
  RatSeries walks = finite::last_loop_series(g, edge, 2, 40);
  RatSeries hikes = finite::hike_zeta_series(g, 40);
  int k_max = g.size() - 2;
  for (int l = 4; l <= 40; l += 2) {
    BigFloat err = finite::sieve_error_term(g, edge, 2, l, k_max, 256);
    double expect = to_double(walks.coeff(l) / hikes.coeff(l));
    double got = (asym + err).to_double();
    CHECK(std::abs(got - expect) <= 1e-9 * std::abs(expect));
  }
}

TEST_CASE("error term vanishes on the 3-cycle at multiples of three") {
  Digraph g = three_cycle();
  for (int l : {3, 6, 9, 12})
    CHECK(std::abs(finite::sieve_error_term(g, {0, 1, 2}, 3, l, 3).to_double()) < 1e-30);
}

TEST_CASE("odd lengths on the bipartite torus have zero density") {
  TorusGraph t = make_torus(4);
  Digraph g = Digraph::from_torus(t);
  CHECK_THROWS_AS(finite::sieve_error_term(g, {0, 1}, 2, 7, 4), DomainError);
}

TEST_CASE("hike counts scale like lambda^(g l) with a bounded factor") {
  // Bipartite torus: dominant eigenvalue has multiplicity 2.
  TorusGraph t = make_torus(4);
  Digraph g = Digraph::from_torus(t);
  CHECK(g.dominant_multiplicity() == 2);
  RatSeries z = finite::hike_zeta_series(g, 30);
  double prev = 1.0;
  for (int l = 2; l <= 30; l += 2) {
    double f = to_double(z.coeff(l)) / std::pow(16.0, l);  // lambda^g = 16
    CHECK(f <= prev * (1 + 1e-12));  // bounded, settling
    prev = f;
  }
  // Aperiodic graph: f(l) = |H_l| lambda^(-l) approaches a finite limit.
  Digraph k3 = complete3();
  CHECK(k3.dominant_multiplicity() == 1);
  RatSeries zk = finite::hike_zeta_series(k3, 40);
  double f40 = to_double(zk.coeff(40)) / std::pow(2.0, 40);
  CHECK(f40 == doctest::Approx(4.0 / 9.0).epsilon(1e-2));
}

TEST_CASE("walk-density identity on small tori") {
  for (int n : {4, 8}) {
    finite::WalkDensityCheck c = finite::walk_density_identity(n, 256);
    double rel = std::abs((c.lhs - c.rhs).to_double()) / c.rhs.to_double();
    CHECK(rel < 1e-9);
  }
  finite::WalkDensityCheck c4 = finite::walk_density_identity(4, 128);
  CHECK(c4.rhs.to_double() == doctest::Approx(0.039550781).epsilon(1e-6));
}

TEST_CASE("per-site alpha approaches the lattice constant monotonically") {
  double alpha = 0.802478;
  double a4 = finite::alpha_per_site(4, 128).to_double();
  double a8 = finite::alpha_per_site(8, 128).to_double();
  double a16 = finite::alpha_per_site(16, 128).to_double();
  CHECK(std::abs(a4 - alpha) > std::abs(a8 - alpha));
  CHECK(std::abs(a8 - alpha) > std::abs(a16 - alpha));
  CHECK(std::abs(a16 - alpha) < 0.02);
}

TEST_CASE("digraph JSON round trip and validation") {
  Digraph g = Digraph::from_json(R"({"n": 3, "edges": [[0,1,"1"],[1,2,"1/2"],[2,0,3]]})");
  CHECK(g.size() == 3);
  CHECK(g.adjacency()(1, 2) == rat(1, 2));
  CHECK(g.adjacency()(2, 0) == 3);
  CHECK_THROWS_AS(Digraph::from_json("{}"), DomainError);
  CHECK_THROWS_AS(Digraph::from_json(R"({"n": 2, "edges": [[0,5]]})"), DomainError);
  CHECK_THROWS_AS(Digraph::from_json("not json"), DomainError);
}

TEST_CASE("lambda: exact for regular graphs, Newton-polished otherwise") {
  TorusGraph t = make_torus(4);
  CHECK(Digraph::from_torus(t).lambda().to_double() == 4.0);
  CHECK(three_cycle().lambda().to_double() == 1.0);
  // Weighted two-state chain: A = [[0, 2], [3, 0]], lambda = sqrt(6).
  MatrixQ a = MatrixQ::Constant(2, 2, Rational(0));
  a(0, 1) = 2;
  a(1, 0) = 3;
  Digraph g(std::move(a));
  CHECK(g.lambda().to_double() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
}

TEST_SUITE_END();
