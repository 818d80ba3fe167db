#include "lel/torus.hpp"

#include <cmath>

#include "lel/linalg.hpp"

namespace lel {

TorusGraph make_torus(int n) {
  if (n < 3) fail(Errc::bad_input, "torus side must be >= 3");
  TorusGraph t;
  t.n = n;
  t.N = n * n;
  t.adjacency = Eigen::MatrixXi::Zero(t.N, t.N);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = t.vertex(x, y);
      t.adjacency(v, t.vertex(x + 1, y)) += 1;
      t.adjacency(v, t.vertex(x - 1, y)) += 1;
      t.adjacency(v, t.vertex(x, y + 1)) += 1;
      t.adjacency(v, t.vertex(x, y - 1)) += 1;
    }
  return t;
}

std::vector<double> torus_spectrum(int n) {
  std::vector<double> evs;
  evs.reserve(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      evs.push_back(2.0 * std::cos(2.0 * M_PI * j / n) + 2.0 * std::cos(2.0 * M_PI * k / n));
  return evs;
}

std::vector<int> embed_sap(const TorusGraph& t, const Sap& p) {
  PatchGraph g = build_patch(p);
  Point lo = g.vertices.front(), hi = lo;
  for (const Point& v : g.vertices) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  // A span of n-1 would glue opposite patch columns through the wraparound.
  if (hi.x - lo.x > t.n - 2 || hi.y - lo.y > t.n - 2)
    fail(Errc::sap_does_not_fit, "patch spans " + std::to_string(hi.x - lo.x) + "x" +
                                     std::to_string(hi.y - lo.y) + " on a " + std::to_string(t.n) +
                                     "-torus");
  std::vector<int> image;
  image.reserve(p.vertices.size());
  for (const Point& v : p.vertices) image.push_back(t.vertex(v.x, v.y));
  return image;
}

RatSeries loop_walk_series_torus(const TorusGraph& t, const Sap& p, int order) {
  std::vector<int> removed = embed_sap(t, p);
  std::vector<bool> gone(static_cast<size_t>(t.N), false);
  for (int v : removed) gone[static_cast<size_t>(v)] = true;
  std::vector<int> keep;
  for (int v = 0; v < t.N; ++v)
    if (!gone[static_cast<size_t>(v)]) keep.push_back(v);

  MatrixQ full(t.N, t.N);
  for (int i = 0; i < t.N; ++i)
    for (int j = 0; j < t.N; ++j) full(i, j) = Rational(t.adjacency(i, j));
  int m = static_cast<int>(keep.size());
  MatrixQ sub(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub(i, j) = Rational(t.adjacency(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]));

  std::vector<Rational> mu_full = char_poly_IzA(full);
  std::vector<Rational> mu_sub = char_poly_IzA(sub);
  RatSeries zeta = RatSeries(std::vector<Rational>(mu_full.begin(), mu_full.end()),
                             order)
                       .reciprocal();
  RatSeries mu_s(std::vector<Rational>(mu_sub.begin(), mu_sub.end()), order);
  return (mu_s * zeta).shift(p.length);
}

}  // namespace lel
