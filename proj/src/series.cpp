#include "lel/series.hpp"

#include <cmath>
#include <unordered_map>

#include "lel/elliptic.hpp"
#include "lel/linalg.hpp"
#include "lel/sieve.hpp"

namespace lel {
namespace series {

RatSeries closed_walk_series(int order) { return displacement_series(0, 0, order); }

RatSeries displacement_series(int dx, int dy, int order) {
  RatSeries s(order);
  for (int n = 0; n <= order; ++n) {
    int a = n + dx + dy, b = n + dx - dy;
    if (a % 2 || b % 2 || a < 0 || b < 0 || a > 2 * n || b > 2 * n) continue;
    s.coeff(n) = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(a / 2)) *
                          binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(b / 2)));
  }
  return s;
}

RatSeries loop_walk_series(const Sap& p, int order) {
  if (order < p.length) fail(Errc::bad_input, "order below the polygon length");
  PatchGraph g = build_patch(p);
  int n = static_cast<int>(g.vertices.size());
  int work = order - p.length;

  std::unordered_map<uint64_t, RatSeries> memo;
  auto entry = [&](Point d) -> const RatSeries& {
    uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(d.x)) << 32) |
                   static_cast<uint32_t>(d.y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo.emplace(key, displacement_series(d.x, d.y, work)).first->second;
  };

  MatrixSeries m(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> touching;
    for (int l = 0; l < n; ++l)
      if (g.incident(l, j)) touching.push_back(l);
    for (int i = 0; i < n; ++i) {
      RatSeries acc(work);
      for (int l : touching) {
        acc += entry(g.vertices[static_cast<size_t>(l)] - g.vertices[static_cast<size_t>(i)]);
      }
      acc = acc.shift(1);  // the z in front of R(z) S_p
      if (i == j) acc.coeff(0) += 1;
      m(i, j) = std::move(acc);
    }
  }
  RatSeries det = det_series(std::move(m));
  RatSeries out(order);
  for (int k = 0; k + p.length <= order && k <= work; ++k) out.coeff(k + p.length) = det.coeff(k);
  return out;
}

RatSeries rooted_hike_zeta(int order) {
  RatSeries r = closed_walk_series(order);
  r.coeff(0) = 0;
  // (R(z) - 1)/z, integrated formally, then exponentiated.
  RatSeries integrand(order);
  for (int k = 1; k <= order; ++k) integrand.coeff(k - 1) = r.coeff(k);
  return integrand.integral().exp();
}

RatSeries rooted_hike_moebius(int order) { return rooted_hike_zeta(order).reciprocal(); }

BigFloat lattice_alpha(long precision) {
  if (precision < kMinPrecision) fail(Errc::bad_input, "precision must be >= 53");
  long wp = precision + 16;
  BigFloat e = exp(BigFloat::from(4L, wp) * BigFloat::catalan(wp) / BigFloat::pi(wp));
  return round_to(e / BigFloat::from(4L, wp), precision);
}

std::vector<RatioRow> ratio_convergence(const Sap& p, int order) {
  if (order < p.length + 4) fail(Errc::bad_input, "order must be >= l(p) + 4");
  RatSeries rp = loop_walk_series(p, order);
  RatSeries r = closed_walk_series(order);
  double limit = sieve::fraction_exact(p).eval().to_double();
  std::vector<RatioRow> rows;
  for (int ell = p.length; ell <= order; ell += 2) {
    if (r.coeff(ell) == 0) continue;
    Rational ratio = rp.coeff(ell) / r.coeff(ell);
    RatioRow row;
    row.ell = ell;
    row.ratio = to_double(ratio);
    row.scaled_error = (row.ratio - limit) * ell;
    rows.push_back(row);
  }
  return rows;
}

Rational walk_correction(int ell) {
  if (ell < 0 || ell % 2 != 0) return Rational(0);
  Integer num = binomial(static_cast<unsigned long>(ell), static_cast<unsigned long>(ell / 2));
  num *= num;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 4, static_cast<unsigned long>(ell));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// Truncation so that the geometric tail bound (4 z0)^(L+1)/(1 - 4 z0),
// valid because [z^l]R_p <= [z^l]R <= 4^l, drops below 1e-9.
int order_for(double z0) {
  double q = 4.0 * z0;
  int L = static_cast<int>(std::ceil(std::log(1e-9 * (1.0 - q)) / std::log(q)));
  return std::max(L + (L % 2), 8);
}

double eval_series(const RatSeries& s, double z0) {
  Rational z;
  mpq_set_d(z.get_mpq_t(), z0);  // exact binary-to-rational conversion
  return to_double(s.eval(z));
}

}  // namespace

ClosedFormCheck closed_form_check_edge(double z0) {
  if (!(z0 >= 0.0 && z0 < 0.25)) fail(Errc::bad_input, "z0 must lie in [0, 1/4)");
  ClosedFormCheck c;
  if (z0 == 0.0) return c;
  RatSeries rp = loop_walk_series(parse_sap("RL"), order_for(z0));
  c.series_value = eval_series(rp, z0);
  double m = 16.0 * z0 * z0;
  double K = elliptic_k(m);
  double pi = M_PI;
  c.closed_form_value =
      pi / 4.0 - 1.0 / 16.0 + (64.0 * z0 * z0 - 4.0) * K * K / (16.0 * pi * pi) + (K - pi * pi) / (4.0 * pi);
  return c;
}

ClosedFormCheck closed_form_check_square(double z0) {
  if (!(z0 >= 0.0 && z0 < 0.25)) fail(Errc::bad_input, "z0 must lie in [0, 1/4)");
  ClosedFormCheck c;
  if (z0 == 0.0) return c;
  RatSeries rp = loop_walk_series(parse_sap("RULD"), order_for(z0));
  c.series_value = eval_series(rp, z0);
  double m = 16.0 * z0 * z0;
  double K = elliptic_k(m);
  double E = elliptic_e(m);
  double pi = M_PI;
  double z2 = z0 * z0, z4 = z2 * z2;
  double first = (16.0 * z2 - 1.0) * K + E;
  double second = (1.0 - 16.0 * z2) * K * K + 2.0 * K * (8.0 * pi * z2 - E) - 4.0 * pi * pi * z2 + E * E;
  c.closed_form_value = first * first * second / (256.0 * pi * pi * pi * pi * z4);
  return c;
}

}  // namespace series
}  // namespace lel
