#include "lel/finite.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <cmath>

#include "lel/linalg.hpp"

namespace lel {
namespace finite {

using nlohmann::json;

Digraph::Digraph(MatrixQ adjacency) : n_(static_cast<int>(adjacency.rows())), a_(std::move(adjacency)) {
  if (n_ < 1 || a_.rows() != a_.cols()) fail(Errc::bad_input, "adjacency must be square, n >= 1");
}

const std::vector<Rational>& Digraph::char_poly() const {
  if (!char_poly_) char_poly_ = std::make_shared<std::vector<Rational>>(char_poly_IzA(a_));
  return *char_poly_;
}

const std::vector<std::complex<double>>& Digraph::spectrum() const {
  if (!spectrum_) {
    Eigen::MatrixXd m(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m(i, j) = to_double(a_(i, j));
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    auto vals = es.eigenvalues();
    auto sp = std::make_shared<std::vector<std::complex<double>>>();
    for (int i = 0; i < n_; ++i) sp->push_back(vals[i]);
    spectrum_ = std::move(sp);
  }
  return *spectrum_;
}

namespace {

bool is_unweighted_regular(const MatrixQ& a, long* degree) {
  long deg = -1;
  for (int i = 0; i < a.rows(); ++i) {
    Rational row;
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& w = a(i, j);
      if (w != 0 && w != 1) return false;
      row += w;
    }
    if (row.get_den() != 1 || !row.get_num().fits_slong_p()) return false;
    long r = row.get_num().get_si();
    if (deg == -1) deg = r;
    if (r != deg) return false;
  }
  *degree = deg;
  return true;
}

// Newton polish of a simple real root of det(I - zA) near z0 = 1/lambda_est;
// lambda = 1/root. Doubles correct digits each step.
BigFloat newton_lambda(const std::vector<Rational>& poly, double lambda_est, long prec) {
  long wp = prec + 32;
  BigFloat z = BigFloat::from(1.0 / lambda_est, wp);
  for (int it = 0; it < 64; ++it) {
    BigFloat p(wp), dp(wp);
    for (size_t k = poly.size(); k-- > 0;) {
      // Horner for p and p'
      dp *= z;
      dp += p;
      p *= z;
      p += BigFloat::from(poly[k], wp);
    }
    if (dp.is_zero()) break;
    BigFloat step = p / dp;
    z -= step;
    if (abs(step) < pow_si(BigFloat::from(2L, wp), -(prec + 8)) * abs(z)) break;
  }
  return round_to(BigFloat::from(1L, wp) / z, prec);
}

}  // namespace

const BigFloat& Digraph::lambda() const {
  if (!lambda_) {
    long deg = 0;
    double best = 0;
    for (const auto& ev : spectrum()) best = std::max(best, std::abs(ev));
    mult_ = 0;
    for (const auto& ev : spectrum())
      if (std::abs(ev) > best * (1.0 - 1e-9)) ++mult_;
    if (is_unweighted_regular(a_, &deg)) {
      lambda_ = std::make_shared<BigFloat>(BigFloat::from(deg, kDefaultPrecision));
    } else {
      lambda_ = std::make_shared<BigFloat>(newton_lambda(char_poly(), best, kDefaultPrecision));
    }
  }
  return *lambda_;
}

int Digraph::dominant_multiplicity() const {
  lambda();
  return mult_;
}

Digraph Digraph::from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(Errc::bad_input, "digraph JSON needs {\"n\": int, \"edges\": [[i,j,\"w\"], ...]}");
  int n = j["n"].get<int>();
  if (n < 1) fail(Errc::bad_input, "digraph needs n >= 1");
  MatrixQ a = MatrixQ::Constant(n, n, Rational(0));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2) fail(Errc::bad_input, "edge entries are [i, j, weight?]");
    int i = e[0].get<int>(), k = e[1].get<int>();
    if (i < 0 || i >= n || k < 0 || k >= n) fail(Errc::bad_input, "edge endpoint out of range");
    Rational w(1);
    if (e.size() >= 3) {
      if (e[2].is_string())
        w = rat_from_string(e[2].get<std::string>());
      else if (e[2].is_number_integer())
        w = Rational(e[2].get<long>());
      else
        fail(Errc::bad_input, "edge weight must be \"num/den\" or an integer");
    }
    a(i, k) = w;
  }
  return Digraph(std::move(a));
}

Digraph Digraph::from_torus(const TorusGraph& t) {
  MatrixQ a(t.N, t.N);
  for (int i = 0; i < t.N; ++i)
    for (int j = 0; j < t.N; ++j) a(i, j) = Rational(t.adjacency(i, j));
  return Digraph(std::move(a));
}

Digraph Digraph::without(const VertexSet& remove) const {
  std::vector<bool> gone(static_cast<size_t>(n_), false);
  for (int v : remove) {
    if (v < 0 || v >= n_) fail(Errc::bad_input, "vertex out of range");
    gone[static_cast<size_t>(v)] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v)
    if (!gone[static_cast<size_t>(v)]) keep.push_back(v);
  if (keep.empty()) fail(Errc::bad_input, "cannot delete every vertex");
  int m = static_cast<int>(keep.size());
  MatrixQ a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      a(i, j) = a_(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);
  return Digraph(std::move(a));
}

RatSeries hike_zeta_series(const Digraph& g, int order) {
  const auto& mu = g.char_poly();
  return RatSeries(std::vector<Rational>(mu.begin(), mu.end()), order).reciprocal();
}

std::vector<Rational> moebius_poly(const Digraph& g) { return g.char_poly(); }

RatSeries von_mangoldt_series(const Digraph& g, int order) {
  RatSeries s(order);
  MatrixQ p = g.adjacency();
  int n = g.size();
  for (int k = 1; k <= order; ++k) {
    Rational tr;
    for (int i = 0; i < n; ++i) tr += p(i, i);
    s.coeff(k) = tr;
    if (k < order) {
      MatrixQ q(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational acc;
          for (int l = 0; l < n; ++l) acc += p(i, l) * g.adjacency()(l, j);
          q(i, j) = std::move(acc);
        }
      p = std::move(q);
    }
  }
  return s;
}

RatSeries last_loop_series(const Digraph& g, const VertexSet& support, int p_len, int order) {
  if (support.empty()) fail(Errc::bad_input, "empty prime support");
  Digraph rest = g.without(support);
  const auto& mu_rest = rest.char_poly();
  RatSeries zeta = hike_zeta_series(g, order);
  RatSeries mu(std::vector<Rational>(mu_rest.begin(), mu_rest.end()), order);
  return (mu * zeta).shift(p_len);
}

namespace {

// det and derivatives of det(I - zA_{G minus p}) at z = 1/lambda, as exact
// polynomial data evaluated in BigFloat.
BigFloat poly_derivative_at(const std::vector<Rational>& poly, int k, const BigFloat& z, long wp) {
  BigFloat acc(wp);
  BigFloat zp = BigFloat::from(1L, wp);
  for (size_t j = static_cast<size_t>(k); j < poly.size(); ++j) {
    Integer falling(1);
    for (int t = 0; t < k; ++t) falling *= Integer(static_cast<long>(j) - t);
    BigFloat term = BigFloat::from(poly[j] * Rational(falling), wp);
    if (j > static_cast<size_t>(k)) {
      zp = pow_si(z, static_cast<long>(j) - k);
      term *= zp;
    }
    acc += term;
  }
  return acc;
}

}  // namespace

BigFloat loop_fraction_asymptote(const Digraph& g, const VertexSet& support, int p_len,
                                 long precision) {
  long wp = precision + 32;
  Digraph rest = g.without(support);
  BigFloat lam = round_to(g.lambda(), wp);
  BigFloat inv_lam = BigFloat::from(1L, wp) / lam;
  BigFloat det = poly_derivative_at(rest.char_poly(), 0, inv_lam, wp);
  return round_to(det / pow_si(lam, p_len), precision);
}

BigFloat sieve_error_term(const Digraph& g, const VertexSet& support, int p_len, int l, int k_max,
                          long precision) {
  if (l < 0) fail(Errc::bad_input, "negative length");
  long wp = precision + 32;
  Digraph rest = g.without(support);
  const std::vector<Rational>& mu_rest = rest.char_poly();
  BigFloat lam = round_to(g.lambda(), wp);
  BigFloat inv_lam = BigFloat::from(1L, wp) / lam;

  // f(x) = [z^x] zeta(z/lambda) = |H_x| lambda^{-x}; 0 for x < 0.
  RatSeries zeta = hike_zeta_series(g, l);
  auto f = [&](int x) -> BigFloat {
    if (x < 0 || x > l) return BigFloat(wp);
    BigFloat v = BigFloat::from(zeta.coeff(x), wp);
    return v / pow_si(lam, x);
  };
  BigFloat fl = f(l);
  if (fl.is_zero()) fail(Errc::zero_density, "no hikes of length " + std::to_string(l));

  int x = l - p_len;
  BigFloat total(wp);
  Integer kfact(1);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) kfact *= k;
    // nabla^k[f](x) = sum_j (-1)^j C(k,j) f(x - j)
    BigFloat nab(wp);
    for (int j = 0; j <= k; ++j) {
      BigFloat term = f(x - j);
      term *= BigFloat::from(Rational(binomial(static_cast<unsigned long>(k),
                                               static_cast<unsigned long>(j))),
                             wp);
      if (j % 2 == 1)
        nab -= term;
      else
        nab += term;
    }
    BigFloat coeff = nab / (fl * pow_si(lam, k) * BigFloat::from(Rational(kfact), wp));
    if (k % 2 == 1) coeff = -coeff;  // Newton backward-difference sign
    if (k == 0) coeff -= BigFloat::from(1L, wp);
    BigFloat detk = poly_derivative_at(mu_rest, k, inv_lam, wp);
    total += coeff * detk;
  }
  return round_to(total / pow_si(lam, p_len), precision);
}

WalkDensityCheck walk_density_identity(int n, long precision) {
  long wp = precision + 32;
  TorusGraph t = make_torus(n);
  Digraph g = Digraph::from_torus(t);
  Digraph del = g.without({0});

  WalkDensityCheck out;
  // Exact rational det(I - A/4) via the characteristic polynomial.
  Rational det;
  Rational quarter = rat(1, 4);
  const auto& poly = del.char_poly();
  for (size_t j = poly.size(); j-- > 0;) det = det * quarter + poly[j];
  out.lhs = BigFloat::from(det, precision);

  BigFloat prod = BigFloat::from(1L, wp);
  bool skipped_top = false;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (!skipped_top && j == 0 && k == 0) {
        skipped_top = true;  // the single dominant eigenvalue 4
        continue;
      }
      BigFloat c1(wp), c2(wp);
      mpfr_const_pi(c1.raw(), MPFR_RNDN);
      BigFloat ang1 = BigFloat::from(2L * j, wp) * c1 / BigFloat::from(static_cast<long>(n), wp);
      BigFloat ang2 = BigFloat::from(2L * k, wp) * c1 / BigFloat::from(static_cast<long>(n), wp);
      mpfr_cos(c1.raw(), ang1.raw(), MPFR_RNDN);
      mpfr_cos(c2.raw(), ang2.raw(), MPFR_RNDN);
      BigFloat ev = BigFloat::from(2L, wp) * c1 + BigFloat::from(2L, wp) * c2;
      prod *= BigFloat::from(1L, wp) - ev / BigFloat::from(4L, wp);
    }
  out.alpha_n = round_to(prod, precision);
  out.rhs = round_to(prod / BigFloat::from(static_cast<long>(t.N), wp), precision);
  out.per_site = round_to(exp(log(prod) / BigFloat::from(static_cast<long>(t.N), wp)), precision);
  return out;
}

}  // namespace finite
}  // namespace lel
