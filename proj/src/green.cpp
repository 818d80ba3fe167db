#include "lel/green.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <utility>
#include <vector>

namespace lel {
namespace green {

namespace {

// Octant table t[m][n], 0 <= n <= m: value of c at displacement (m, n) as
// (a, b) meaning a + b/pi. Grown column by column under a mutex.
struct Table {
  std::mutex mu;
  std::vector<std::vector<std::pair<Rational, Rational>>> cols;

  Table() {
    cols.push_back({{Rational(0), Rational(0)}});                    // c(0,0) = 0
    cols.push_back({{Rational(-1), Rational(0)}, diagonal(1)});      // c(1,0), c(1,1)
  }

  // c(m,m) = -(4/pi) * sum_{k=0}^{m-1} 1/(2k+1). The sum must start at
  // k=0: starting at k=1 would give c(1,1)=0, which contradicts both the
  // recursion (with c(1,0)=-1) and the quadrature value -4/pi.
  static std::pair<Rational, Rational> diagonal(int m) {
    Rational s;
    for (int k = 0; k < m; ++k) s += rat(1, 2 * k + 1);
    return {Rational(0), Rational(-4) * s};
  }

  const std::pair<Rational, Rational>& at(int m, int n) const {
    return cols[static_cast<size_t>(m)][static_cast<size_t>(n)];
  }

  // Extend to column m+1 given columns <= m, solving the harmonic relation
  // 4 c(v) = sum of c over the four lattice neighbours (v != 0) for the
  // single unknown entry beyond the known front.
  void grow_one() {
    int m = static_cast<int>(cols.size()) - 1;
    std::vector<std::pair<Rational, Rational>> next(static_cast<size_t>(m) + 2);
    auto get = [&](int a, int b) -> const std::pair<Rational, Rational>& {
      if (b > a) std::swap(a, b);
      return at(a, b);
    };
    {  // relation at (m, 0): 4c(m,0) = c(m+1,0) + c(m-1,0) + 2c(m,1)
      auto [a0, b0] = get(m, 0);
      auto [a1, b1] = get(m - 1, 0);
      auto [a2, b2] = get(m, 1);
      next[0] = {4 * a0 - a1 - 2 * a2, 4 * b0 - b1 - 2 * b2};
    }
    for (int n = 1; n < m; ++n) {  // relation at (m, n), 1 <= n < m
      auto [a0, b0] = get(m, n);
      auto [aL, bL] = get(m - 1, n);
      auto [aU, bU] = get(m, n + 1);
      auto [aD, bD] = get(m, n - 1);
      next[static_cast<size_t>(n)] = {4 * a0 - aL - aU - aD, 4 * b0 - bL - bU - bD};
    }
    {  // relation at (m, m): 4c(m,m) = 2c(m+1,m) + 2c(m,m-1)
      auto [a0, b0] = get(m, m);
      auto [aD, bD] = get(m, m - 1);
      next[static_cast<size_t>(m)] = {2 * a0 - aD, 2 * b0 - bD};
    }
    next[static_cast<size_t>(m) + 1] = diagonal(m + 1);
    cols.push_back(std::move(next));
  }

  std::pair<Rational, Rational> get_entry(int dx, int dy) {
    int m = std::abs(dx), n = std::abs(dy);
    if (n > m) std::swap(m, n);
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cols.size()) <= m) grow_one();
    return at(m, n);
  }
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

PiPoly entry(int dx, int dy) {
  auto [a, b] = table().get_entry(dx, dy);
  return PiPoly({a, b});
}

void warm_table(int radius) {
  std::lock_guard<std::mutex> lock(table().mu);
  while (static_cast<int>(table().cols.size()) <= radius) table().grow_one();
}

MatrixPoly matrix(const PatchGraph& patch) {
  int n = static_cast<int>(patch.vertices.size());
  MatrixPoly m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Point d = patch.vertices[static_cast<size_t>(j)] - patch.vertices[static_cast<size_t>(i)];
      m(i, j) = entry(d.x, d.y);
    }
  return m;
}

namespace {

using Cplx = std::complex<double>;

// 1 - a^p b^q computed as (1-a^p) + a^p (1-b^q) with 1-a^k expanded
// through the geometric sum (1-a)(1 + a + ... + a^(k-1)); the small
// factors 1-a = 2i/(tau+i) and 1-b = 2/(tau+1) are exact, so nothing
// cancels at large tau where a, b -> 1.
Cplx one_minus_pow(Cplx base, Cplx one_minus_base, int e) {
  Cplx geo = 0.0, pw = 1.0;
  for (int k = 0; k < e; ++k) {
    geo += pw;
    pw *= base;
  }
  return one_minus_base * geo;
}

double integrand(double tau, int p, int q) {
  // p = dx - dy >= 0 and q = dx + dy > 0 after octant reduction; p + q is
  // even, so a^p b^q = (-a)^p (-b)^q and the ratios can be flipped to
  // whichever sign makes 1 - ratio small (tau < 1: both tend to -1;
  // tau > 1: both tend to +1).
  Cplx a, b, da, db;
  if (tau < 1.0) {
    a = Cplx(-tau, 1.0) / Cplx(tau, 1.0);        // (i - tau)/(i + tau)
    b = Cplx(1.0 - tau, 0.0) / Cplx(1.0 + tau, 0.0);
    da = Cplx(2.0 * tau, 0.0) / Cplx(tau, 1.0);  // 1 - a
    db = Cplx(2.0 * tau, 0.0) / Cplx(1.0 + tau, 0.0);
  } else {
    a = Cplx(tau, -1.0) / Cplx(tau, 1.0);
    b = Cplx(tau - 1.0, 0.0) / Cplx(tau + 1.0, 0.0);
    da = Cplx(0.0, 2.0) / Cplx(tau, 1.0);
    db = Cplx(2.0, 0.0) / Cplx(tau + 1.0, 0.0);
  }
  Cplx one_minus_ap = one_minus_pow(a, da, p);
  Cplx ap = 1.0 - one_minus_ap;
  Cplx bracket = one_minus_ap + ap * one_minus_pow(b, db, q);
  return bracket.real() / tau;
}

// Tail mapped back to (0,1] with u = 1/tau; smooth up to u -> 0 where the
// value tends to 2q.
double integrand_tail(double u, int p, int q) {
  return integrand(1.0 / u, p, q) / (u * u);
}

using Fn = double (*)(double, int, int);

double adaptive(Fn f, double lo, double hi, double flo, double fmid, double fhi, double whole,
                double tol, int depth, int p, int q, bool* converged) {
  double mid = 0.5 * (lo + hi);
  double lm = f(0.5 * (lo + mid), p, q);
  double rm = f(0.5 * (mid + hi), p, q);
  double left = (mid - lo) / 6.0 * (flo + 4.0 * lm + fmid);
  double right = (hi - mid) / 6.0 * (fmid + 4.0 * rm + fhi);
  if (std::abs(left + right - whole) < 15.0 * tol) return left + right + (left + right - whole) / 15.0;
  if (depth <= 0) {
    *converged = false;
    return left + right;
  }
  return adaptive(f, lo, mid, flo, lm, fmid, left, tol / 2, depth - 1, p, q, converged) +
         adaptive(f, mid, hi, fmid, rm, fhi, right, tol / 2, depth - 1, p, q, converged);
}

double simpson(Fn f, double lo, double hi, double tol, int p, int q, bool* converged) {
  double flo = f(lo, p, q);
  double fhi = f(hi, p, q);
  double fmid = f(0.5 * (lo + hi), p, q);
  double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return adaptive(f, lo, hi, flo, fmid, fhi, whole, tol, 48, p, q, converged);
}

}  // namespace

double entry_numeric(int dx, int dy, double quadrature_tol) {
  if (quadrature_tol <= 0) fail(Errc::bad_input, "quadrature_tol must be positive");
  int m = std::abs(dx), n = std::abs(dy);
  if (n > m) std::swap(m, n);  // same dihedral symmetry as the exact table
  int p = m - n, q = m + n;
  if (q == 0) return 0.0;
  bool converged = true;
  double v = simpson(&integrand, 1e-12, 1.0, quadrature_tol / 3, p, q, &converged) +
             simpson(&integrand_tail, 1e-12, 1.0, quadrature_tol / 3, p, q, &converged);
  if (!converged) fail(Errc::quadrature_not_converged, "adaptive refinement hit depth limit");
  return -v / M_PI;
}

}  // namespace green
}  // namespace lel
