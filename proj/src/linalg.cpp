#include "lel/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lel/errors.hpp"

namespace lel {

// ---------------------------------------------------------------------------
// Exact adjugate (Faddeev-LeVerrier over denominator-cleared Z[1/pi])

namespace {

// Dense polynomial in 1/pi with integer coefficients; degree tracked by size.
using ZPoly = std::vector<Integer>;

void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void zp_add_inplace(ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  zp_trim(a);
}

// acc += a*b
void zp_addmul(ZPoly& acc, const ZPoly& a, const ZPoly& b, Integer& scratch) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_mul(scratch.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      acc[i + j] += scratch;
    }
  }
}

void zp_divexact_ui(ZPoly& p, unsigned long k) {
  for (auto& c : p) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
}

struct ScaledMatrix {
  std::vector<ZPoly> entries;  // row-major n*n
  Integer denom;               // original = entries / denom
  int n = 0;
};

ScaledMatrix scale_to_integer(const MatrixPoly& m) {
  ScaledMatrix s;
  s.n = static_cast<int>(m.rows());
  s.denom = 1;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      for (const Rational& c : m(i, j).coeffs())
        mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), c.get_den().get_mpz_t());
  s.entries.resize(static_cast<size_t>(s.n) * s.n);
  Integer t;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      const auto& coeffs = m(i, j).coeffs();
      ZPoly& e = s.entries[static_cast<size_t>(i) * s.n + j];
      e.resize(coeffs.size());
      for (size_t k = 0; k < coeffs.size(); ++k) {
        mpz_divexact(t.get_mpz_t(), s.denom.get_mpz_t(), coeffs[k].get_den().get_mpz_t());
        e[k] = coeffs[k].get_num() * t;
      }
      zp_trim(e);
    }
  return s;
}

PiPoly unscale(const ZPoly& p, const Integer& denom_pow) {
  std::vector<Rational> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    c[i] = Rational(p[i], denom_pow);
    c[i].canonicalize();
  }
  return PiPoly(std::move(c));
}

// Runs FL on the scaled matrix; returns B_{n-1} (scaled adjugate up to sign)
// and c_n (scaled det up to sign).
struct FlCore {
  std::vector<ZPoly> bmat;  // B_{k}
  ZPoly cn;
  int n;
};

FlCore fl_core(const ScaledMatrix& s) {
  int n = s.n;
  FlCore out;
  out.n = n;
  std::vector<ZPoly>& b = out.bmat;
  b.assign(static_cast<size_t>(n) * n, {});
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i) * n + i] = {Integer(1)};

  std::vector<ZPoly> prod(static_cast<size_t>(n) * n);
  Integer scratch;
  for (int k = 1; k <= n; ++k) {
    // prod = M * B_{k-1}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ZPoly acc;
        for (int l = 0; l < n; ++l)
          zp_addmul(acc, s.entries[static_cast<size_t>(i) * n + l], b[static_cast<size_t>(l) * n + j], scratch);
        prod[static_cast<size_t>(i) * n + j] = std::move(acc);
      }

    ZPoly trace;
    for (int i = 0; i < n; ++i) zp_add_inplace(trace, prod[static_cast<size_t>(i) * n + i]);
    zp_divexact_ui(trace, static_cast<unsigned long>(k));  // exact: FL coefficients stay integral
    for (auto& c : trace) c = -c;

    if (k == n) {
      out.cn = std::move(trace);
      break;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ZPoly& e = prod[static_cast<size_t>(i) * n + j];
        if (i == j) zp_add_inplace(e, trace);
        b[static_cast<size_t>(i) * n + j] = std::move(e);
      }
  }
  return out;
}

Integer pow_int(const Integer& base, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

AdjugateResult adjugate_det(const MatrixPoly& m) {
  int n = static_cast<int>(m.rows());
  AdjugateResult r;
  if (n == 0) {
    r.det = PiPoly::constant(Rational(1));
    return r;
  }
  ScaledMatrix s = scale_to_integer(m);
  FlCore core = fl_core(s);
  int sign_adj = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
  int sign_det = (n % 2 == 0) ? 1 : -1;  // (-1)^n
  Integer dn1 = pow_int(s.denom, n - 1);
  Integer dn = pow_int(s.denom, n);
  r.adjugate.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PiPoly e = unscale(core.bmat[static_cast<size_t>(i) * n + j], dn1);
      r.adjugate(i, j) = sign_adj == 1 ? e : -e;
    }
  PiPoly det = unscale(core.cn, dn);
  r.det = sign_det == 1 ? det : -det;
  return r;
}

std::pair<PiPoly, PiPoly> adjugate_bilinear(const MatrixPoly& m, const Eigen::VectorXi& w) {
  int n = static_cast<int>(m.rows());
  if (n == 0) return {PiPoly{}, PiPoly::constant(Rational(1))};
  ScaledMatrix s = scale_to_integer(m);
  FlCore core = fl_core(s);
  ZPoly acc;
  Integer scratch;
  for (int i = 0; i < n; ++i) {
    if (w[i] == 0) continue;
    ZPoly row;
    for (int j = 0; j < n; ++j) zp_add_inplace(row, core.bmat[static_cast<size_t>(i) * n + j]);
    for (auto& c : row) c *= w[i];
    zp_add_inplace(acc, row);
  }
  int sign_adj = (n % 2 == 1) ? 1 : -1;
  int sign_det = (n % 2 == 0) ? 1 : -1;
  PiPoly bilinear = unscale(acc, pow_int(s.denom, n - 1));
  PiPoly det = unscale(core.cn, pow_int(s.denom, n));
  return {sign_adj == 1 ? bilinear : -bilinear, sign_det == 1 ? det : -det};
}

// ---------------------------------------------------------------------------
// BigFloat LU

LuResult lu_decompose(MatrixF m, int threads) {
  int n = static_cast<int>(m.rows());
  LuResult f;
  f.perm.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) f.perm[static_cast<size_t>(i)] = i;

  for (int k = 0; k < n; ++k) {
    int piv = k;
    BigFloat best = abs(m(k, k));
    for (int i = k + 1; i < n; ++i) {
      BigFloat v = abs(m(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best.is_zero()) {
      f.singular = true;
      f.lu = std::move(m);
      return f;
    }
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      std::swap(f.perm[static_cast<size_t>(piv)], f.perm[static_cast<size_t>(k)]);
      f.sign = -f.sign;
    }
    auto update_rows = [&](int i0, int i1) {
      BigFloat negl;
      for (int i = i0; i < i1; ++i) {
        BigFloat& l = m(i, k);
        l /= m(k, k);
        negl = l;
        negl.negate();
        for (int j = k + 1; j < n; ++j) m(i, j).addmul(negl, m(k, j));
      }
    };
    int rows_left = n - (k + 1);
    if (threads > 1 && rows_left >= 64) {
      std::vector<std::thread> pool;
      int per = (rows_left + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        int i0 = k + 1 + t * per;
        int i1 = std::min(n, i0 + per);
        if (i0 >= i1) break;
        pool.emplace_back(update_rows, i0, i1);
      }
      for (auto& t : pool) t.join();
    } else {
      update_rows(k + 1, n);
    }
  }
  f.lu = std::move(m);
  return f;
}

BigFloat lu_det(const LuResult& f) {
  int n = static_cast<int>(f.lu.rows());
  if (f.singular) return BigFloat(n > 0 ? f.lu(0, 0).precision() : kDefaultPrecision);
  BigFloat d = BigFloat::from(static_cast<long>(f.sign),
                              n > 0 ? f.lu(0, 0).precision() : kDefaultPrecision);
  for (int i = 0; i < n; ++i) d *= f.lu(i, i);
  return d;
}

VectorF lu_solve(const LuResult& f, const VectorF& rhs) {
  int n = static_cast<int>(f.lu.rows());
  VectorF x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[f.perm[static_cast<size_t>(i)]];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i].submul(f.lu(i, j), x[j]);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i].submul(f.lu(i, j), x[j]);
    x[i] /= f.lu(i, i);
  }
  return x;
}

BigFloat matrix_norm1(const MatrixF& m) {
  int n = static_cast<int>(m.rows());
  BigFloat best(n > 0 ? m(0, 0).precision() : kDefaultPrecision);
  for (int j = 0; j < n; ++j) {
    BigFloat col(best.precision());
    for (int i = 0; i < n; ++i) col += abs(m(i, j));
    if (col > best) best = col;
  }
  return best;
}

BigFloat lu_condition_estimate(const LuResult& f, const BigFloat& norm1) {
  // Cheap lower bound ||M^-1||_1 >= ||M^-1 v||_1 for the normalized
  // all-ones probe; enough to trip the exact-path fallback.
  int n = static_cast<int>(f.lu.rows());
  long prec = n > 0 ? f.lu(0, 0).precision() : kDefaultPrecision;
  if (f.singular) return BigFloat::from(1.0, prec) / BigFloat(prec);  // +inf
  VectorF v(n);
  for (int i = 0; i < n; ++i) v[i] = BigFloat::from(1L, prec) / BigFloat::from(static_cast<long>(n), prec);
  VectorF x = lu_solve(f, v);
  BigFloat nx(prec);
  for (int i = 0; i < n; ++i) nx += abs(x[i]);
  return nx * norm1;
}

// ---------------------------------------------------------------------------
// Series determinant

RatSeries det_series(MatrixSeries m) {
  int n = static_cast<int>(m.rows());
  if (n == 0) fail(Errc::bad_input, "empty matrix");
  int order = m(0, 0).order();
  RatSeries det = RatSeries::one(order);
  for (int k = 0; k < n; ++k) {
    const RatSeries& piv = m(k, k);
    if (piv.coeff(0) == 0)
      fail(Errc::division_by_zero, "series elimination pivot lost its unit constant term");
    det *= piv;
    RatSeries inv = piv.reciprocal();
    for (int i = k + 1; i < n; ++i) {
      bool zero = true;
      for (const Rational& c : m(i, k).coeffs())
        if (c != 0) { zero = false; break; }
      if (zero) continue;
      RatSeries fct = m(i, k) * inv;
      for (int j = k; j < n; ++j) m(i, j) -= fct * m(k, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial of I - zA via power traces

namespace {

bool all_integer(const MatrixQ& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() != 1) return false;
  return true;
}

template <typename Scalar>
std::vector<Scalar> power_traces(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  int n = static_cast<int>(a.rows());
  std::vector<Scalar> tr(static_cast<size_t>(n) + 1, Scalar(0));
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> p = a;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) tr[static_cast<size_t>(k)] += p(i, i);
    if (k < n) {
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> q(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Scalar acc(0);
          for (int l = 0; l < n; ++l) acc += p(i, l) * a(l, j);
          q(i, j) = std::move(acc);
        }
      p = std::move(q);
    }
  }
  return tr;
}

}  // namespace

std::vector<Rational> char_poly_IzA(const MatrixQ& a) {
  int n = static_cast<int>(a.rows());
  std::vector<Rational> tr(static_cast<size_t>(n) + 1);
  if (all_integer(a)) {
    using MatZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
    MatZ az(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) az(i, j) = a(i, j).get_num();
    auto t = power_traces<Integer>(az);
    for (size_t k = 0; k < t.size(); ++k) tr[k] = Rational(t[k]);
  } else {
    tr = power_traces<Rational>(a);
  }
  // det(I - zA) = exp(-sum_k tr_k z^k / k), a polynomial of degree <= n,
  // recovered exactly by the Newton recurrence.
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s;
    for (int i = 1; i <= k; ++i) s += tr[static_cast<size_t>(i)] * c[static_cast<size_t>(k - i)];
    c[static_cast<size_t>(k)] = -s / Rational(k);
  }
  return c;
}

}  // namespace lel
