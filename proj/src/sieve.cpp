#include "lel/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <map>
#include <thread>
#include <unordered_map>

#include "lel/green.hpp"
#include "lel/linalg.hpp"
#include "lel/version.hpp"

namespace lel {
namespace sieve {

namespace {

Rational lambda_power(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), kLatticeDegree, static_cast<unsigned long>(e));
  Rational q(1, p);
  q.canonicalize();
  return q;
}

// M = I + (C/lambda) * S over Q[1/pi]; S has at most lambda entries per
// column, so assemble column-wise instead of a dense product.
MatrixPoly sieve_matrix_exact(const PatchGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  const Rational inv_lambda = rat(1, kLatticeDegree);
  MatrixPoly m(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> touching;
    for (int l = 0; l < n; ++l)
      if (g.incident(l, j)) touching.push_back(l);
    for (int i = 0; i < n; ++i) {
      PiPoly acc;
      for (int l : touching) {
        Point d = g.vertices[static_cast<size_t>(l)] - g.vertices[static_cast<size_t>(i)];
        acc += green::entry(d.x, d.y);
      }
      acc = inv_lambda * acc;
      if (i == j) acc += PiPoly::constant(Rational(1));
      m(i, j) = std::move(acc);
    }
  }
  return m;
}

Eigen::VectorXi incident_degree(const PatchGraph& g) { return g.incident.rowwise().sum(); }

}  // namespace

PiPoly fraction_exact_of_support(const std::vector<Point>& support, int ell) {
  PatchGraph g = build_patch_of_support(support);
  MatrixPoly m = sieve_matrix_exact(g);
  auto [bilinear, det] = adjugate_bilinear(m, incident_degree(g));
  (void)det;
  return lambda_power(ell + 1) * bilinear;
}

PiPoly fraction_exact(const Sap& p) { return fraction_exact_of_support(p.vertices, p.length); }

namespace {

// Float entries of C/lambda cached per octant offset at working precision.
struct FloatEntryCache {
  long prec;
  BigFloat inv_pi;
  std::unordered_map<uint64_t, BigFloat> memo;

  explicit FloatEntryCache(long wp)
      : prec(wp), inv_pi(BigFloat::from(1L, wp) / BigFloat::pi(wp)) {}

  const BigFloat& get(int dx, int dy) {
    int m = std::abs(dx), n = std::abs(dy);
    if (n > m) std::swap(m, n);
    uint64_t key = (static_cast<uint64_t>(m) << 32) | static_cast<uint64_t>(n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    PiPoly e = green::entry(m, n);
    Rational quarter_a = e.coeff(0) / kLatticeDegree;
    Rational quarter_b = e.coeff(1) / kLatticeDegree;
    BigFloat v = BigFloat::from(quarter_a, prec);
    BigFloat b = BigFloat::from(quarter_b, prec);
    b *= inv_pi;
    v += b;
    return memo.emplace(key, std::move(v)).first->second;
  }
};

BigFloat fraction_numeric_impl(const PatchGraph& g, int ell, long precision, int threads,
                               bool* fell_back) {
  const long wp = precision + 64;
  // The factorization runs at a reduced precision when the target is very
  // high; iterative refinement with full-precision residuals recovers the
  // solve, and the determinant's relative error (~ n^2 ulp at fp bits)
  // stays far below anything the fraction exposes.
  const long fp = wp <= 704 ? wp : 640;
  int n = static_cast<int>(g.vertices.size());
  FloatEntryCache cache(wp);

  MatrixF m(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> touching;
    for (int l = 0; l < n; ++l)
      if (g.incident(l, j)) touching.push_back(l);
    for (int i = 0; i < n; ++i) {
      BigFloat acc(wp);
      for (int l : touching) {
        Point d = g.vertices[static_cast<size_t>(l)] - g.vertices[static_cast<size_t>(i)];
        acc += cache.get(d.x, d.y);
      }
      if (i == j) acc += BigFloat::from(1L, wp);
      m(i, j) = std::move(acc);
    }
  }

  LuResult f;
  BigFloat norm1 = matrix_norm1(m);
  if (fp == wp) {
    f = lu_decompose(m, threads);
  } else {
    MatrixF rounded(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rounded(i, j) = round_to(m(i, j), fp);
    f = lu_decompose(std::move(rounded), threads);
  }
  bool bad = f.singular;
  if (!bad) {
    BigFloat cond = lu_condition_estimate(f, round_to(norm1, fp));
    BigFloat limit = pow_si(BigFloat::from(2L, fp), precision / 2);
    bad = cond > limit;
  }
  if (bad) {
    *fell_back = true;
    return BigFloat(precision);
  }

  VectorF ones_fp(n);
  for (int i = 0; i < n; ++i) ones_fp[i] = BigFloat::from(1L, fp);
  VectorF x = lu_solve(f, ones_fp);
  for (int i = 0; i < n; ++i) x[i] = round_to(x[i], wp);
  if (fp < wp) {
    // Each refinement pass gains ~fp bits; two passes cover wp with slack.
    for (int pass = 0; pass < 2 + static_cast<int>(wp / fp); ++pass) {
      VectorF r(n);
      for (int i = 0; i < n; ++i) r[i] = BigFloat::from(1L, wp);
      for (int i = 0; i < n; ++i) {
        BigFloat& ri = r[i];
        for (int j = 0; j < n; ++j) ri.submul(m(i, j), x[j]);
      }
      BigFloat rnorm(wp), xnorm(wp);
      for (int i = 0; i < n; ++i) {
        if (abs(r[i]) > rnorm) rnorm = abs(r[i]);
        if (abs(x[i]) > xnorm) xnorm = abs(x[i]);
      }
      if (rnorm < pow_si(BigFloat::from(2L, wp), -(wp - 8)) * xnorm) break;
      VectorF r_fp(n);
      for (int i = 0; i < n; ++i) r_fp[i] = round_to(r[i], fp);
      VectorF dx = lu_solve(f, r_fp);
      for (int i = 0; i < n; ++i) x[i] += dx[i];
    }
  }

  Eigen::VectorXi deg = incident_degree(g);
  BigFloat s(wp);
  for (int i = 0; i < n; ++i) {
    if (deg[i] == 0) continue;
    BigFloat t = BigFloat::from(static_cast<long>(deg[i]), wp);
    t *= x[i];
    s += t;
  }
  BigFloat det = round_to(lu_det(f), wp);
  s *= det;
  s /= pow_si(BigFloat::from(static_cast<long>(kLatticeDegree), wp), ell + 1);
  return round_to(s, precision);
}

}  // namespace

BigFloat fraction_numeric_of_support(const std::vector<Point>& support, int ell, long precision,
                                     int threads) {
  if (precision < kMinPrecision) fail(Errc::bad_input, "precision must be >= 53");
  PatchGraph g = build_patch_of_support(support);
  bool fell_back = false;
  BigFloat v = fraction_numeric_impl(g, ell, precision, threads, &fell_back);
  if (!fell_back) return v;
  // Ill-conditioned at this precision: the exact path is always available.
  return round_to(fraction_exact_of_support(support, ell).eval(precision + 16), precision);
}

BigFloat fraction_numeric(const Sap& p, long precision, int threads) {
  return fraction_numeric_of_support(p.vertices, p.length, precision, threads);
}

FractionResult fraction(const Sap& p, bool want_exact, long precision, int threads) {
  FractionResult r;
  r.sap_key = canonical_key(p, KeyMode::oriented_anchored);
  r.ell = p.length;
  PatchGraph g = build_patch(p);
  r.patch_size = static_cast<int>(g.vertices.size());
  if (want_exact) {
    r.exact = fraction_exact(p);
    r.numeric = round_to(r.exact->eval(precision + 16), precision);
  } else {
    r.numeric = fraction_numeric(p, precision, threads);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

struct ShapeClass {
  std::string key;
  int ell = 0;
  long multiplicity = 0;
  std::vector<Point> support;
};

std::vector<ShapeClass> collect_classes(int max_len, bool dedup) {
  std::map<std::string, ShapeClass> classes;  // ordered: deterministic merge order
  enumerate_anchored_saps(max_len, [&](const Sap& p) {
    std::string key = dedup ? canonical_key(p, KeyMode::shape) : p.steps;
    auto it = classes.find(key);
    if (it == classes.end()) {
      ShapeClass c;
      c.key = std::move(key);
      c.ell = p.length;
      c.multiplicity = 1;
      c.support = p.vertices;
      classes.emplace(c.key, std::move(c));
    } else {
      it->second.multiplicity += 1;
    }
  });
  std::vector<ShapeClass> out;
  out.reserve(classes.size());
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return out;
}

}  // namespace

SweepTable sweep(const SweepOptions& opt) {
  if (opt.max_len < 2 || opt.max_len % 2 != 0)
    fail(Errc::bad_input, "max_len must be even and >= 2");
  std::vector<ShapeClass> classes = collect_classes(opt.max_len, opt.dedup);

  // Reusable iff the record matches the requested mode bit-exactly.
  auto usable = [&](const CacheRecord* r) {
    if (!r) return false;
    if (r->engine_version != kEngineVersion) {
      std::cerr << "lel: cache record " << r->shape_key << " from engine " << r->engine_version
                << " != " << kEngineVersion << "; recomputing\n";
      return false;
    }
    if (r->precision != opt.precision) return false;
    if (opt.exact && !r->exact) return false;
    return true;
  };

  std::vector<size_t> pending;
  for (size_t i = 0; i < classes.size(); ++i)
    if (!opt.cache || !usable(opt.cache->lookup(classes[i].key))) pending.push_back(i);

  std::vector<CacheRecord> fresh(classes.size());
  {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t t = next.fetch_add(1);
        if (t >= pending.size()) return;
        const ShapeClass& c = classes[pending[t]];
        CacheRecord r;
        r.shape_key = c.key;
        r.ell = c.ell;
        r.multiplicity = c.multiplicity;
        r.precision = opt.precision;
        r.engine_version = kEngineVersion;
        if (opt.exact) {
          PiPoly e = fraction_exact_of_support(c.support, c.ell);
          r.exact = e.str();
          r.numeric = round_to(e.eval(opt.precision + 16), opt.precision).str();
        } else {
          r.numeric = fraction_numeric_of_support(c.support, c.ell, opt.precision).str();
        }
        fresh[pending[t]] = std::move(r);
      }
    };
    int nthreads = std::max(1, opt.threads);
    if (nthreads == 1 || pending.size() < 2) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
  }

  // Single writer appends in class order; multiplicity sanity-checked when
  // replaying (the enumerator is the ground truth for it).
  std::vector<const CacheRecord*> records(classes.size(), nullptr);
  {
    size_t p = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
      if (p < pending.size() && pending[p] == i) {
        if (opt.cache) opt.cache->append(fresh[i]);
        records[i] = &fresh[i];
        ++p;
      } else {
        const CacheRecord* r = opt.cache->lookup(classes[i].key);
        if (r->multiplicity != classes[i].multiplicity)
          fail(Errc::corrupt_record, "cached multiplicity for " + classes[i].key +
                                         " disagrees with the enumerator");
        records[i] = r;
      }
    }
  }

  // Accumulate per length, then prefix-sum. Values go through the decimal
  // string in both the fresh and replay paths so reruns are bit-exact.
  SweepTable table;
  std::map<int, BigFloat> per_len;
  std::map<int, long> count_per_len;
  for (size_t i = 0; i < classes.size(); ++i) {
    const CacheRecord& r = *records[i];
    BigFloat v(opt.precision);
    mpfr_set_str(v.raw(), r.numeric.c_str(), 10, MPFR_RNDN);
    BigFloat scaled = BigFloat::from(r.multiplicity, opt.precision) * v;
    auto [it, inserted] = per_len.emplace(r.ell, scaled);
    if (!inserted) it->second += scaled;
    count_per_len[r.ell] += r.multiplicity;
  }
  BigFloat acc(opt.precision);
  long count_acc = 0;
  for (int L = 2; L <= opt.max_len; L += 2) {
    if (per_len.count(L)) acc += per_len.at(L);
    if (count_per_len.count(L)) count_acc += count_per_len.at(L);
    table.rows.push_back({L, acc, count_acc});
  }
  return table;
}

double fit_exponent(const SweepTable& table) {
  std::vector<double> xs, ys;
  for (const SweepRow& r : table.rows) {
    if (r.L < 6) continue;
    double s = r.S.to_double();
    if (!(s < 1.0)) fail(Errc::insufficient_data, "S(L) >= 1 leaves nothing to fit");
    xs.push_back(std::log(static_cast<double>(r.L)));
    ys.push_back(std::log(1.0 - s));
  }
  if (xs.size() < 4) fail(Errc::insufficient_data, "need at least 4 rows with L >= 6");
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) fail(Errc::insufficient_data, "all rows share one length");
  return sxy / sxx;
}

}  // namespace sieve
}  // namespace lel
