#ifndef LEL_SIEVE_HPP
#define LEL_SIEVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lel/big_float.hpp"
#include "lel/lattice.hpp"
#include "lel/pi_poly.hpp"
#include "lel/store.hpp"

namespace lel {
namespace sieve {

// Fraction of all closed walks whose last erased loop is p, as an exact
// element of Q[1/pi]. Evaluates deg^T adj(I + C/lambda * S_p) 1 / lambda^(l+1)
// over the polygon's patch, where S_p keeps the edges incident to the
// polygon and deg its row sums; the adjugate runs in exact arithmetic.
PiPoly fraction_exact(const Sap& p);
PiPoly fraction_exact_of_support(const std::vector<Point>& support, int ell);

// Same value with BigFloat matrix arithmetic: one pivoted LU gives
// det(M) and M^-1 * 1. Falls back to the exact path when the condition
// estimate exceeds 2^(precision/2).
BigFloat fraction_numeric(const Sap& p, long precision = kDefaultPrecision, int threads = 1);
BigFloat fraction_numeric_of_support(const std::vector<Point>& support, int ell,
                                     long precision = kDefaultPrecision, int threads = 1);

struct FractionResult {
  std::string sap_key;
  int ell = 0;
  int patch_size = 0;
  std::optional<PiPoly> exact;
  BigFloat numeric;
};
FractionResult fraction(const Sap& p, bool want_exact, long precision = kDefaultPrecision,
                        int threads = 1);

struct SweepRow {
  int L = 0;
  BigFloat S;
  long count = 0;  // anchored oriented SAPs of length <= L
};
struct SweepTable {
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  int max_len = 14;
  bool exact = false;  // also store the exact polynomial per shape
  long precision = kDefaultPrecision;
  int threads = 1;
  bool dedup = true;   // one computation per vertex support, scaled by multiplicity
  Store* cache = nullptr;
};

// S(L) = sum over anchored oriented SAPs of length <= L of the fraction.
// Work splits by shape class; results merge in key order, so the table is
// identical for any thread count and bit-exact on cache replay.
SweepTable sweep(const SweepOptions& opt);

// Least-squares slope of log(1 - S(L)) against log(L) over rows with
// L >= 6. Throws InsufficientData below 4 usable rows.
double fit_exponent(const SweepTable& table);

}  // namespace sieve
}  // namespace lel

#endif
