#ifndef LEL_SERIES_HPP
#define LEL_SERIES_HPP

#include <vector>

#include "lel/big_float.hpp"
#include "lel/lattice.hpp"
#include "lel/rat_series.hpp"

namespace lel {
namespace series {

// Ordinary generating function R(z) of closed walks from a fixed vertex:
// [z^(2n)] = binom(2n,n)^2, odd coefficients vanish.
RatSeries closed_walk_series(int order);

// [z^n] = number of n-step walks with displacement (dx,dy):
// binom(n,(n+dx+dy)/2) * binom(n,(n+dx-dy)/2) when both are integral.
RatSeries displacement_series(int dx, int dy, int order);

// R_p(z) = z^l(p) det(I + z R(z) S_p) on the infinite lattice: exact
// integer coefficients counting closed walks whose last erased loop is p.
RatSeries loop_walk_series(const Sap& p, int order);

// Zeta function of rooted hikes exp(Int (R(z)-1)/z dz) and its reciprocal.
RatSeries rooted_hike_zeta(int order);
RatSeries rooted_hike_moebius(int order);

// alpha = (1/4) e^(4C/pi), C Catalan's constant: the per-vertex density
// ratio between hikes and closed walks.
BigFloat lattice_alpha(long precision);

struct RatioRow {
  int ell = 0;
  double ratio = 0;         // [z^ell] R_p / [z^ell] R
  double scaled_error = 0;  // (ratio - limit) * ell
};
// Hadamard-division convergence data: the ratio tends to the exact
// fraction, the scaled error stays bounded (inverse-length decay).
std::vector<RatioRow> ratio_convergence(const Sap& p, int order);

// Walk correction f_w(l) = binom(l, l/2)^2 4^(-l) for even l, else 0;
// negative arguments return 0 (backward-difference convention).
Rational walk_correction(int ell);

struct ClosedFormCheck {
  double series_value = 0;
  double closed_form_value = 0;
};
// Evaluates the truncated series and the elliptic-integral closed form of
// the edge / unit-square loop-walk series at z0 in (0, 1/4); truncation
// order is chosen so the series tail is below 1e-9.
ClosedFormCheck closed_form_check_edge(double z0);
ClosedFormCheck closed_form_check_square(double z0);

}  // namespace series
}  // namespace lel

#endif
