#ifndef LEL_LINALG_HPP
#define LEL_LINALG_HPP

#include <utility>
#include <vector>

#include "lel/eigen_support.hpp"

namespace lel {

// Exact adjugate and determinant over Q[1/pi] by the Faddeev-LeVerrier
// iteration: M_k = M*M_{k-1} + c_k I with c_k = -tr(M*M_{k-1})/k, so the
// only divisions are by the integers 1..n (exact in any Q-algebra). The
// matrix is cleared to a common denominator first and the iteration runs
// over integer-coefficient polynomials; adj(D*M) = D^(n-1) adj(M) undoes
// the scaling at the end. Satisfies M*adj(M) = det(M)*I exactly.
struct AdjugateResult {
  MatrixPoly adjugate;
  PiPoly det;
};
AdjugateResult adjugate_det(const MatrixPoly& m);

// As above but contracted: returns (w^T adj(M) 1, det(M)) without
// materializing the rational adjugate (the big sweeps only need the
// bilinear form).
std::pair<PiPoly, PiPoly> adjugate_bilinear(const MatrixPoly& m, const Eigen::VectorXi& w);

// Partial-pivot LU of an n x n BigFloat matrix, in place. Returns false if
// a pivot is exactly zero. `threads` > 1 splits the trailing-row updates;
// each row's arithmetic is unchanged, so results are identical for any
// thread count.
struct LuResult {
  MatrixF lu;
  std::vector<int> perm;
  int sign = 1;
  bool singular = false;
};
LuResult lu_decompose(MatrixF m, int threads = 1);

BigFloat lu_det(const LuResult& f);
VectorF lu_solve(const LuResult& f, const VectorF& rhs);
// One-norm condition estimate ||M||_1 * ||M^-1||_1 with the inverse norm
// bounded through a Hager-style probe on the factors.
BigFloat lu_condition_estimate(const LuResult& f, const BigFloat& norm1);
BigFloat matrix_norm1(const MatrixF& m);

// Determinant of a series-valued matrix by Gaussian elimination; every
// pivot must keep a unit constant term, which holds for I + z*(...).
RatSeries det_series(MatrixSeries m);

// Coefficients of det(I - zA), degree n, via traces of matrix powers and
// the Newton recurrence (exact; integer matrices stay in Z).
std::vector<Rational> char_poly_IzA(const MatrixQ& a);

}  // namespace lel

#endif
