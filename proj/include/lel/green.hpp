#ifndef LEL_GREEN_HPP
#define LEL_GREEN_HPP

#include "lel/eigen_support.hpp"
#include "lel/lattice.hpp"
#include "lel/pi_poly.hpp"

namespace lel {
namespace green {

// Exact entry of the regularized square-lattice Green matrix for the
// displacement (dx, dy): a value a + b/pi with a, b rational. Seeds
// c(0,0)=0, c(1,0)=-1 and the diagonal c(m,m) = -(4/pi) sum_{k=0}^{m-1}
// 1/(2k+1); everything else follows from the discrete-harmonic relation
// lambda*c(v) = lambda*[v=0] + sum over lattice neighbours of c. Entries
// are memoized by octant offset; computation is serialized, lookups after
// that are read-only.
PiPoly entry(int dx, int dy);

// Precompute all entries with |dx|,|dy| <= radius (one synchronized pass).
void warm_table(int radius);

// Independent oracle: numeric quadrature of the integral representation
// -(1/pi) Int_0^inf (1/tau)(1 - ((tau-i)/(tau+i))^(dx-dy)
//                            ((tau-1)/(tau+1))^(dx+dy)) dtau  (real part).
// Throws QuadratureNotConverged when the adaptive refinement stalls.
double entry_numeric(int dx, int dy, double quadrature_tol);

// Restriction of the Green matrix to the patch: (i,j) = entry(v_j - v_i).
MatrixPoly matrix(const PatchGraph& patch);

}  // namespace green
}  // namespace lel

#endif
