#ifndef LEL_TORUS_HPP
#define LEL_TORUS_HPP

#include <vector>

#include "lel/eigen_support.hpp"
#include "lel/lattice.hpp"
#include "lel/rat_series.hpp"

namespace lel {

// n x n square lattice with periodic wraparound: 4-regular,
// vertex-transitive, and isometric to the plane inside a radius-n/2 ball.
struct TorusGraph {
  int n = 0;
  int N = 0;  // n*n
  Eigen::MatrixXi adjacency;
  int vertex(int x, int y) const {
    int a = ((x % n) + n) % n;
    int b = ((y % n) + n) % n;
    return a * n + b;
  }
};

TorusGraph make_torus(int n);

// Closed-form spectrum 2cos(2pi j/n) + 2cos(2pi k/n), j,k = 0..n-1.
std::vector<double> torus_spectrum(int n);

// Vertex images of the polygon support; throws SapDoesNotFit unless the
// whole patch (support + neighbours) embeds without wraparound contact.
std::vector<int> embed_sap(const TorusGraph& t, const Sap& p);

// z^l(p) det(I - zA_{T minus p}) / det(I - zA_T), exact coefficients: the
// generating function of closed walks on the torus whose last erased loop
// is p.
RatSeries loop_walk_series_torus(const TorusGraph& t, const Sap& p, int order);

}  // namespace lel

#endif
