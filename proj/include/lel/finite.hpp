#ifndef LEL_FINITE_HPP
#define LEL_FINITE_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "lel/big_float.hpp"
#include "lel/eigen_support.hpp"
#include "lel/rat_series.hpp"
#include "lel/torus.hpp"

namespace lel {
namespace finite {

// Sorted vertex indices: the support of a prime, or a single vertex.
using VertexSet = std::vector<int>;

// Finite weighted digraph with lazily computed spectral data. The caches
// are write-once; share a Digraph across threads only after touching
// lambda()/char_poly() once.
class Digraph {
public:
  explicit Digraph(MatrixQ adjacency);

  int size() const { return n_; }
  const MatrixQ& adjacency() const { return a_; }

  // Coefficients of det(I - zA), degree n. Exact.
  const std::vector<Rational>& char_poly() const;

  // Double-precision eigenvalues (general solver).
  const std::vector<std::complex<double>>& spectrum() const;

  // Dominant eigenvalue magnitude: exact degree for unweighted regular
  // graphs, otherwise the Perron root polished by Newton iteration on the
  // exact characteristic polynomial.
  const BigFloat& lambda() const;
  int dominant_multiplicity() const;

  static Digraph from_json(const std::string& text);
  static Digraph from_torus(const TorusGraph& t);
  // Induced subgraph after deleting `remove`.
  Digraph without(const VertexSet& remove) const;

private:
  int n_ = 0;
  MatrixQ a_;
  mutable std::shared_ptr<std::vector<Rational>> char_poly_;
  mutable std::shared_ptr<std::vector<std::complex<double>>> spectrum_;
  mutable std::shared_ptr<BigFloat> lambda_;
  mutable int mult_ = 0;
};

// zeta(z) = 1/det(I - zA): [z^l] is the number (weight) of hikes of length l.
RatSeries hike_zeta_series(const Digraph& g, int order);

// mu(z) = det(I - zA): signed self-avoiding-hike counts.
std::vector<Rational> moebius_poly(const Digraph& g);

// Lambda(z) = z zeta'/zeta = Tr((I - zA)^{-1}) - n = sum_k Tr(A^k) z^k,
// computed from the power traces directly.
RatSeries von_mangoldt_series(const Digraph& g, int order);

// z^p_len det(I - zA_{G minus p}) / det(I - zA): closed walks whose last
// erased loop is the prime with the given support.
RatSeries last_loop_series(const Digraph& g, const VertexSet& support, int p_len, int order);

// lambda^(-p_len) det(I - A_{G minus p}/lambda): the limiting fraction of
// hikes of length l that are walk multiples of p, as l grows.
BigFloat loop_fraction_asymptote(const Digraph& g, const VertexSet& support, int p_len,
                                 long precision = kDefaultPrecision);

// Finite-size correction: with f(l) = [z^l]zeta(z/lambda),
//   err = lambda^(-p_len) * sum_{k>=0} ((-1)^k nabla^k[f](l-p_len) /
//         (f(l) lambda^k k!) - [k=0]) det^(k)(I - zA_{G minus p})|_{z=1/lambda}.
// The (-1)^k comes from the Newton backward-difference series
// F(x-a) = sum_k (-1)^k C(a,k) nabla^k F(x); without it the identity
// asymptote + err == exact ratio fails. f(negative) = 0. Throws
// ZeroDensity when f(l) = 0 (e.g. odd lengths on bipartite graphs).
BigFloat sieve_error_term(const Digraph& g, const VertexSet& support, int p_len, int l, int k_max,
                          long precision = kDefaultPrecision);

struct WalkDensityCheck {
  BigFloat lhs;        // det(I - A_{T minus one vertex} / lambda)
  BigFloat rhs;        // alpha_N / N
  BigFloat alpha_n;    // prod over non-dominant eigenvalues (1 - ev/lambda)
  BigFloat per_site;   // alpha_N^(1/N)
};
// The torus identity relating walk density to the spectral product; exact
// up to the floating spectrum, so both sides agree to ~precision.
WalkDensityCheck walk_density_identity(int n, long precision = kDefaultPrecision);

}  // namespace finite
}  // namespace lel

#endif
