#ifndef LEL_ELLIPTIC_HPP
#define LEL_ELLIPTIC_HPP

namespace lel {

// Complete elliptic integrals in the *parameter* convention:
// K(m) = Int_0^{pi/2} (1 - m sin^2 t)^(-1/2) dt, likewise E(m).
// Arithmetic-geometric-mean iteration, m in [0, 1).
double elliptic_k(double m);
double elliptic_e(double m);

}  // namespace lel

#endif
