#include "lel/elliptic.hpp"

#include <cmath>

#include "lel/errors.hpp"

namespace lel {

namespace {

struct AgmResult {
  double agm;
  double c_sum;  // sum 2^(n-1) c_n^2, for E
};

AgmResult agm(double m) {
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double c2_sum = 0.5 * m;  // n = 0 term: 2^(-1) c_0^2 with c_0^2 = m
  double pow2 = 1.0;
  while (a - b > 1e-17 * a) {
    double an = 0.5 * (a + b);
    double c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    c2_sum += pow2 * c * c;
    pow2 *= 2.0;
  }
  return {0.5 * (a + b), c2_sum};
}

}  // namespace

double elliptic_k(double m) {
  if (m < 0.0 || m >= 1.0) fail(Errc::bad_input, "elliptic parameter must be in [0,1)");
  return M_PI / (2.0 * agm(m).agm);
}

double elliptic_e(double m) {
  if (m < 0.0 || m >= 1.0) fail(Errc::bad_input, "elliptic parameter must be in [0,1)");
  AgmResult r = agm(m);
  double k = M_PI / (2.0 * r.agm);
  return k * (1.0 - r.c_sum);
}

}  // namespace lel
