#ifndef LEL_GOLDEN_HPP
#define LEL_GOLDEN_HPP

#include <array>

// Reference values for `lel verify` and the regression suites: closed-form
// fractions, generating-function coefficients and table rows that the
// engines must reproduce. Everything here is checkable from first
// principles with the oracles in this repository (brute-force walk
// enumeration, quadrature, series identities).
namespace lel {
namespace golden {

// Fraction of closed walks whose last erased loop is a fixed edge.
inline constexpr const char* kEdgeFractionExact = "1/8";

// Unit square: (1/2) x^2 - x^3 in x = 1/pi.
inline constexpr const char* kUnitSquareFractionExact = "0 + 0/pi + 1/2/pi^2 + -1/pi^3";
inline constexpr double kUnitSquareFraction = 0.0184090573879694;

// Printed-digit targets for small rectangles.
inline constexpr double kRect1x2Fraction = 0.002585276781;
inline constexpr double kRect1x3Fraction = 0.00035498516;
inline constexpr double kSquare2x2Fraction = 0.00044623399;

// Loop-walk series coefficients, even orders starting at the polygon length.
inline constexpr std::array<long, 6> kEdgeSeriesCoeffs = {1, 7, 70, 807, 10046, 131206};
inline constexpr std::array<long, 5> kUnitSquareSeriesCoeffs = {1, 12, 144, 1804, 23464};

// Rooted-hike zeta and Moebius coefficients at even orders 0..12.
inline constexpr std::array<long, 7> kRootedZetaCoeffs = {1, 2, 11, 86, 805, 8402, 94306};
inline constexpr std::array<long, 7> kRootedMoebiusCoeffs = {1, -2, -7, -50, -456, -4728, -53095};

// alpha = (1/4) e^(4C/pi) to 4 decimal places.
inline constexpr double kAlpha4dp = 0.8025;

// Brute-force counts: closed walks of length 4 with last loop a fixed
// edge, and of length 6 with last loop one oriented unit square.
inline constexpr long kEdgeCountLen4 = 7;
inline constexpr long kUnitSquareCountLen6 = 12;

// Cumulative last-loop fractions S(L), L = 2,4,...,14, to 4 decimals.
inline constexpr std::array<double, 7> kSweepTable = {0.5,    0.6473, 0.7093, 0.7493,
                                                      0.7774, 0.7984, 0.8149};

// 18-step polygon whose fraction has the 13-coefficient closed form below;
// the step string identifies the shape uniquely among all perimeter-18
// polygons (verified exactly against kLongSapCoeffs).
extern const char* kLongSapSteps;
// Coefficient of (1/pi)^(12-k) is kLongSapCoeffs[k] / kLongSapDenominator.
extern const std::array<const char*, 13> kLongSapCoeffs;
extern const char* kLongSapDenominator;
inline constexpr double kLongSapFraction = 7.7644e-9;

// 70 x 70 square boundary, 4 significant digits at >= 1024 bits.
inline constexpr double kSquare70Fraction = 1.5236e-108;
inline constexpr double kSquare70FractionLog10 = -107.817;

}  // namespace golden
}  // namespace lel

#endif
