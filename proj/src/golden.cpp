#include "lel/golden.hpp"

namespace lel {
namespace golden {

// Identified by sweeping every perimeter-18 shape class and keeping the
// ones whose fraction matches the closed form below; the survivors are the
// dihedral images of one polygon, and this representative reproduces
// kLongSapCoeffs exactly, coefficient by coefficient.
const char* kLongSapSteps = "RRRUULDLUURULLDDDD";

const std::array<const char*, 13> kLongSapCoeffs = {
    "1721510367131231944781594624",
    "-6733029120634416611029155840",
    "12001725045126647537146527744",
    "-12895675745638007921939841024",
    "9303982639359984674575220736",
    "-4748903115679537036020154368",
    "1758418560456019196044640256",
    "-475910723284488375970037760",
    "93430267561362281294131200",
    "-12973459941155225172708000",
    "1209211981439562793530000",
    "-67906363349663583525000",
    "1736896666805181140625",
};

// 4^18 * 8303765625 / 8388608 = 8192 * 8303765625.
const char* kLongSapDenominator = "68024448000000";

}  // namespace golden
}  // namespace lel
