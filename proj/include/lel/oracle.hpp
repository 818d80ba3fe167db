#ifndef LEL_ORACLE_HPP
#define LEL_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lel/lattice.hpp"

namespace lel {
namespace oracle {

// Desk-scale guardrails for the exhaustive enumerations.
inline constexpr int kMaxCountLength = 14;
inline constexpr int kMaxHistogramLength = 12;

struct LoopEvent {
  std::string steps;  // anchored at the closure vertex (translation-invariant)
  Point closure;      // where the loop closed, in walk coordinates
};

struct ErasureRecord {
  std::vector<LoopEvent> loops;  // chronological
  std::string skeleton;          // surviving self-avoiding prefix (open walks)
  bool closed = false;
  // The last erased loop of a closed walk; throws OpenWalkNoLast otherwise.
  const std::string& last() const;
};

// Lawler's chronological loop erasure: walk along, and every time the
// current vertex re-enters the self-avoiding prefix, pop the enclosed
// loop (stack segment plus the closing step) and record it.
ErasureRecord loop_erase(const std::string& walk_steps);

// Exhaustive count of closed walks of length `ell` from the origin whose
// last erased loop is exactly p (same anchored step string).
long long count_last_loop(const Sap& p, int ell);

// One pass over all closed walks of length `ell`: anchored step string of
// the last erased loop -> count. Totals equal binom(ell, ell/2)^2.
std::map<std::string, long long> last_loop_histogram(int ell);

struct McResult {
  double estimate = 0;            // among returned walks, fraction with last loop p
  double std_error = 0;
  double truncated_fraction = 0;  // abandoned at max_len; bounds the bias
  long long returned = 0;
  long long matched = 0;
};

// Uniform nearest-neighbour walk run to its first return to the origin,
// abandoned past max_len. SplitMix64 seeded per sample index, so results
// are bit-identical for any thread count.
McResult mc_first_return(const Sap& p, long long samples, long long max_len, uint64_t seed,
                         int threads = 1);

}  // namespace oracle
}  // namespace lel

#endif
