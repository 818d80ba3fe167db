#ifndef LEL_LATTICE_HPP
#define LEL_LATTICE_HPP

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lel/errors.hpp"

namespace lel {

// Coordination number of the square lattice. A property of the lattice
// model, not a constant to scatter through formulas.
inline constexpr int kLatticeDegree = 4;

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

struct PointHash {
  size_t operator()(const Point& p) const {
    uint64_t v = (static_cast<uint64_t>(static_cast<uint32_t>(p.x)) << 32) |
                 static_cast<uint32_t>(p.y);
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    return static_cast<size_t>(v);
  }
};

// Step alphabet in enumeration order.
inline constexpr char kStepChars[4] = {'R', 'U', 'L', 'D'};
inline constexpr Point kStepDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int step_index(char c);  // throws bad_step
inline Point step_dir(char c) { return kStepDirs[step_index(c)]; }

// Anchored, oriented self-avoiding polygon: a closed walk from the origin
// visiting no vertex twice (except first = last). Length 2 is an edge
// cycle. The step string determines anchor and orientation uniquely.
struct Sap {
  std::string steps;
  std::vector<Point> vertices;  // visited points, origin first; size == length
  int length = 0;
};

// Validates closure and self-avoidance; throws EmptyInput/NotClosed/NotSimple.
Sap parse_sap(const std::string& steps);

// Traverses the same polygon backwards (opposite orientation, same support).
Sap reverse(const Sap& p);

enum class KeyMode { oriented_anchored, shape };

// oriented_anchored: distinguishes anchor and orientation (the step string).
// shape: identifies all translates of the vertex support; orientation and
// anchor fold away because the support determines the fraction.
std::string canonical_key(const Sap& p, KeyMode mode);
std::string shape_key_of_support(std::vector<Point> support);

// Depth-first over steps in R,U,L,D order with Manhattan-distance pruning;
// yields every anchored oriented SAP of length <= max_len exactly once,
// in a deterministic order.
void enumerate_anchored_saps(int max_len, const std::function<void(const Sap&)>& emit);
std::vector<Sap> enumerate_anchored_saps(int max_len);

// Induced subgraph on the polygon support plus its lattice neighbours.
// `adjacency` is the induced 0/1 adjacency, `degree` its row sums.
// `incident` keeps only edges with at least one endpoint on the support
// (the edges that vanish when the polygon's vertices are deleted); the
// sieve evaluand is built from it.
struct PatchGraph {
  std::vector<Point> vertices;  // support first (walk order), then sorted neighbours
  std::unordered_map<Point, int, PointHash> index;
  int support_size = 0;
  Eigen::MatrixXi adjacency;
  Eigen::MatrixXi incident;
  Eigen::VectorXi degree;
};

PatchGraph build_patch(const Sap& p);
PatchGraph build_patch_of_support(const std::vector<Point>& support);

}  // namespace lel

#endif
