#include "lel/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace lel {

int step_index(char c) {
  switch (c) {
    case 'R': return 0;
    case 'U': return 1;
    case 'L': return 2;
    case 'D': return 3;
    default: fail(Errc::bad_step, std::string("unknown step '") + c + "'");
  }
}

Sap parse_sap(const std::string& steps) {
  if (steps.empty()) fail(Errc::empty_input, "empty step string");
  Sap p;
  p.steps = steps;
  p.length = static_cast<int>(steps.size());
  p.vertices.reserve(steps.size());
  std::unordered_set<Point, PointHash> seen;
  Point cur{0, 0};
  p.vertices.push_back(cur);
  seen.insert(cur);
  for (size_t i = 0; i < steps.size(); ++i) {
    cur = cur + step_dir(steps[i]);
    bool last = (i + 1 == steps.size());
    if (last) {
      if (cur != Point{0, 0}) fail(Errc::not_closed, "walk ends at (" + std::to_string(cur.x) + "," + std::to_string(cur.y) + ")");
    } else {
      if (!seen.insert(cur).second)
        fail(Errc::not_simple, "vertex revisited at step " + std::to_string(i + 1));
      p.vertices.push_back(cur);
    }
  }
  if (p.length < 2) fail(Errc::not_closed, "closed walk needs at least 2 steps");
  return p;
}

Sap reverse(const Sap& p) {
  std::string rev(p.steps.rbegin(), p.steps.rend());
  for (char& c : rev) {
    switch (c) {
      case 'R': c = 'L'; break;
      case 'L': c = 'R'; break;
      case 'U': c = 'D'; break;
      case 'D': c = 'U'; break;
    }
  }
  return parse_sap(rev);
}

std::string shape_key_of_support(std::vector<Point> support) {
  Point min{support.front()};
  for (const Point& v : support) {
    min.x = std::min(min.x, v.x);
    min.y = std::min(min.y, v.y);
  }
  for (Point& v : support) v = v - min;
  std::sort(support.begin(), support.end());
  std::ostringstream os;
  for (const Point& v : support) os << v.x << ',' << v.y << ';';
  return os.str();
}

std::string canonical_key(const Sap& p, KeyMode mode) {
  if (mode == KeyMode::oriented_anchored) return p.steps;
  return shape_key_of_support(p.vertices);
}

namespace {

struct Enumerator {
  int max_len;
  const std::function<void(const Sap&)>* emit;
  std::string steps;
  std::vector<Point> path;
  std::unordered_set<Point, PointHash> visited;

  void run() {
    path.push_back({0, 0});
    visited.insert({0, 0});
    descend();
  }

  void descend() {
    Point cur = path.back();
    int used = static_cast<int>(steps.size());
    for (int s = 0; s < 4; ++s) {
      Point nxt = cur + kStepDirs[s];
      if (nxt == Point{0, 0}) {
        if (used >= 1) {
          steps.push_back(kStepChars[s]);
          Sap p;
          p.steps = steps;
          p.vertices = path;
          p.length = used + 1;
          (*emit)(p);
          steps.pop_back();
        }
        continue;
      }
      if (visited.contains(nxt)) continue;
      // Parity makes remaining == distance impossible off by one; the
      // Manhattan bound alone prunes everything that cannot close in time.
      int dist_home = std::abs(nxt.x) + std::abs(nxt.y);
      if (used + 1 + dist_home > max_len) continue;
      steps.push_back(kStepChars[s]);
      path.push_back(nxt);
      visited.insert(nxt);
      descend();
      visited.erase(nxt);
      path.pop_back();
      steps.pop_back();
    }
  }
};

}  // namespace

void enumerate_anchored_saps(int max_len, const std::function<void(const Sap&)>& emit) {
  if (max_len < 2) fail(Errc::bad_input, "max_len must be >= 2");
  Enumerator e;
  e.max_len = max_len;
  e.emit = &emit;
  e.run();
}

std::vector<Sap> enumerate_anchored_saps(int max_len) {
  std::vector<Sap> out;
  enumerate_anchored_saps(max_len, [&](const Sap& p) { out.push_back(p); });
  return out;
}

PatchGraph build_patch_of_support(const std::vector<Point>& support) {
  PatchGraph g;
  g.vertices = support;
  g.support_size = static_cast<int>(support.size());
  std::unordered_set<Point, PointHash> on_support(support.begin(), support.end());
  std::vector<Point> neighbours;
  std::unordered_set<Point, PointHash> seen = on_support;
  for (const Point& v : support) {
    for (const Point& d : kStepDirs) {
      Point u = v + d;
      if (seen.insert(u).second) neighbours.push_back(u);
    }
  }
  std::sort(neighbours.begin(), neighbours.end());
  g.vertices.insert(g.vertices.end(), neighbours.begin(), neighbours.end());

  int n = static_cast<int>(g.vertices.size());
  g.index.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) g.index.emplace(g.vertices[static_cast<size_t>(i)], i);

  g.adjacency = Eigen::MatrixXi::Zero(n, n);
  g.incident = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const Point& v = g.vertices[static_cast<size_t>(i)];
    for (const Point& d : kStepDirs) {
      auto it = g.index.find(v + d);
      if (it == g.index.end()) continue;
      int j = it->second;
      g.adjacency(i, j) = 1;
      if (on_support.contains(v) || on_support.contains(v + d)) g.incident(i, j) = 1;
    }
  }
  g.degree = g.adjacency.rowwise().sum();
  return g;
}

PatchGraph build_patch(const Sap& p) { return build_patch_of_support(p.vertices); }

}  // namespace lel
