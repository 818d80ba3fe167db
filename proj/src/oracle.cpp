#include "lel/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>

namespace lel {
namespace oracle {

const std::string& ErasureRecord::last() const {
  if (!closed || loops.empty())
    fail(Errc::open_walk_no_last, "open walk has no last erased loop");
  return loops.back().steps;
}

namespace {

// Self-avoiding prefix as parallel stacks: vertex, and the step that led
// to it (empty for the origin).
struct Eraser {
  std::vector<Point> stack;
  std::string steps_in;  // steps_in[i] led to stack[i+1... ] aligned: steps_in.size() == stack.size()-1
  std::unordered_map<Point, size_t, PointHash> where;

  Eraser() {
    stack.push_back({0, 0});
    where.emplace(Point{0, 0}, 0);
  }

  // Returns the erased loop when the step closes one.
  bool advance(char c, LoopEvent* out) {
    Point nxt = stack.back() + step_dir(c);
    auto it = where.find(nxt);
    if (it == where.end()) {
      stack.push_back(nxt);
      steps_in.push_back(c);
      where.emplace(nxt, stack.size() - 1);
      return false;
    }
    size_t k = it->second;
    out->closure = nxt;
    out->steps.assign(steps_in.begin() + static_cast<long>(k), steps_in.end());
    out->steps.push_back(c);
    for (size_t i = k + 1; i < stack.size(); ++i) where.erase(stack[i]);
    stack.resize(k + 1);
    steps_in.resize(k);
    return true;
  }
};

}  // namespace

ErasureRecord loop_erase(const std::string& walk_steps) {
  if (walk_steps.empty()) fail(Errc::empty_input, "empty walk");
  ErasureRecord rec;
  Eraser e;
  LoopEvent ev;
  for (char c : walk_steps)
    if (e.advance(c, &ev)) rec.loops.push_back(ev);
  rec.closed = (e.stack.size() == 1);  // everything was erased back to the origin
  rec.skeleton = e.steps_in;
  return rec;
}

namespace {

// Depth-first generation of all closed walks of a fixed length, pruned by
// the Manhattan distance home.
template <typename Leaf>
void for_all_closed_walks(int ell, Leaf&& leaf) {
  std::string steps;
  steps.reserve(static_cast<size_t>(ell));
  Point cur{0, 0};
  // Explicit recursion keeps the prune test in one place.
  auto rec = [&](auto&& self) -> void {
    int used = static_cast<int>(steps.size());
    if (used == ell) {
      if (cur == Point{0, 0}) leaf(steps);
      return;
    }
    for (int s = 0; s < 4; ++s) {
      Point nxt = cur + kStepDirs[s];
      if (std::abs(nxt.x) + std::abs(nxt.y) > ell - used - 1) continue;
      steps.push_back(kStepChars[s]);
      Point save = cur;
      cur = nxt;
      self(self);
      cur = save;
      steps.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

long long count_last_loop(const Sap& p, int ell) {
  if (ell > kMaxCountLength)
    fail(Errc::length_too_large, "exhaustive count capped at length " +
                                     std::to_string(kMaxCountLength));
  if (ell < p.length) return 0;
  long long count = 0;
  for_all_closed_walks(ell, [&](const std::string& w) {
    ErasureRecord r = loop_erase(w);
    if (r.loops.back().steps == p.steps) ++count;
  });
  return count;
}

std::map<std::string, long long> last_loop_histogram(int ell) {
  if (ell > kMaxHistogramLength)
    fail(Errc::length_too_large, "histogram sweep capped at length " +
                                     std::to_string(kMaxHistogramLength));
  if (ell < 2 || ell % 2 != 0) fail(Errc::bad_input, "length must be even and >= 2");
  std::map<std::string, long long> hist;
  for_all_closed_walks(ell, [&](const std::string& w) {
    ErasureRecord r = loop_erase(w);
    hist[r.loops.back().steps] += 1;
  });
  return hist;
}

namespace {

// SplitMix64 (Steele, Lea, Flood): one independent stream per sample,
// derived from seed and sample index; statistically plenty for walk
// simulation and trivially splittable across threads.
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t s) : state(s) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

struct McCounts {
  long long returned = 0;
  long long matched = 0;
  long long truncated = 0;
};

McCounts mc_range(const Sap& p, long long lo, long long hi, long long max_len, uint64_t seed) {
  McCounts c;
  for (long long s = lo; s < hi; ++s) {
    SplitMix seeder(seed);
    seeder.state ^= 0x2545f4914f6cdd1dULL * static_cast<uint64_t>(s + 1);
    SplitMix rng(seeder.next());
    Eraser e;
    LoopEvent ev;
    uint64_t bits = 0;
    int left = 0;
    bool returned = false;
    for (long long step = 0; step < max_len; ++step) {
      if (left == 0) {
        bits = rng.next();
        left = 32;
      }
      int dir = static_cast<int>(bits & 3);
      bits >>= 2;
      --left;
      bool closed_loop = e.advance(kStepChars[dir], &ev);
      if (closed_loop && e.stack.size() == 1) {  // first return to the origin
        returned = true;
        c.returned += 1;
        if (ev.steps == p.steps) c.matched += 1;
        break;
      }
    }
    if (!returned) c.truncated += 1;
  }
  return c;
}

}  // namespace

McResult mc_first_return(const Sap& p, long long samples, long long max_len, uint64_t seed,
                         int threads) {
  if (samples < 1) fail(Errc::bad_input, "samples must be >= 1");
  if (max_len < 2 || max_len % 2 != 0) fail(Errc::bad_input, "max_len must be even and >= 2");
  threads = std::max(1, threads);
  std::vector<McCounts> parts(static_cast<size_t>(threads));
  if (threads == 1) {
    parts[0] = mc_range(p, 0, samples, max_len, seed);
  } else {
    std::vector<std::thread> pool;
    long long per = (samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      long long lo = t * per, hi = std::min(samples, lo + per);
      if (lo >= hi) break;
      pool.emplace_back([&, t, lo, hi] { parts[static_cast<size_t>(t)] = mc_range(p, lo, hi, max_len, seed); });
    }
    for (auto& th : pool) th.join();
  }
  McCounts total;
  for (const auto& c : parts) {
    total.returned += c.returned;
    total.matched += c.matched;
    total.truncated += c.truncated;
  }
  McResult r;
  r.returned = total.returned;
  r.matched = total.matched;
  r.truncated_fraction = static_cast<double>(total.truncated) / static_cast<double>(samples);
  if (total.returned > 0) {
    r.estimate = static_cast<double>(total.matched) / static_cast<double>(total.returned);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(total.returned));
  }
  return r;
}

}  // namespace oracle
}  // namespace lel
