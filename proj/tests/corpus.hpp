#pragma once

// Seeded generator for the cross-module property corpus: paths, cycles and
// trees with deliberate input placements (right and wrong), plus sparse
// connected graphs. Everything is deterministic in the seed.

#include <cstdint>
#include <vector>

#include "sscnet/graph.hpp"

namespace corpus {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }
};

enum class Family { Path, Cycle, Tree, Sparse };

struct Fixture {
  Family family;
  sscnet::NetworkSpec spec;
  std::vector<int> attachments;  // input targets, for the lemma checks
};

inline Fixture generate_one(Rng& rng) {
  using sscnet::Sign;
  Fixture fx;
  auto sign = [&] { return rng.chance(0.8) ? Sign::Positive : Sign::Negative; };
  int pick = rng.range(0, 3);
  fx.family = static_cast<Family>(pick);
  switch (fx.family) {
    case Family::Path: {
      int n = rng.range(2, 8);
      for (int i = 1; i <= n; ++i) fx.spec.state_nodes.push_back(i);
      for (int i = 1; i < n; ++i) fx.spec.state_edges.push_back({i, i + 1, sign()});
      int t = rng.range(1, n);
      fx.spec.input_nodes.push_back(101);
      fx.spec.input_edges.push_back({101, t, Sign::Positive});
      fx.attachments = {t};
      break;
    }
    case Family::Cycle: {
      int n = rng.range(3, 8);
      for (int i = 1; i <= n; ++i) fx.spec.state_nodes.push_back(i);
      for (int i = 1; i < n; ++i) fx.spec.state_edges.push_back({i, i + 1, sign()});
      fx.spec.state_edges.push_back({1, n, sign()});
      int t1 = rng.range(1, n);
      int t2 = t1;
      while (t2 == t1) t2 = rng.range(1, n);
      fx.spec.input_nodes = {101, 102};
      fx.spec.input_edges = {{101, t1, Sign::Positive}, {102, t2, Sign::Positive}};
      fx.attachments = {t1, t2};
      break;
    }
    case Family::Tree: {
      int n = rng.range(3, 8);
      for (int i = 1; i <= n; ++i) fx.spec.state_nodes.push_back(i);
      for (int i = 2; i <= n; ++i) {
        fx.spec.state_edges.push_back({rng.range(1, i - 1), i, sign()});
      }
      int k = rng.range(2, 3);
      for (int j = 0; j < k; ++j) {
        int t = rng.range(1, n);
        bool dup = false;
        for (int prev : fx.attachments) dup = dup || prev == t;
        if (dup) {
          --j;
          continue;
        }
        fx.spec.input_nodes.push_back(101 + j);
        fx.spec.input_edges.push_back({101 + j, t, Sign::Positive});
        fx.attachments.push_back(t);
      }
      break;
    }
    case Family::Sparse: {
      int n = rng.range(3, 8);
      for (int i = 1; i <= n; ++i) fx.spec.state_nodes.push_back(i);
      for (int i = 2; i <= n; ++i) {
        fx.spec.state_edges.push_back({rng.range(1, i - 1), i, sign()});
      }
      int extra = rng.range(0, 2);
      for (int j = 0; j < extra; ++j) {
        int a = rng.range(1, n);
        int b = rng.range(1, n);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        bool dup = false;
        for (const auto& e : fx.spec.state_edges) {
          dup = dup || (e.a == a && e.b == b);
        }
        if (!dup) fx.spec.state_edges.push_back({a, b, sign()});
      }
      int k = rng.range(1, 2);
      for (int j = 0; j < k; ++j) {
        int t = rng.range(1, n);
        bool dup = false;
        for (int prev : fx.attachments) dup = dup || prev == t;
        if (dup) {
          --j;
          continue;
        }
        fx.spec.input_nodes.push_back(101 + j);
        fx.spec.input_edges.push_back({101 + j, t, Sign::Positive});
        fx.attachments.push_back(t);
      }
      break;
    }
  }
  return fx;
}

inline std::vector<Fixture> make_corpus(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Fixture> out;
  while (static_cast<int>(out.size()) < count) out.push_back(generate_one(rng));
  return out;
}

}  // namespace corpus
