#pragma once

// Small networks used throughout the test suites. State nodes carry the
// labels 1..n; input nodes live at 101+.

#include <set>
#include <vector>

#include "sscnet/components.hpp"
#include "sscnet/graph.hpp"

namespace fixtures {

using sscnet::BridgeGraph;
using sscnet::InputEdge;
using sscnet::NetworkSpec;
using sscnet::PactusDecomposition;
using sscnet::Sign;
using sscnet::SignedNetwork;
using sscnet::StateEdge;

constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

inline SignedNetwork make(std::vector<int> states, std::vector<StateEdge> edges,
                          std::vector<InputEdge> inputs) {
  NetworkSpec spec;
  spec.state_nodes = std::move(states);
  spec.state_edges = std::move(edges);
  for (const InputEdge& e : inputs) spec.input_nodes.push_back(e.input);
  spec.input_edges = std::move(inputs);
  return build_network(spec);
}

inline std::vector<int> iota(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

// 4-node square with two inputs, the running introductory example.
inline SignedNetwork fig1b() {
  return make({1, 2, 3, 4}, {{1, 2, P}, {2, 3, P}, {3, 4, P}, {1, 4, P}},
              {{101, 2, P}, {102, 3, P}});
}

// Path 1-2-3-4 with the input at a terminal (SSC) or the interior (not).
inline SignedNetwork fig2a() {
  return make({1, 2, 3, 4}, {{1, 2, P}, {2, 3, P}, {3, 4, P}}, {{101, 4, P}});
}
inline SignedNetwork fig2b() {
  return make({1, 2, 3, 4}, {{1, 2, P}, {2, 3, P}, {3, 4, P}}, {{101, 3, P}});
}

// Five-node tree; (a) splits into two input-terminated paths, (b) does not.
inline std::vector<StateEdge> tree5_edges() {
  return {{1, 2, P}, {2, 3, P}, {2, 4, P}, {4, 5, P}};
}
inline SignedNetwork fig3a() {
  return make(iota(1, 5), tree5_edges(), {{101, 3, P}, {102, 5, P}});
}
inline SignedNetwork fig3b() {
  return make(iota(1, 5), tree5_edges(), {{101, 4, P}, {102, 5, P}});
}

// 4-cycle; (a) inputs on adjacent nodes, (b) on opposite nodes.
inline std::vector<StateEdge> cycle4_edges() {
  return {{1, 2, P}, {2, 3, P}, {3, 4, P}, {1, 4, P}};
}
inline SignedNetwork fig4a() {
  return make(iota(1, 4), cycle4_edges(), {{101, 2, P}, {102, 3, P}});
}
inline SignedNetwork fig4b() {
  return make(iota(1, 4), cycle4_edges(), {{101, 1, P}, {102, 3, P}});
}

// 16-node chain: path 1-2-3, 6-cycle 4..9, triangle 10..12, 4-cycle 13..16,
// joined by single bridge edges (3,4), (9,12), (11,16).
inline std::vector<StateEdge> fig5_edges() {
  return {{1, 2, P},   {2, 3, P},   {3, 4, P},   {4, 5, P},  {5, 6, P},
          {6, 7, P},   {7, 8, P},   {8, 9, P},   {4, 9, P},  {9, 12, P},
          {10, 11, P}, {10, 12, P}, {11, 12, P}, {11, 16, P},{13, 14, P},
          {14, 15, P}, {15, 16, P}, {13, 16, P}};
}
inline SignedNetwork fig5a() { return make(iota(1, 16), fig5_edges(), {}); }
inline SignedNetwork fig5c() {
  return make(iota(1, 16), fig5_edges(),
              {{101, 1, P}, {102, 5, P}, {103, 10, P}, {104, 13, P}});
}
inline PactusDecomposition fig5_dec() {
  PactusDecomposition dec;
  dec.components = {{1, 2, 3}, {4, 5, 6, 7, 8, 9}, {10, 11, 12}, {13, 14, 15, 16}};
  dec.component_edges = {
      {{1, 2, P}, {2, 3, P}},
      {{4, 5, P}, {5, 6, P}, {6, 7, P}, {7, 8, P}, {8, 9, P}, {4, 9, P}},
      {{10, 11, P}, {10, 12, P}, {11, 12, P}},
      {{13, 14, P}, {14, 15, P}, {15, 16, P}, {13, 16, P}}};
  dec.bridges = {{1, 2, {{3, 4, P}}}, {2, 3, {{9, 12, P}}}, {3, 4, {{11, 16, P}}}};
  return dec;
}

// 9-node two-component example: path 1-2-3 bridged twice into the 6-cycle.
inline std::vector<StateEdge> fig6_edges() {
  return {{1, 2, P}, {2, 3, P}, {2, 6, P}, {3, 4, P}, {4, 5, P},
          {5, 6, P}, {6, 7, P}, {7, 8, P}, {8, 9, P}, {4, 9, P}};
}
inline SignedNetwork fig6a() {
  return make(iota(1, 9), fig6_edges(), {{101, 1, P}, {102, 3, P}});
}
inline SignedNetwork fig6a_bare() { return make(iota(1, 9), fig6_edges(), {}); }
inline PactusDecomposition fig6_dec() {
  PactusDecomposition dec;
  dec.components = {{1, 2, 3}, {4, 5, 6, 7, 8, 9}};
  dec.component_edges = {
      {{1, 2, P}, {2, 3, P}},
      {{4, 5, P}, {5, 6, P}, {6, 7, P}, {7, 8, P}, {8, 9, P}, {4, 9, P}}};
  dec.bridges = {{1, 2, {{2, 6, P}, {3, 4, P}}}};
  return dec;
}
// The cycle component seen on its own, with the bridge nodes 2, 3 kept as
// input-like attachments.
inline SignedNetwork fig6b_component(std::vector<InputEdge> extra = {}) {
  return make({2, 3, 4, 5, 6, 7, 8, 9},
              {{2, 6, P}, {3, 4, P}, {4, 5, P}, {5, 6, P}, {6, 7, P},
               {7, 8, P}, {8, 9, P}, {4, 9, P}},
              std::move(extra));
}

// 16-node general chain with a two-edge bridge and multi-edge joins.
inline std::vector<StateEdge> fig7_edges() {
  return {{1, 2, P},   {2, 3, P},   {2, 6, P},   {3, 4, P},   {4, 5, P},
          {5, 6, P},   {6, 7, P},   {7, 8, P},   {8, 9, P},   {4, 9, P},
          {4, 10, P},  {9, 12, P},  {10, 11, P}, {10, 12, P}, {11, 12, P},
          {12, 13, P}, {13, 14, P}, {14, 15, P}, {15, 16, P}, {13, 16, P}};
}
inline SignedNetwork fig7() { return make(iota(1, 16), fig7_edges(), {}); }
inline PactusDecomposition fig7_dec() {
  PactusDecomposition dec;
  dec.components = {{1, 2, 3}, {4, 5, 6, 7, 8, 9}, {10, 11, 12}, {13, 14, 15, 16}};
  dec.component_edges = {
      {{1, 2, P}, {2, 3, P}},
      {{4, 5, P}, {5, 6, P}, {6, 7, P}, {7, 8, P}, {8, 9, P}, {4, 9, P}},
      {{10, 11, P}, {10, 12, P}, {11, 12, P}},
      {{13, 14, P}, {14, 15, P}, {15, 16, P}, {13, 16, P}}};
  dec.bridges = {{1, 2, {{2, 6, P}, {3, 4, P}}},
                 {2, 3, {{4, 10, P}, {9, 12, P}}},
                 {3, 4, {{12, 13, P}}}};
  return dec;
}
// Output of the merging walkthrough: inputs at 1, 3, 7, 14.
inline SignedNetwork fig8e() {
  return make(iota(1, 16), fig7_edges(),
              {{101, 1, P}, {102, 3, P}, {103, 7, P}, {104, 14, P}});
}

inline SignedNetwork path_n(int n, int input_at) {
  std::vector<StateEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, P});
  return make(iota(1, n), edges, {{101, input_at, P}});
}

inline SignedNetwork cycle_n(int n, int at1, int at2) {
  std::vector<StateEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, P});
  edges.push_back({1, n, P});
  return make(iota(1, n), edges, {{101, at1, P}, {102, at2, P}});
}

// The 3-node path driven from the middle, the symbolic worked example.
inline SignedNetwork path3_mid() { return path_n(3, 2); }

}  // namespace fixtures
