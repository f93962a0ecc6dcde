#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sscnet/graph.hpp"

namespace sscnet {

enum class ComponentKind : std::uint8_t {
  SymPath,   // connected, acyclic, all degrees <= 2 (single node included)
  SymCycle,  // connected, all degrees exactly 2, n >= 3
  PathType,  // step-graph classification used by the merging process
  TreeType,  // connected acyclic with a node of degree >= 3
  CycleType, // contains a cycle but is not a plain sym-cycle
  Other,
};

const char* to_string(ComponentKind k);

/// Exact kind of a connected state graph. Inputs on the network, if any, are
/// ignored. Throws Disconnected.
ComponentKind classify_component(const SignedNetwork& component);

/// Sym-path with one input: SSC iff the input attaches at a terminal node
/// (degree <= 1; a single node counts as its own terminal).
bool check_lemma_path(const SignedNetwork& component,
                      const std::set<int>& input_attachments);

/// Tree with m >= 2 inputs: SSC iff the tree splits into m disjoint sym-paths
/// chained by single bridge edges, each path holding exactly one attachment at
/// a terminal. Decided by exhaustive search over which tree edges act as
/// bridges.
bool check_lemma_tree(const SignedNetwork& component,
                      const std::set<int>& input_attachments);

/// Sym-cycle with two inputs: SSC iff the two attachment nodes are adjacent.
bool check_lemma_cycle(const SignedNetwork& component,
                       const std::set<int>& input_attachments);

/// Edges joining two consecutive components of a chain. Injective: no node
/// appears in two edges of the same bridge graph.
struct BridgeGraph {
  int i = 0;  // 1-based component indices, j == i + 1
  int j = 0;
  std::vector<StateEdge> edges;
};

struct PactusDecomposition {
  /// Per-component state labels, chain order.
  std::vector<std::vector<int>> components;
  /// Induced edges of each component.
  std::vector<std::vector<StateEdge>> component_edges;
  std::vector<BridgeGraph> bridges;  // bridges[k] joins components k+1, k+2
  std::vector<ComponentKind> kinds;
};

/// Checks every decomposition invariant against the network: disjoint
/// components covering all state nodes, each one a sym-path or sym-cycle,
/// bridge edges exactly the cross-component edges, consecutive-only with
/// injective endpoints within the size bound. Diagnostics explain failures.
bool validate_decomposition(const SignedNetwork& net,
                            const PactusDecomposition& dec,
                            std::vector<std::string>* diagnostics = nullptr);

/// Best-effort decomposition search: backtracks over chains of induced paths
/// and cycles. Returns the decomposition with the fewest components (ties:
/// lowest minimum label in component 1), or nothing when no chain covers the
/// graph or the search budget runs out. Never returns an invalid result.
std::optional<PactusDecomposition> auto_decompose(const SignedNetwork& net);

namespace detail {

/// Builds the state-only subnetwork induced by `nodes` plus `extra_edges`
/// (whose endpoints are all included automatically), with the given inputs.
SignedNetwork induced_subnetwork(const SignedNetwork& net,
                                 const std::set<int>& nodes,
                                 const std::vector<StateEdge>& extra_edges,
                                 const std::vector<InputEdge>& inputs);

/// Lemma-2 partition search in placement mode: smallest m >= min_parts for
/// which the tree splits into m chained sym-paths, together with the
/// lexicographically smallest set of per-path terminal attachment nodes.
std::optional<std::vector<int>> tree_partition_attachments(
    const SignedNetwork& tree, int min_parts);

}  // namespace detail

}  // namespace sscnet
