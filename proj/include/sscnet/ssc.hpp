#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sscnet/graph.hpp"

namespace sscnet {

/// Role of a node relative to a state subset alpha: a node in the boundary
/// N(alpha)\alpha with at most one edge into alpha is dedicated, with two or
/// more it is sharing. Input nodes adjacent to alpha are always dedicated.
enum class NodeClass : std::uint8_t { Dedicated, Sharing, NotAdjacent };

struct SscOptions {
  /// Refuse enumeration when the ground set V^S \ N(V^I) has more members.
  int max_ground_bits = 30;
};

struct SsccReport {
  bool is_ssc = false;
  /// First failing alpha in (cardinality, lexicographic) order, labels.
  std::optional<std::set<int>> witness_alpha;
  std::uint64_t alphas_checked = 0;
  /// State nodes that keep a dedicated node in every subset containing them.
  std::set<int> ssc_state_nodes;
};

NodeClass classify_node(const SignedNetwork& net, int node,
                        const std::set<int>& alpha);

/// Scans the boundary N(alpha)\alpha in ascending label order and reports the
/// first dedicated node found.
std::pair<bool, std::optional<int>> has_dedicated(const SignedNetwork& net,
                                                  const std::set<int>& alpha);

/// Decides strong sign controllability by enumerating every nonempty
/// alpha inside V^S \ N(V^I); subsets touching an input target pass
/// automatically and are skipped. Requires an accessible network.
SsccReport check_ssc(const SignedNetwork& net, const SscOptions& opts = {});

/// State nodes k such that every alpha containing k has a dedicated node.
std::set<int> ssc_state_nodes(const SignedNetwork& net,
                              const SscOptions& opts = {});

/// Same decision over net's state set with the members of virtual_inputs
/// lifted out of the state side and granted the input cardinality rule: a
/// virtual node is dedicated to alpha when exactly one of its remaining
/// in-network neighbors lies in alpha. Passing an empty set reduces to
/// check_ssc.
SsccReport check_ssc_with_virtual_inputs(const SignedNetwork& net,
                                         const std::set<int>& virtual_inputs,
                                         const SscOptions& opts = {});

namespace detail {

/// Early-exit variant used by search loops: true iff SSC; no V^SC sweep.
bool ssc_decide(const SignedNetwork& net, const std::set<int>& virtual_inputs,
                const SscOptions& opts = {});

}  // namespace detail

}  // namespace sscnet
