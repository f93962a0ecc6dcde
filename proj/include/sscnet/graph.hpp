#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sscnet {

/// Edge sign. Absent edges are simply not stored; there is no zero sign.
enum class Sign : std::uint8_t { Positive, Negative };

inline int sign_value(Sign s) { return s == Sign::Positive ? 1 : -1; }
inline Sign opposite(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

enum class ErrorKind {
  DuplicateNode,
  DuplicateEdge,
  SelfEdgeInSpec,
  UnknownNode,
  InputFanOutViolation,
  InputInEdge,
  EmptyStateSet,
  AlphaContainsInputNode,
  NodeInsideAlpha,
  NotAccessible,
  GroundSetTooLarge,
  Disconnected,
  WrongKind,
  WrongInputCount,
  NotAPactus,
  BridgeMultiplicity,
  PreconditionTreeJoin,
  PredecessorNotSsc,
  NoFeasiblePlacement,
  BudgetExceeded,
  DimensionMismatch,
  PolynomialBudgetExceeded,
  SyntaxError,
  ValidationError,
};

const char* to_string(ErrorKind k);

/// All library failures surface as Error with a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Undirected signed coupling between two state nodes. Stored with a < b.
struct StateEdge {
  int a = 0;
  int b = 0;
  Sign sign = Sign::Positive;
};

/// Directed edge from an external input node into its single target state node.
struct InputEdge {
  int input = 0;
  int target = 0;
  Sign sign = Sign::Positive;
};

/// Raw description consumed by build_network.
struct NetworkSpec {
  std::vector<int> state_nodes;
  std::vector<int> input_nodes;
  std::vector<StateEdge> state_edges;
  std::vector<InputEdge> input_edges;
};

/// A validated signed network of diffusively coupled state nodes plus external
/// input nodes. State couplings are undirected and symmetric; every input node
/// has exactly one outgoing edge into a state node and no incoming edges.
/// Self-loops are implicit (Laplacian diagonal) and never stored.
///
/// Node labels are arbitrary non-negative integers; state and input labels live
/// in disjoint spaces. Internally state nodes are densely indexed 0..n-1 in
/// label order, which is what the subset-enumeration machinery works on.
/// Instances are immutable after construction and safe to share across threads.
class SignedNetwork {
 public:
  int state_count() const { return static_cast<int>(state_labels_.size()); }
  int input_count() const { return static_cast<int>(input_labels_.size()); }

  const std::vector<int>& state_labels() const { return state_labels_; }
  const std::vector<int>& input_labels() const { return input_labels_; }

  bool is_state(int label) const;
  bool is_input(int label) const;

  /// Dense index of a state label; throws UnknownNode.
  int state_index(int label) const;
  int input_index(int label) const;
  int state_label(int index) const { return state_labels_.at(index); }
  int input_label(int index) const { return input_labels_.at(index); }

  /// Adjacent state nodes of a state node, as (dense index, sign) pairs sorted
  /// by index.
  const std::vector<std::pair<int, Sign>>& adjacent(int state_index) const {
    return adj_.at(state_index);
  }
  int degree(int state_index) const {
    return static_cast<int>(adj_.at(state_index).size());
  }

  /// (target dense index, sign) of an input node's single out-edge.
  std::pair<int, Sign> input_target(int input_index) const {
    return input_edge_.at(input_index);
  }
  /// Input dense indices feeding a given state node.
  const std::vector<int>& inputs_feeding(int state_index) const {
    return feeds_.at(state_index);
  }

  /// Canonical sorted edge lists (labels).
  const std::vector<StateEdge>& state_edges() const { return state_edges_; }
  const std::vector<InputEdge>& input_edges() const { return input_edges_; }

  bool has_state_edge(int label_a, int label_b) const;
  Sign state_edge_sign(int label_a, int label_b) const;

  /// State labels targeted by at least one input edge (the paper's N(V^I)).
  const std::vector<int>& input_target_labels() const { return target_labels_; }

  friend SignedNetwork build_network(const NetworkSpec& spec);

 private:
  std::vector<int> state_labels_;
  std::vector<int> input_labels_;
  std::vector<std::vector<std::pair<int, Sign>>> adj_;
  std::vector<std::pair<int, Sign>> input_edge_;
  std::vector<std::vector<int>> feeds_;
  std::vector<StateEdge> state_edges_;
  std::vector<InputEdge> input_edges_;
  std::vector<int> target_labels_;
};

/// Validates a NetworkSpec and builds the immutable network.
/// Throws Error with kinds DuplicateNode, DuplicateEdge, SelfEdgeInSpec,
/// UnknownNode, InputFanOutViolation, InputInEdge, EmptyStateSet,
/// ValidationError.
SignedNetwork build_network(const NetworkSpec& spec);

/// In-neighbor set of a node, by label. For a state node i this is
/// {i} + state neighbors of i + input nodes with an edge into i; for an input
/// node it is empty.
std::set<int> in_neighbors(const SignedNetwork& net, int label);

/// Union of in-neighbor sets over a set of state nodes. Callers subtract alpha
/// themselves when they need the boundary.
std::set<int> neighborhood(const SignedNetwork& net, const std::set<int>& alpha);

/// True iff every state node is reachable from some input node through the
/// undirected state edges (plus the input edge itself).
bool is_accessible(const SignedNetwork& net);

/// Sign matrix of T = [L, B]: n rows, n + m columns in label order.
struct SignPattern {
  enum class Entry : std::uint8_t { Zero, Plus, Minus, Indeterminate };

  int n = 0;
  int m = 0;
  std::vector<Entry> cells;  // row-major, n x (n + m)

  Entry at(int row, int col) const { return cells.at(row * (n + m) + col); }
};

/// Sign pattern of the network matrix. Off-diagonal L entries carry the edge
/// sign; the diagonal is the sign of the negated row sum when all incident
/// edges agree, Indeterminate when they conflict, Zero for isolated nodes.
SignPattern sign_pattern(const SignedNetwork& net);

}  // namespace sscnet
