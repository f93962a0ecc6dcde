#include "sscnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace sscnet {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfEdgeInSpec: return "SelfEdgeInSpec";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::InputFanOutViolation: return "InputFanOutViolation";
    case ErrorKind::InputInEdge: return "InputInEdge";
    case ErrorKind::EmptyStateSet: return "EmptyStateSet";
    case ErrorKind::AlphaContainsInputNode: return "AlphaContainsInputNode";
    case ErrorKind::NodeInsideAlpha: return "NodeInsideAlpha";
    case ErrorKind::NotAccessible: return "NotAccessible";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::WrongInputCount: return "WrongInputCount";
    case ErrorKind::NotAPactus: return "NotAPactus";
    case ErrorKind::BridgeMultiplicity: return "BridgeMultiplicity";
    case ErrorKind::PreconditionTreeJoin: return "PreconditionTreeJoin";
    case ErrorKind::PredecessorNotSsc: return "PredecessorNotSsc";
    case ErrorKind::NoFeasiblePlacement: return "NoFeasiblePlacement";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PolynomialBudgetExceeded: return "PolynomialBudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

bool SignedNetwork::is_state(int label) const {
  return std::binary_search(state_labels_.begin(), state_labels_.end(), label);
}

bool SignedNetwork::is_input(int label) const {
  return std::binary_search(input_labels_.begin(), input_labels_.end(), label);
}

int SignedNetwork::state_index(int label) const {
  auto it = std::lower_bound(state_labels_.begin(), state_labels_.end(), label);
  if (it == state_labels_.end() || *it != label) {
    throw Error(ErrorKind::UnknownNode,
                "node " + std::to_string(label) + " is not a state node");
  }
  return static_cast<int>(it - state_labels_.begin());
}

int SignedNetwork::input_index(int label) const {
  auto it = std::lower_bound(input_labels_.begin(), input_labels_.end(), label);
  if (it == input_labels_.end() || *it != label) {
    throw Error(ErrorKind::UnknownNode,
                "node " + std::to_string(label) + " is not an input node");
  }
  return static_cast<int>(it - input_labels_.begin());
}

bool SignedNetwork::has_state_edge(int label_a, int label_b) const {
  int ia = state_index(label_a);
  int ib = state_index(label_b);
  for (const auto& [j, s] : adj_[ia]) {
    if (j == ib) return true;
  }
  return false;
}

Sign SignedNetwork::state_edge_sign(int label_a, int label_b) const {
  int ia = state_index(label_a);
  int ib = state_index(label_b);
  for (const auto& [j, s] : adj_[ia]) {
    if (j == ib) return s;
  }
  throw Error(ErrorKind::UnknownNode,
              "no state edge (" + std::to_string(label_a) + "," +
                  std::to_string(label_b) + ")");
}

SignedNetwork build_network(const NetworkSpec& spec) {
  if (spec.state_nodes.empty()) {
    throw Error(ErrorKind::EmptyStateSet, "network needs at least one state node");
  }

  SignedNetwork net;
  net.state_labels_ = spec.state_nodes;
  net.input_labels_ = spec.input_nodes;
  std::sort(net.state_labels_.begin(), net.state_labels_.end());
  std::sort(net.input_labels_.begin(), net.input_labels_.end());

  for (int v : net.state_labels_) {
    if (v < 0) throw Error(ErrorKind::ValidationError, "negative node id");
  }
  for (int v : net.input_labels_) {
    if (v < 0) throw Error(ErrorKind::ValidationError, "negative node id");
  }
  if (std::adjacent_find(net.state_labels_.begin(), net.state_labels_.end()) !=
      net.state_labels_.end()) {
    throw Error(ErrorKind::DuplicateNode, "repeated state node id");
  }
  if (std::adjacent_find(net.input_labels_.begin(), net.input_labels_.end()) !=
      net.input_labels_.end()) {
    throw Error(ErrorKind::DuplicateNode, "repeated input node id");
  }
  for (int v : net.input_labels_) {
    if (net.is_state(v)) {
      throw Error(ErrorKind::DuplicateNode,
                  "id " + std::to_string(v) + " used for both a state and an input node");
    }
  }

  const int n = net.state_count();
  const int m = net.input_count();
  net.adj_.assign(n, {});
  net.feeds_.assign(n, {});
  net.input_edge_.assign(m, {-1, Sign::Positive});

  std::set<std::pair<int, int>> seen;
  for (StateEdge e : spec.state_edges) {
    if (e.a == e.b) {
      throw Error(ErrorKind::SelfEdgeInSpec,
                  "explicit self-loop on node " + std::to_string(e.a));
    }
    if (net.is_input(e.a) || net.is_input(e.b)) {
      throw Error(ErrorKind::InputInEdge,
                  "state edge (" + std::to_string(e.a) + "," +
                      std::to_string(e.b) + ") touches an input node");
    }
    int ia = net.state_index(e.a);
    int ib = net.state_index(e.b);
    if (e.a > e.b) std::swap(e.a, e.b);
    if (!seen.insert({e.a, e.b}).second) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      ") listed twice");
    }
    net.adj_[ia].push_back({ib, e.sign});
    net.adj_[ib].push_back({ia, e.sign});
    net.state_edges_.push_back(e);
  }

  std::vector<int> outdeg(m, 0);
  for (const InputEdge& e : spec.input_edges) {
    if (net.is_input(e.target)) {
      throw Error(ErrorKind::InputInEdge,
                  "edge between input nodes " + std::to_string(e.input) + " and " +
                      std::to_string(e.target));
    }
    if (net.is_state(e.input)) {
      throw Error(ErrorKind::InputInEdge,
                  "state node " + std::to_string(e.input) +
                      " used as the source of an input edge");
    }
    int iu = net.input_index(e.input);
    int it = net.state_index(e.target);
    if (++outdeg[iu] > 1) {
      throw Error(ErrorKind::InputFanOutViolation,
                  "input " + std::to_string(e.input) + " has more than one out-edge");
    }
    net.input_edge_[iu] = {it, e.sign};
    net.feeds_[it].push_back(iu);
    net.input_edges_.push_back(e);
  }
  for (int u = 0; u < m; ++u) {
    if (outdeg[u] != 1) {
      throw Error(ErrorKind::InputFanOutViolation,
                  "input " + std::to_string(net.input_label(u)) +
                      " must have exactly one out-edge");
    }
  }

  for (auto& row : net.adj_) std::sort(row.begin(), row.end());
  for (auto& row : net.feeds_) std::sort(row.begin(), row.end());
  std::sort(net.state_edges_.begin(), net.state_edges_.end(),
            [](const StateEdge& x, const StateEdge& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  std::sort(net.input_edges_.begin(), net.input_edges_.end(),
            [](const InputEdge& x, const InputEdge& y) {
              return std::tie(x.input, x.target) < std::tie(y.input, y.target);
            });

  std::set<int> targets;
  for (const InputEdge& e : net.input_edges_) targets.insert(e.target);
  net.target_labels_.assign(targets.begin(), targets.end());
  return net;
}

std::set<int> in_neighbors(const SignedNetwork& net, int label) {
  if (net.is_input(label)) return {};
  int i = net.state_index(label);  // throws UnknownNode for unknown labels
  std::set<int> out;
  out.insert(label);
  for (const auto& [j, s] : net.adjacent(i)) out.insert(net.state_label(j));
  for (int u : net.inputs_feeding(i)) out.insert(net.input_label(u));
  return out;
}

std::set<int> neighborhood(const SignedNetwork& net, const std::set<int>& alpha) {
  std::set<int> out;
  for (int v : alpha) {
    if (net.is_input(v)) {
      throw Error(ErrorKind::AlphaContainsInputNode,
                  "alpha contains input node " + std::to_string(v));
    }
    auto nb = in_neighbors(net, v);
    out.insert(nb.begin(), nb.end());
  }
  return out;
}

bool is_accessible(const SignedNetwork& net) {
  const int n = net.state_count();
  if (net.input_count() == 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<int> queue;
  for (int u = 0; u < net.input_count(); ++u) {
    int t = net.input_target(u).first;
    if (!seen[t]) {
      seen[t] = 1;
      queue.push_back(t);
    }
  }
  int visited = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++visited;
    for (const auto& [j, s] : net.adjacent(v)) {
      if (!seen[j]) {
        seen[j] = 1;
        queue.push_back(j);
      }
    }
  }
  return visited == n;
}

SignPattern sign_pattern(const SignedNetwork& net) {
  const int n = net.state_count();
  const int m = net.input_count();
  SignPattern pat;
  pat.n = n;
  pat.m = m;
  pat.cells.assign(static_cast<size_t>(n) * (n + m), SignPattern::Entry::Zero);
  auto cell = [&](int r, int c) -> SignPattern::Entry& {
    return pat.cells[static_cast<size_t>(r) * (n + m) + c];
  };

  for (int i = 0; i < n; ++i) {
    bool any_pos = false;
    bool any_neg = false;
    for (const auto& [j, s] : net.adjacent(i)) {
      cell(i, j) = s == Sign::Positive ? SignPattern::Entry::Plus
                                       : SignPattern::Entry::Minus;
      (s == Sign::Positive ? any_pos : any_neg) = true;
    }
    // Diagonal is -sum of incident couplings: determinable only when all
    // incident signs agree.
    if (any_pos && any_neg) {
      cell(i, i) = SignPattern::Entry::Indeterminate;
    } else if (any_pos) {
      cell(i, i) = SignPattern::Entry::Minus;
    } else if (any_neg) {
      cell(i, i) = SignPattern::Entry::Plus;
    }
  }
  for (int u = 0; u < m; ++u) {
    auto [t, s] = net.input_target(u);
    cell(t, n + u) = s == Sign::Positive ? SignPattern::Entry::Plus
                                         : SignPattern::Entry::Minus;
  }
  return pat;
}

}  // namespace sscnet
