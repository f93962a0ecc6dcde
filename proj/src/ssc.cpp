#include "sscnet/ssc.hpp"

#include <algorithm>
#include <bit>

namespace sscnet {

NodeClass classify_node(const SignedNetwork& net, int node,
                        const std::set<int>& alpha) {
  if (alpha.empty()) {
    throw Error(ErrorKind::ValidationError, "alpha must be nonempty");
  }
  for (int v : alpha) {
    if (net.is_input(v)) {
      throw Error(ErrorKind::AlphaContainsInputNode,
                  "alpha contains input node " + std::to_string(v));
    }
    net.state_index(v);
  }
  if (alpha.count(node)) {
    throw Error(ErrorKind::NodeInsideAlpha,
                "node " + std::to_string(node) + " lies inside alpha");
  }
  if (net.is_input(node)) {
    int t = net.input_target(net.input_index(node)).first;
    return alpha.count(net.state_label(t)) ? NodeClass::Dedicated
                                           : NodeClass::NotAdjacent;
  }
  int i = net.state_index(node);
  int deg = 0;
  for (const auto& [j, s] : net.adjacent(i)) {
    deg += alpha.count(net.state_label(j)) ? 1 : 0;
  }
  if (deg == 0) return NodeClass::NotAdjacent;
  return deg == 1 ? NodeClass::Dedicated : NodeClass::Sharing;
}

std::pair<bool, std::optional<int>> has_dedicated(const SignedNetwork& net,
                                                  const std::set<int>& alpha) {
  std::set<int> boundary = neighborhood(net, alpha);
  for (int v : alpha) boundary.erase(v);
  for (int v : boundary) {
    if (classify_node(net, v, alpha) == NodeClass::Dedicated) return {true, v};
  }
  return {false, std::nullopt};
}

namespace {

// Bitset formulation over the effective state set (states minus virtual
// inputs), positions in ascending label order.
struct EnumSetup {
  std::vector<int> eff;                 // net state indices
  std::vector<std::uint64_t> adj;       // per position, over positions
  std::vector<std::uint64_t> virt_adj;  // virtuals with >= 2 in-network edges
  std::uint64_t excluded = 0;           // auto-pass positions (input targets)
  std::vector<int> ground;              // enumerable positions
};

EnumSetup prepare(const SignedNetwork& net, const std::set<int>& virtuals,
                  const SscOptions& opts) {
  const int n = net.state_count();
  if (n > 64) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "more than 64 state nodes; enumeration unsupported");
  }
  std::vector<int> virt_idx;
  for (int v : virtuals) virt_idx.push_back(net.state_index(v));
  std::sort(virt_idx.begin(), virt_idx.end());

  EnumSetup s;
  std::vector<int> pos_of(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!std::binary_search(virt_idx.begin(), virt_idx.end(), i)) {
      pos_of[i] = static_cast<int>(s.eff.size());
      s.eff.push_back(i);
    }
  }
  s.adj.assign(s.eff.size(), 0);
  for (size_t p = 0; p < s.eff.size(); ++p) {
    for (const auto& [j, sg] : net.adjacent(s.eff[p])) {
      if (pos_of[j] >= 0) s.adj[p] |= std::uint64_t{1} << pos_of[j];
    }
  }

  // Subsets containing an input target always keep a dedicated node, so those
  // positions never need to be enumerated. Ditto for the single target of a
  // one-edge virtual input.
  for (int u = 0; u < net.input_count(); ++u) {
    int t = net.input_target(u).first;
    if (pos_of[t] >= 0) s.excluded |= std::uint64_t{1} << pos_of[t];
  }
  for (int vi : virt_idx) {
    std::uint64_t mask = 0;
    for (const auto& [j, sg] : net.adjacent(vi)) {
      if (pos_of[j] >= 0) mask |= std::uint64_t{1} << pos_of[j];
    }
    int cnt = std::popcount(mask);
    if (cnt == 1) {
      s.excluded |= mask;
    } else if (cnt >= 2) {
      s.virt_adj.push_back(mask);
    }
  }

  for (size_t p = 0; p < s.eff.size(); ++p) {
    if (!(s.excluded >> p & 1)) s.ground.push_back(static_cast<int>(p));
  }
  if (static_cast<int>(s.ground.size()) > opts.max_ground_bits) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "ground set has " + std::to_string(s.ground.size()) +
                    " nodes, cap is " + std::to_string(opts.max_ground_bits));
  }
  return s;
}

bool alpha_has_dedicated(const EnumSetup& s, std::uint64_t alpha) {
  for (size_t p = 0; p < s.eff.size(); ++p) {
    if (alpha >> p & 1) continue;
    if (std::popcount(s.adj[p] & alpha) == 1) return true;
  }
  for (std::uint64_t vm : s.virt_adj) {
    if (std::popcount(vm & alpha) == 1) return true;
  }
  return false;
}

// Visits every nonempty subset of the ground set in (cardinality, lex) order;
// visitor returns false to stop.
template <typename Visitor>
void for_each_alpha(const EnumSetup& s, Visitor&& visit) {
  const int g = static_cast<int>(s.ground.size());
  std::vector<int> pick;
  for (int k = 1; k <= g; ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t alpha = 0;
      for (int i : pick) alpha |= std::uint64_t{1} << s.ground[i];
      if (!visit(alpha)) return;
      int i = k - 1;
      while (i >= 0 && pick[i] == g - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

SsccReport run_report(const SignedNetwork& net, const std::set<int>& virtuals,
                      const SscOptions& opts) {
  EnumSetup s = prepare(net, virtuals, opts);
  SsccReport rep;
  std::uint64_t bad = 0;
  std::optional<std::uint64_t> witness;
  for_each_alpha(s, [&](std::uint64_t alpha) {
    ++rep.alphas_checked;
    if (!alpha_has_dedicated(s, alpha)) {
      bad |= alpha;
      if (!witness) witness = alpha;
    }
    return true;
  });
  rep.is_ssc = !witness.has_value();
  if (witness) {
    std::set<int> w;
    for (size_t p = 0; p < s.eff.size(); ++p) {
      if (*witness >> p & 1) w.insert(net.state_label(s.eff[p]));
    }
    rep.witness_alpha = std::move(w);
  }
  for (size_t p = 0; p < s.eff.size(); ++p) {
    if (!(bad >> p & 1)) rep.ssc_state_nodes.insert(net.state_label(s.eff[p]));
  }
  return rep;
}

bool accessible_with_virtuals(const SignedNetwork& net,
                              const std::set<int>& virtuals) {
  if (virtuals.empty()) return is_accessible(net);
  // Virtual inputs act as access points for the remaining state set.
  const int n = net.state_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int u = 0; u < net.input_count(); ++u) {
    int t = net.input_target(u).first;
    if (!virtuals.count(net.state_label(t)) && !seen[t]) {
      seen[t] = 1;
      stack.push_back(t);
    }
  }
  for (int v : virtuals) {
    for (const auto& [j, sg] : net.adjacent(net.state_index(v))) {
      if (!virtuals.count(net.state_label(j)) && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (const auto& [j, sg] : net.adjacent(v)) {
      if (!virtuals.count(net.state_label(j)) && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return reached == n - static_cast<int>(virtuals.size());
}

}  // namespace

SsccReport check_ssc(const SignedNetwork& net, const SscOptions& opts) {
  if (!is_accessible(net)) {
    throw Error(ErrorKind::NotAccessible,
                "some state node is unreachable from every input");
  }
  return run_report(net, {}, opts);
}

std::set<int> ssc_state_nodes(const SignedNetwork& net, const SscOptions& opts) {
  return run_report(net, {}, opts).ssc_state_nodes;
}

SsccReport check_ssc_with_virtual_inputs(const SignedNetwork& net,
                                         const std::set<int>& virtual_inputs,
                                         const SscOptions& opts) {
  for (int v : virtual_inputs) net.state_index(v);
  if (!accessible_with_virtuals(net, virtual_inputs)) {
    throw Error(ErrorKind::NotAccessible,
                "some state node is unreachable from every input");
  }
  return run_report(net, virtual_inputs, opts);
}

namespace detail {

bool ssc_decide(const SignedNetwork& net, const std::set<int>& virtual_inputs,
                const SscOptions& opts) {
  EnumSetup s = prepare(net, virtual_inputs, opts);
  bool ok = true;
  for_each_alpha(s, [&](std::uint64_t alpha) {
    if (!alpha_has_dedicated(s, alpha)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace detail

}  // namespace sscnet
