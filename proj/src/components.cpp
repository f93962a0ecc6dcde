#include "sscnet/components.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace sscnet {

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::SymPath: return "sym-path";
    case ComponentKind::SymCycle: return "sym-cycle";
    case ComponentKind::PathType: return "path-type";
    case ComponentKind::TreeType: return "tree-type";
    case ComponentKind::CycleType: return "cycle-type";
    case ComponentKind::Other: return "other";
  }
  return "other";
}

namespace {

bool connected_states(const SignedNetwork& g) {
  const int n = g.state_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (const auto& [j, s] : g.adjacent(v)) {
      if (!seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

}  // namespace

ComponentKind classify_component(const SignedNetwork& component) {
  const int n = component.state_count();
  if (!connected_states(component)) {
    throw Error(ErrorKind::Disconnected, "component state graph is disconnected");
  }
  if (n == 1) return ComponentKind::SymPath;
  const int edges = static_cast<int>(component.state_edges().size());
  int max_deg = 0;
  bool all_two = true;
  for (int i = 0; i < n; ++i) {
    int d = component.degree(i);
    max_deg = std::max(max_deg, d);
    all_two = all_two && d == 2;
  }
  if (edges == n - 1) {
    return max_deg <= 2 ? ComponentKind::SymPath : ComponentKind::TreeType;
  }
  if (all_two && n >= 3) return ComponentKind::SymCycle;
  return ComponentKind::CycleType;
}

bool check_lemma_path(const SignedNetwork& component,
                      const std::set<int>& input_attachments) {
  if (classify_component(component) != ComponentKind::SymPath) {
    throw Error(ErrorKind::WrongKind, "component is not a sym-path");
  }
  if (input_attachments.size() != 1) {
    throw Error(ErrorKind::WrongInputCount, "a sym-path takes exactly one input");
  }
  int at = *input_attachments.begin();
  return component.degree(component.state_index(at)) <= 1;
}

bool check_lemma_cycle(const SignedNetwork& component,
                       const std::set<int>& input_attachments) {
  if (classify_component(component) != ComponentKind::SymCycle) {
    throw Error(ErrorKind::WrongKind, "component is not a sym-cycle");
  }
  if (input_attachments.size() != 2) {
    throw Error(ErrorKind::WrongInputCount, "a sym-cycle takes exactly two inputs");
  }
  auto it = input_attachments.begin();
  int k = *it++;
  int l = *it;
  return component.has_state_edge(k, l);
}

namespace {

// Shared by the lemma-2 check and by placement: enumerate removals of
// (parts-1) tree edges, keep partitions whose pieces are paths chained by the
// removed edges.
struct TreePartition {
  std::vector<std::vector<int>> parts;  // state indices per part
  std::vector<int> part_of;             // state index -> part
};

template <typename Accept>
void for_each_tree_partition(const SignedNetwork& tree, int parts,
                             Accept&& accept) {
  const int n = tree.state_count();
  const auto& edges = tree.state_edges();
  const int e = static_cast<int>(edges.size());
  const int cut = parts - 1;
  if (cut < 0 || cut > e) return;

  std::vector<int> pick(cut);
  for (int i = 0; i < cut; ++i) pick[i] = i;
  while (true) {
    std::vector<char> removed(e, 0);
    for (int i : pick) removed[i] = 1;

    TreePartition tp;
    tp.part_of.assign(n, -1);
    std::map<std::pair<int, int>, char> cut_set;
    for (int i = 0; i < e; ++i) {
      if (removed[i]) {
        cut_set[{tree.state_index(edges[i].a), tree.state_index(edges[i].b)}] = 1;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (tp.part_of[v] >= 0) continue;
      int id = static_cast<int>(tp.parts.size());
      tp.parts.push_back({});
      std::vector<int> stack{v};
      tp.part_of[v] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        tp.parts[id].push_back(x);
        for (const auto& [y, s] : tree.adjacent(x)) {
          auto key = std::minmax(x, y);
          if (cut_set.count({key.first, key.second})) continue;
          if (tp.part_of[y] < 0) {
            tp.part_of[y] = id;
            stack.push_back(y);
          }
        }
      }
    }

    // Pieces of a tree minus (parts-1) edges are trees; a piece qualifies
    // only when it is a path. The quotient over removed edges must be a chain.
    bool ok = static_cast<int>(tp.parts.size()) == parts;
    if (ok) {
      for (const auto& part : tp.parts) {
        for (int v : part) {
          int deg_in = 0;
          for (const auto& [y, s] : tree.adjacent(v)) {
            if (tp.part_of[y] == tp.part_of[v]) {
              auto key = std::minmax(v, y);
              if (!cut_set.count({key.first, key.second})) ++deg_in;
            }
          }
          if (deg_in > 2) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok) {
      std::vector<int> qdeg(parts, 0);
      for (const auto& [key, unused] : cut_set) {
        ++qdeg[tp.part_of[key.first]];
        ++qdeg[tp.part_of[key.second]];
      }
      for (int d : qdeg) ok = ok && d <= 2;
    }
    if (ok && !accept(tp)) return;

    int i = cut - 1;
    while (i >= 0 && pick[i] == e - cut + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < cut; ++j) pick[j] = pick[j - 1] + 1;
  }
}

int part_degree(const SignedNetwork& tree, const TreePartition& tp, int v) {
  int d = 0;
  for (const auto& [y, s] : tree.adjacent(v)) {
    if (tp.part_of[y] == tp.part_of[v]) ++d;
  }
  return d;
}

}  // namespace

bool check_lemma_tree(const SignedNetwork& component,
                      const std::set<int>& input_attachments) {
  ComponentKind kind = classify_component(component);
  if (kind != ComponentKind::TreeType && kind != ComponentKind::SymPath) {
    throw Error(ErrorKind::WrongKind, "component is not acyclic");
  }
  const int m = static_cast<int>(input_attachments.size());
  if (m < 2) {
    throw Error(ErrorKind::WrongInputCount, "tree decomposition takes >= 2 inputs");
  }
  std::vector<int> attach_idx;
  for (int v : input_attachments) attach_idx.push_back(component.state_index(v));

  bool found = false;
  for_each_tree_partition(component, m, [&](const TreePartition& tp) {
    std::vector<int> count(m, 0);
    bool good = true;
    for (int a : attach_idx) {
      // terminal position within its path: degree <= 1 inside the part
      if (++count[tp.part_of[a]] > 1 || part_degree(component, tp, a) > 1) {
        good = false;
        break;
      }
    }
    if (good) {
      for (int c : count) good = good && c == 1;
    }
    if (good) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool validate_decomposition(const SignedNetwork& net,
                            const PactusDecomposition& dec,
                            std::vector<std::string>* diagnostics) {
  std::vector<std::string> local;
  auto fail = [&](const std::string& msg) { local.push_back(msg); };

  const int m = static_cast<int>(dec.components.size());
  if (m == 0) fail("decomposition has no components");

  std::map<int, int> comp_of;  // label -> 1-based component
  for (int i = 0; i < m; ++i) {
    if (dec.components[i].empty()) fail("component " + std::to_string(i + 1) + " is empty");
    for (int v : dec.components[i]) {
      if (!net.is_state(v)) {
        fail("component node " + std::to_string(v) + " is not a state node");
      } else if (!comp_of.emplace(v, i + 1).second) {
        fail("node " + std::to_string(v) + " appears in two components");
      }
    }
  }
  if (static_cast<int>(comp_of.size()) != net.state_count()) {
    fail("components do not cover every state node");
  }

  // Each component must induce a sym-path or sym-cycle.
  for (int i = 0; i < m && local.empty(); ++i) {
    std::set<int> nodes(dec.components[i].begin(), dec.components[i].end());
    try {
      SignedNetwork sub = detail::induced_subnetwork(net, nodes, {}, {});
      ComponentKind k = classify_component(sub);
      if (k != ComponentKind::SymPath && k != ComponentKind::SymCycle) {
        fail("component " + std::to_string(i + 1) + " is " +
             std::string(to_string(k)) + ", not a sym-path or sym-cycle");
      }
    } catch (const Error& e) {
      fail("component " + std::to_string(i + 1) + ": " + e.what());
    }
  }

  // Cross-component edges must be exactly the declared bridges, consecutive
  // components only, injective endpoints, within the size bound.
  std::map<std::pair<int, int>, const BridgeGraph*> bridge_of;
  for (const BridgeGraph& b : dec.bridges) {
    if (b.j != b.i + 1 || b.i < 1 || b.j > m) {
      fail("bridge " + std::to_string(b.i) + "-" + std::to_string(b.j) +
           " does not join consecutive components");
      continue;
    }
    if (!bridge_of.emplace(std::make_pair(b.i, b.j), &b).second) {
      fail("duplicate bridge graph " + std::to_string(b.i) + "-" + std::to_string(b.j));
    }
    if (b.edges.empty()) fail("bridge " + std::to_string(b.i) + " has no edges");
    size_t cap = std::min(dec.components[b.i - 1].size(), dec.components[b.j - 1].size());
    if (b.edges.size() > cap) {
      fail("bridge " + std::to_string(b.i) + " exceeds the size bound");
    }
    std::set<int> used;
    for (const StateEdge& e : b.edges) {
      auto ca = comp_of.find(e.a);
      auto cb = comp_of.find(e.b);
      if (ca == comp_of.end() || cb == comp_of.end() ||
          std::minmax(ca->second, cb->second) != std::minmax(b.i, b.j)) {
        fail("bridge edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
             ") does not join components " + std::to_string(b.i) + "," +
             std::to_string(b.j));
      }
      if (!net.has_state_edge(e.a, e.b)) {
        fail("bridge edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
             ") is not a network edge");
      }
      if (!used.insert(e.a).second || !used.insert(e.b).second) {
        fail("bridge " + std::to_string(b.i) + " reuses an endpoint");
      }
    }
  }
  for (int i = 1; i < m; ++i) {
    if (!bridge_of.count({i, i + 1})) {
      fail("components " + std::to_string(i) + " and " + std::to_string(i + 1) +
           " are not joined by a bridge");
    }
  }
  if (local.empty()) {
    std::set<std::pair<int, int>> declared;
    for (const BridgeGraph& b : dec.bridges) {
      for (const StateEdge& e : b.edges) declared.insert(std::minmax(e.a, e.b));
    }
    for (const StateEdge& e : net.state_edges()) {
      int ca = comp_of.at(e.a);
      int cb = comp_of.at(e.b);
      if (ca == cb) continue;
      if (std::abs(ca - cb) != 1) {
        fail("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
             ") joins non-consecutive components");
      } else if (!declared.count(std::minmax(e.a, e.b))) {
        fail("cross edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
             ") missing from its bridge graph");
      }
    }
  }

  if (diagnostics) *diagnostics = local;
  return local.empty();
}

SignedNetwork detail::induced_subnetwork(const SignedNetwork& net,
                                         const std::set<int>& nodes,
                                         const std::vector<StateEdge>& extra_edges,
                                         const std::vector<InputEdge>& inputs) {
  NetworkSpec spec;
  std::set<int> all(nodes);
  for (const StateEdge& e : extra_edges) {
    all.insert(e.a);
    all.insert(e.b);
  }
  spec.state_nodes.assign(all.begin(), all.end());
  for (const StateEdge& e : net.state_edges()) {
    if (nodes.count(e.a) && nodes.count(e.b)) spec.state_edges.push_back(e);
  }
  for (const StateEdge& e : extra_edges) {
    if (!(nodes.count(e.a) && nodes.count(e.b))) spec.state_edges.push_back(e);
  }
  for (const InputEdge& e : inputs) {
    spec.input_nodes.push_back(e.input);
    spec.input_edges.push_back(e);
  }
  return build_network(spec);
}

std::optional<std::vector<int>> detail::tree_partition_attachments(
    const SignedNetwork& tree, int min_parts) {
  const int n = tree.state_count();
  for (int m = std::max(min_parts, 2); m <= n; ++m) {
    std::optional<std::vector<int>> best;
    for_each_tree_partition(tree, m, [&](const TreePartition& tp) {
      std::vector<int> attach;
      for (const auto& part : tp.parts) {
        int lowest = -1;
        for (int v : part) {
          if (part_degree(tree, tp, v) <= 1) {
            int label = tree.state_label(v);
            if (lowest < 0 || label < lowest) lowest = label;
          }
        }
        attach.push_back(lowest);
      }
      std::sort(attach.begin(), attach.end());
      if (!best || attach < *best) best = attach;
      return true;
    });
    if (best) return best;
  }
  return std::nullopt;
}

namespace {

// auto_decompose search state over dense bit masks.
struct ChainSearch {
  const SignedNetwork& net;
  std::vector<std::uint64_t> adj;
  long budget = 2'000'000;
  int depth_limit = 0;
  std::vector<std::vector<std::uint64_t>> found;

  explicit ChainSearch(const SignedNetwork& n) : net(n) {
    adj.assign(net.state_count(), 0);
    for (int v = 0; v < net.state_count(); ++v) {
      for (const auto& [j, s] : net.adjacent(v)) adj[v] |= std::uint64_t{1} << j;
    }
  }

  std::uint64_t nbrs(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::uint64_t t = mask; t; t &= t - 1) {
      out |= adj[std::countr_zero(t)];
    }
    return out & ~mask;
  }

  // Induced path or cycle check restricted to `mask`.
  bool path_or_cycle(std::uint64_t mask) const {
    int cnt = std::popcount(mask);
    if (cnt == 0) return false;
    if (cnt == 1) return true;
    int edges = 0;
    int start = std::countr_zero(mask);
    bool all_two = true;
    for (std::uint64_t t = mask; t; t &= t - 1) {
      int v = std::countr_zero(t);
      int d = std::popcount(adj[v] & mask);
      if (d > 2) return false;
      all_two = all_two && d == 2;
      edges += d;
    }
    edges /= 2;
    // connectivity within mask
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t t = frontier; t; t &= t - 1) {
        next |= adj[std::countr_zero(t)] & mask;
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != mask) return false;
    if (edges == cnt - 1) return true;                 // path
    return all_two && cnt >= 3 && edges == cnt;        // cycle
  }

  bool bridge_ok(std::uint64_t prev, std::uint64_t comp) const {
    int count = 0;
    for (std::uint64_t t = prev; t; t &= t - 1) {
      int v = std::countr_zero(t);
      int d = std::popcount(adj[v] & comp);
      if (d > 1) return false;  // injectivity on the previous side
      count += d;
    }
    for (std::uint64_t t = comp; t; t &= t - 1) {
      if (std::popcount(adj[std::countr_zero(t)] & prev) > 1) return false;
    }
    if (count < 1) return false;
    return count <= std::min(std::popcount(prev), std::popcount(comp));
  }

  void rec(std::uint64_t remaining, std::uint64_t prev,
           std::vector<std::uint64_t>& chain) {
    if (budget <= 0 || found.size() >= 4096) return;
    if (remaining == 0) {
      found.push_back(chain);
      return;
    }
    if (static_cast<int>(chain.size()) >= depth_limit) return;
    std::uint64_t required = prev ? (nbrs(prev) & remaining) : 0;
    if (prev && required == 0) return;  // chain would disconnect
    std::uint64_t free = remaining & ~required;
    // all subsets of `free`, each unioned with the required nodes
    std::uint64_t sub = free;
    while (true) {
      std::uint64_t comp = sub | required;
      if (comp) {
        --budget;
        if (budget <= 0) return;
        if (path_or_cycle(comp) && (!prev || bridge_ok(prev, comp))) {
          chain.push_back(comp);
          rec(remaining & ~comp, comp, chain);
          chain.pop_back();
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
};

}  // namespace

std::optional<PactusDecomposition> auto_decompose(const SignedNetwork& net) {
  const int n = net.state_count();
  if (n > 64) return std::nullopt;

  ChainSearch search(net);
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> chain;
  for (int depth = 1; depth <= n; ++depth) {
    search.depth_limit = depth;
    search.found.clear();
    search.rec(all, 0, chain);
    if (!search.found.empty()) break;
    if (search.budget <= 0) return std::nullopt;
  }
  if (search.found.empty()) return std::nullopt;

  auto key = [&](const std::vector<std::uint64_t>& c) {
    return std::make_pair(std::countr_zero(c.front()), c);
  };
  const std::vector<std::uint64_t>* best = &search.found.front();
  for (const auto& c : search.found) {
    if (key(c) < key(*best)) best = &c;
  }

  PactusDecomposition dec;
  std::vector<int> comp_of(n, -1);
  for (size_t i = 0; i < best->size(); ++i) {
    std::vector<int> labels;
    for (std::uint64_t t = (*best)[i]; t; t &= t - 1) {
      int v = std::countr_zero(t);
      comp_of[v] = static_cast<int>(i);
      labels.push_back(net.state_label(v));
    }
    std::sort(labels.begin(), labels.end());
    dec.components.push_back(labels);
  }
  dec.component_edges.resize(dec.components.size());
  for (const StateEdge& e : net.state_edges()) {
    int ca = comp_of[net.state_index(e.a)];
    int cb = comp_of[net.state_index(e.b)];
    if (ca == cb) {
      dec.component_edges[ca].push_back(e);
    } else {
      int lo = std::min(ca, cb);
      if (std::abs(ca - cb) != 1) return std::nullopt;  // defensive; search forbids it
      while (static_cast<int>(dec.bridges.size()) < lo + 1) {
        BridgeGraph b;
        b.i = static_cast<int>(dec.bridges.size()) + 1;
        b.j = b.i + 1;
        dec.bridges.push_back(b);
      }
      dec.bridges[lo].edges.push_back(e);
    }
  }
  for (const auto& comp : dec.components) {
    std::set<int> nodes(comp.begin(), comp.end());
    dec.kinds.push_back(
        classify_component(detail::induced_subnetwork(net, nodes, {}, {})));
  }
  if (!validate_decomposition(net, dec)) return std::nullopt;
  return dec;
}

}  // namespace sscnet
