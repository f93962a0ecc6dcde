#include "sscnet/placement.hpp"

#include <algorithm>
#include <cmath>

namespace sscnet {

namespace {

// Chain bookkeeping over a self-contained decomposition.
struct Chain {
  const PactusDecomposition& dec;
  int m;
  std::vector<std::set<int>> nodes;  // per component

  explicit Chain(const PactusDecomposition& d)
      : dec(d), m(static_cast<int>(d.components.size())) {
    for (const auto& comp : d.components) {
      nodes.emplace_back(comp.begin(), comp.end());
    }
  }

  const BridgeGraph* bridge_after(int i) const {  // joins components i, i+1
    for (const BridgeGraph& b : dec.bridges) {
      if (b.i == i) return &b;
    }
    return nullptr;
  }

  // Bridge endpoints of bridge (i, i+1) on the component-i side.
  std::set<int> near_endpoints(int i) const {
    std::set<int> out;
    if (const BridgeGraph* b = bridge_after(i)) {
      for (const StateEdge& e : b->edges) {
        out.insert(nodes[i - 1].count(e.a) ? e.a : e.b);
      }
    }
    return out;
  }
  std::set<int> far_endpoints(int i) const {
    std::set<int> out;
    if (const BridgeGraph* b = bridge_after(i)) {
      for (const StateEdge& e : b->edges) {
        out.insert(nodes[i].count(e.a) ? e.a : e.b);
      }
    }
    return out;
  }

  SignedNetwork component_graph(int i) const {
    NetworkSpec spec;
    spec.state_nodes = dec.components[i - 1];
    spec.state_edges = dec.component_edges[i - 1];
    return build_network(spec);
  }

  // Step graph of component i: the component, its incoming bridge (whose
  // far-side endpoints act as virtual inputs), its outgoing bridge, and any
  // external inputs already attached to its nodes.
  NetworkSpec step_spec(int i, const std::vector<InputEdge>& inputs) const {
    NetworkSpec spec;
    std::set<int> all = nodes[i - 1];
    std::vector<StateEdge> edges = dec.component_edges[i - 1];
    if (i > 1) {
      if (const BridgeGraph* b = bridge_after(i - 1)) {
        for (const StateEdge& e : b->edges) {
          all.insert(e.a);
          all.insert(e.b);
          edges.push_back(e);
        }
      }
    }
    if (const BridgeGraph* b = bridge_after(i)) {
      for (const StateEdge& e : b->edges) {
        all.insert(e.a);
        all.insert(e.b);
        edges.push_back(e);
      }
    }
    spec.state_nodes.assign(all.begin(), all.end());
    spec.state_edges = std::move(edges);
    for (const InputEdge& e : inputs) {
      if (all.count(e.target)) {
        spec.input_nodes.push_back(e.input);
        spec.input_edges.push_back(e);
      }
    }
    return spec;
  }

  NetworkSpec full_spec(const std::vector<InputEdge>& inputs) const {
    NetworkSpec spec;
    for (const auto& comp : dec.components) {
      spec.state_nodes.insert(spec.state_nodes.end(), comp.begin(), comp.end());
    }
    for (const auto& ce : dec.component_edges) {
      spec.state_edges.insert(spec.state_edges.end(), ce.begin(), ce.end());
    }
    for (const BridgeGraph& b : dec.bridges) {
      spec.state_edges.insert(spec.state_edges.end(), b.edges.begin(), b.edges.end());
    }
    for (const InputEdge& e : inputs) {
      spec.input_nodes.push_back(e.input);
      spec.input_edges.push_back(e);
    }
    return spec;
  }

  int max_state_label() const {
    int mx = 0;
    for (const auto& comp : dec.components) {
      for (int v : comp) mx = std::max(mx, v);
    }
    return mx;
  }
};

void validate_chain(const Chain& chain) {
  const PactusDecomposition& dec = chain.dec;
  if (dec.components.empty()) {
    throw Error(ErrorKind::NotAPactus, "decomposition has no components");
  }
  if (dec.component_edges.size() != dec.components.size()) {
    throw Error(ErrorKind::NotAPactus, "missing per-component edge lists");
  }
  std::set<int> seen;
  for (const auto& comp : dec.components) {
    if (comp.empty()) throw Error(ErrorKind::NotAPactus, "empty component");
    for (int v : comp) {
      if (!seen.insert(v).second) {
        throw Error(ErrorKind::NotAPactus,
                    "node " + std::to_string(v) + " appears in two components");
      }
    }
  }
  for (int i = 1; i + 1 <= chain.m; ++i) {
    const BridgeGraph* b = chain.bridge_after(i);
    if (!b || b->edges.empty()) {
      throw Error(ErrorKind::NotAPactus,
                  "components " + std::to_string(i) + "," + std::to_string(i + 1) +
                      " are not bridged");
    }
    size_t cap = std::min(chain.nodes[i - 1].size(), chain.nodes[i].size());
    if (b->edges.size() > cap) {
      throw Error(ErrorKind::BridgeMultiplicity,
                  "bridge " + std::to_string(i) + " exceeds the size bound");
    }
    std::set<int> used;
    for (const StateEdge& e : b->edges) {
      bool a_near = chain.nodes[i - 1].count(e.a) && chain.nodes[i].count(e.b);
      bool b_near = chain.nodes[i - 1].count(e.b) && chain.nodes[i].count(e.a);
      if (!a_near && !b_near) {
        throw Error(ErrorKind::NotAPactus,
                    "bridge edge (" + std::to_string(e.a) + "," +
                        std::to_string(e.b) + ") does not join components " +
                        std::to_string(i) + "," + std::to_string(i + 1));
      }
      if (!used.insert(e.a).second || !used.insert(e.b).second) {
        throw Error(ErrorKind::BridgeMultiplicity,
                    "bridge " + std::to_string(i) + " reuses an endpoint");
      }
    }
  }
  for (const BridgeGraph& b : dec.bridges) {
    if (b.j != b.i + 1) {
      throw Error(ErrorKind::NotAPactus, "bridge joins non-consecutive components");
    }
  }
}

ComponentKind component_kind(const Chain& chain, int i) {
  return classify_component(chain.component_graph(i));
}

bool step_is_ssc(const Chain& chain, int i, const std::set<int>& vic,
                 const std::vector<InputEdge>& inputs,
                 std::set<int>* ssc_nodes = nullptr) {
  SignedNetwork step = build_network(chain.step_spec(i, inputs));
  try {
    SsccReport rep = check_ssc_with_virtual_inputs(step, vic);
    if (ssc_nodes) *ssc_nodes = rep.ssc_state_nodes;
    return rep.is_ssc;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAccessible) return false;
    throw;
  }
}

std::vector<int> terminals_of(const SignedNetwork& g) {
  std::vector<int> out;
  for (int v = 0; v < g.state_count(); ++v) {
    if (g.degree(v) <= 1) out.push_back(g.state_label(v));
  }
  return out;
}

}  // namespace

std::set<int> component_input_nodes(const PactusDecomposition& dec,
                                    const SignedNetwork& net_so_far, int i) {
  Chain chain(dec);
  if (i < 1 || i > chain.m) {
    throw Error(ErrorKind::ValidationError, "component index out of range");
  }
  if (i == 1) return {};
  const BridgeGraph* b = chain.bridge_after(i - 1);
  if (!b) {
    throw Error(ErrorKind::NotAPactus,
                "no bridge between components " + std::to_string(i - 1) + " and " +
                    std::to_string(i));
  }
  std::set<int> vic = chain.near_endpoints(i - 1);

  // Lemma-4 hypothesis: the processed prefix together with the connecting
  // bridge must already be SSC.
  NetworkSpec prefix;
  std::set<int> prefix_nodes;
  for (int k = 1; k < i; ++k) {
    prefix_nodes.insert(chain.nodes[k - 1].begin(), chain.nodes[k - 1].end());
    prefix.state_edges.insert(prefix.state_edges.end(),
                              dec.component_edges[k - 1].begin(),
                              dec.component_edges[k - 1].end());
    if (k < i - 1) {
      const BridgeGraph* bk = chain.bridge_after(k);
      prefix.state_edges.insert(prefix.state_edges.end(), bk->edges.begin(),
                                bk->edges.end());
    }
  }
  for (const StateEdge& e : b->edges) {
    prefix_nodes.insert(e.a);
    prefix_nodes.insert(e.b);
    prefix.state_edges.push_back(e);
  }
  prefix.state_nodes.assign(prefix_nodes.begin(), prefix_nodes.end());
  for (const InputEdge& e : net_so_far.input_edges()) {
    if (prefix_nodes.count(e.target)) {
      prefix.input_nodes.push_back(e.input);
      prefix.input_edges.push_back(e);
    }
  }
  try {
    if (!check_ssc(build_network(prefix)).is_ssc) {
      throw Error(ErrorKind::PredecessorNotSsc,
                  "components before " + std::to_string(i) +
                      " are not SSC with their bridge");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAccessible) {
      throw Error(ErrorKind::PredecessorNotSsc,
                  "components before " + std::to_string(i) + " have no inputs");
    }
    throw;
  }
  return vic;
}

PlacementResult algorithm1(const PactusDecomposition& dec) {
  Chain chain(dec);
  validate_chain(chain);
  const int m = chain.m;

  std::vector<ComponentKind> kinds;
  for (int i = 1; i <= m; ++i) {
    ComponentKind k = component_kind(chain, i);
    if (k != ComponentKind::SymPath && k != ComponentKind::SymCycle) {
      throw Error(ErrorKind::NotAPactus,
                  "component " + std::to_string(i) + " is " +
                      std::string(to_string(k)));
    }
    kinds.push_back(k);
  }
  for (int i = 1; i < m; ++i) {
    if (chain.bridge_after(i)->edges.size() != 1) {
      throw Error(ErrorKind::BridgeMultiplicity,
                  "bridge " + std::to_string(i) + " must have exactly one edge");
    }
  }
  // No component may turn into a branching tree once its bridges attach.
  for (int i = 1; i <= m; ++i) {
    std::vector<StateEdge> around;
    if (i > 1) {
      const auto& es = chain.bridge_after(i - 1)->edges;
      around.insert(around.end(), es.begin(), es.end());
    }
    if (i < m) {
      const auto& es = chain.bridge_after(i)->edges;
      around.insert(around.end(), es.begin(), es.end());
    }
    NetworkSpec u;
    std::set<int> un = chain.nodes[i - 1];
    std::vector<StateEdge> ue = dec.component_edges[i - 1];
    for (const StateEdge& e : around) {
      un.insert(e.a);
      un.insert(e.b);
      ue.push_back(e);
    }
    u.state_nodes.assign(un.begin(), un.end());
    u.state_edges = std::move(ue);
    if (classify_component(build_network(u)) == ComponentKind::TreeType) {
      throw Error(ErrorKind::PreconditionTreeJoin,
                  "component " + std::to_string(i) +
                      " forms a tree with its bridge edges");
    }
  }

  PlacementResult res;
  res.m = m;
  int next_label = chain.max_state_label() + 1;
  std::vector<InputEdge> inputs;
  std::set<int> vic;

  for (int i = 1; i <= m; ++i) {
    ++res.iterations;
    res.component_inputs.push_back(vic);
    res.per_step_kind.push_back(kinds[i - 1]);
    SignedNetwork comp = chain.component_graph(i);

    std::vector<int> targets;
    if (kinds[i - 1] == ComponentKind::SymPath) {
      ++res.p;
      if (i == 1) {
        targets.push_back(terminals_of(comp).front());
      }
      // later sym-paths inherit a terminal component input and need nothing
    } else {
      ++res.c;
      if (i == 1) {
        int a = comp.state_label(0);
        int b = comp.state_label(comp.adjacent(0).front().first);
        targets = {std::min(a, b), std::max(a, b)};
      } else {
        // one input adjacent to the component input's attachment point
        int t = *chain.far_endpoints(i - 1).begin();
        std::vector<int> cands;
        for (const auto& [j, s] : comp.adjacent(comp.state_index(t))) {
          cands.push_back(comp.state_label(j));
        }
        std::sort(cands.begin(), cands.end());
        for (int cand : cands) {
          std::vector<InputEdge> trial = inputs;
          trial.push_back({next_label, cand, Sign::Positive});
          if (step_is_ssc(chain, i, vic, trial)) {
            targets.push_back(cand);
            break;
          }
        }
        if (targets.empty()) {
          throw Error(ErrorKind::NoFeasiblePlacement,
                      "no feasible input for component " + std::to_string(i));
        }
      }
    }
    for (int t : targets) {
      inputs.push_back({next_label, t, Sign::Positive});
      res.attachments.push_back({next_label, t});
      ++next_label;
    }

    std::set<int> step_ssc;
    if (!step_is_ssc(chain, i, vic, inputs, &step_ssc)) {
      throw Error(ErrorKind::NoFeasiblePlacement,
                  "component " + std::to_string(i) + " is not SSC after placement");
    }
    res.per_step_ssc_nodes.push_back(step_ssc);
    if (i < m) vic = chain.near_endpoints(i);
  }

  if (res.m != res.p + res.c) {
    throw Error(ErrorKind::NotAPactus, "component count mismatch");
  }
  res.assembled_spec = chain.full_spec(inputs);
  if (!check_ssc(build_network(res.assembled_spec)).is_ssc) {
    throw Error(ErrorKind::NoFeasiblePlacement, "assembled network is not SSC");
  }
  return res;
}

PlacementResult algorithm2(const PactusDecomposition& dec) {
  Chain chain(dec);
  validate_chain(chain);
  const int m = chain.m;

  PlacementResult res;
  res.m = m;
  int next_label = chain.max_state_label() + 1;
  std::vector<InputEdge> inputs;
  std::set<int> vic;

  for (int i = 1; i <= m; ++i) {
    ++res.iterations;
    res.component_inputs.push_back(vic);

    SignedNetwork comp = chain.component_graph(i);
    ComponentKind comp_kind = classify_component(comp);
    if (comp_kind != ComponentKind::SymPath && comp_kind != ComponentKind::SymCycle) {
      throw Error(ErrorKind::NotAPactus,
                  "component " + std::to_string(i) + " is " +
                      std::string(to_string(comp_kind)));
    }
    (comp_kind == ComponentKind::SymPath ? res.p : res.c) += 1;

    // Classify the union of the component with its outgoing bridge.
    NetworkSpec union_spec;
    std::set<int> un = chain.nodes[i - 1];
    std::vector<StateEdge> ue = dec.component_edges[i - 1];
    if (const BridgeGraph* b = i < m ? chain.bridge_after(i) : nullptr) {
      for (const StateEdge& e : b->edges) {
        un.insert(e.a);
        un.insert(e.b);
        ue.push_back(e);
      }
    }
    union_spec.state_nodes.assign(un.begin(), un.end());
    union_spec.state_edges = ue;
    SignedNetwork union_graph = build_network(union_spec);
    ComponentKind uk = classify_component(union_graph);
    ComponentKind step_kind = uk == ComponentKind::SymPath ? ComponentKind::PathType
                              : uk == ComponentKind::TreeType
                                  ? ComponentKind::TreeType
                                  : ComponentKind::CycleType;
    res.per_step_kind.push_back(step_kind);

    std::set<int> step_ssc;
    if (!step_is_ssc(chain, i, vic, inputs, &step_ssc)) {
      // Fast path by step type, each choice gated by the step check.
      std::vector<std::vector<int>> proposals;
      if (step_kind == ComponentKind::PathType && vic.empty()) {
        for (int t : terminals_of(union_graph)) {
          if (chain.nodes[i - 1].count(t)) proposals.push_back({t});
        }
      } else if (step_kind == ComponentKind::TreeType && vic.empty()) {
        auto attach = detail::tree_partition_attachments(union_graph, 2);
        if (attach) {
          bool inside = true;
          for (int t : *attach) inside = inside && chain.nodes[i - 1].count(t);
          if (inside) proposals.push_back(*attach);
        }
      }
      // Generic sweep: fewest inputs, lowest labels first.
      const auto& comp_labels = dec.components[i - 1];
      for (int v : comp_labels) proposals.push_back({v});
      for (size_t a = 0; a < comp_labels.size(); ++a) {
        for (size_t b = a + 1; b < comp_labels.size(); ++b) {
          proposals.push_back({comp_labels[a], comp_labels[b]});
        }
      }
      std::stable_sort(proposals.begin(), proposals.end(),
                       [](const auto& x, const auto& y) {
                         return x.size() < y.size();
                       });

      bool placed = false;
      for (const auto& cand : proposals) {
        std::vector<InputEdge> trial = inputs;
        int label = next_label;
        for (int t : cand) trial.push_back({label++, t, Sign::Positive});
        if (step_is_ssc(chain, i, vic, trial, &step_ssc)) {
          for (int t : cand) {
            inputs.push_back({next_label, t, Sign::Positive});
            res.attachments.push_back({next_label, t});
            ++next_label;
          }
          placed = true;
          break;
        }
      }
      if (!placed) {
        throw Error(ErrorKind::NoFeasiblePlacement,
                    "no input set of size <= 2 makes step " + std::to_string(i) +
                        " SSC");
      }
    }
    res.per_step_ssc_nodes.push_back(step_ssc);
    if (i < m) vic = chain.near_endpoints(i);
  }

  res.assembled_spec = chain.full_spec(inputs);
  if (!check_ssc(build_network(res.assembled_spec)).is_ssc) {
    throw Error(ErrorKind::NoFeasiblePlacement, "assembled network is not SSC");
  }
  return res;
}

std::optional<std::pair<int, std::vector<int>>> exhaustive_min_inputs(
    const SignedNetwork& net, int max_inputs, const ExhaustiveOptions& opts) {
  const int n = net.state_count();
  if (max_inputs < 1) return std::nullopt;

  long double estimate = 0;
  long double binom = 1;
  for (int k = 1; k <= std::min(max_inputs, n); ++k) {
    binom = binom * (n - k + 1) / k;
    estimate += binom * std::pow(2.0L, n - k);
  }
  if (estimate > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "estimated " + std::to_string(static_cast<double>(estimate)) +
                    " subset checks exceed the budget");
  }

  int next_label = net.state_labels().back() + 1;
  for (int u : net.input_labels()) next_label = std::max(next_label, u + 1);

  const std::vector<int>& labels = net.state_labels();
  for (int k = 1; k <= std::min(max_inputs, n); ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      NetworkSpec spec;
      spec.state_nodes = labels;
      spec.state_edges = net.state_edges();
      spec.input_nodes.assign(net.input_labels().begin(), net.input_labels().end());
      spec.input_edges = net.input_edges();
      for (int i = 0; i < k; ++i) {
        spec.input_nodes.push_back(next_label + i);
        spec.input_edges.push_back({next_label + i, labels[pick[i]], Sign::Positive});
      }
      SignedNetwork trial = build_network(spec);
      if (is_accessible(trial) && detail::ssc_decide(trial, {}, opts.ssc)) {
        std::vector<int> targets;
        for (int i = 0; i < k; ++i) targets.push_back(labels[pick[i]]);
        return std::make_pair(k, targets);
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace sscnet
