#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sscnet/components.hpp"
#include "sscnet/graph.hpp"
#include "sscnet/ssc.hpp"

namespace sscnet {

struct PlacementResult {
  /// (input label, target state label), in placement order. Input labels are
  /// consecutive integers starting just past the largest state label.
  std::vector<std::pair<int, int>> attachments;
  /// Component input node set handed to each step (index 0 is component 1,
  /// always empty).
  std::vector<std::set<int>> component_inputs;
  int m = 0;  // components
  int p = 0;  // sym-path components
  int c = 0;  // sym-cycle components
  std::vector<ComponentKind> per_step_kind;
  /// State nodes certified controllable after each step.
  std::vector<std::set<int>> per_step_ssc_nodes;
  /// Number of component-processing iterations performed.
  int iterations = 0;

  /// The decomposition's network with the placed inputs attached.
  SignedNetwork assembled() const { return build_network(assembled_spec); }
  NetworkSpec assembled_spec;
};

/// Bridge endpoints on the already-processed side, which act as inputs for
/// component i (1-based). Verifies that the processed prefix together with the
/// connecting bridge is SSC; throws PredecessorNotSsc otherwise.
std::set<int> component_input_nodes(const PactusDecomposition& dec,
                                    const SignedNetwork& net_so_far, int i);

/// Minimum-input placement for a chain of sym-paths/sym-cycles joined by
/// single bridge edges with no tree-shaped joins: the first component gets one
/// input (path, at a terminal) or two (cycle, at adjacent nodes), every later
/// cycle gets one input adjacent to its component input's attachment, later
/// paths get none. Exactly c+1 inputs total.
PlacementResult algorithm1(const PactusDecomposition& dec);

/// General merging process: walks the chain once, skips steps already
/// controllable through their component inputs, and otherwise adds the fewest
/// external inputs satisfying the step's path/tree/cycle condition. Ties are
/// broken by the lowest feasible attachment label.
PlacementResult algorithm2(const PactusDecomposition& dec);

struct ExhaustiveOptions {
  /// Upper bound on the estimated number of subset checks.
  double budget = 4e9;
  SscOptions ssc;
};

/// Brute-force minimality oracle: smallest k <= max_inputs for which some
/// attachment of k external inputs makes the network SSC, with the first such
/// attachment in lexicographic order. Nothing if no k works.
std::optional<std::pair<int, std::vector<int>>> exhaustive_min_inputs(
    const SignedNetwork& net, int max_inputs, const ExhaustiveOptions& opts = {});

}  // namespace sscnet
