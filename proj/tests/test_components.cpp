#include <doctest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "sscnet/components.hpp"
#include "sscnet/ssc.hpp"

using namespace sscnet;
using fixtures::P;

namespace {

SignedNetwork state_graph(std::vector<int> nodes, std::vector<StateEdge> edges) {
  return fixtures::make(std::move(nodes), std::move(edges), {});
}

}  // namespace

TEST_CASE("classify_component") {
  CHECK(classify_component(state_graph({1, 2, 3}, {{1, 2, P}, {2, 3, P}})) ==
        ComponentKind::SymPath);
  CHECK(classify_component(state_graph(
            fixtures::iota(4, 9), {{4, 5, P}, {5, 6, P}, {6, 7, P}, {7, 8, P},
                                   {8, 9, P}, {4, 9, P}})) == ComponentKind::SymCycle);
  // first step graph of the 16-node walkthrough: path plus two bridge edges
  CHECK(classify_component(state_graph(
            {1, 2, 3, 4, 6}, {{1, 2, P}, {2, 3, P}, {2, 6, P}, {3, 4, P}})) ==
        ComponentKind::TreeType);
  CHECK(classify_component(state_graph({7}, {})) == ComponentKind::SymPath);
  CHECK(classify_component(state_graph(
            {1, 2, 3, 4}, {{1, 2, P}, {2, 3, P}, {3, 4, P}, {1, 4, P}, {1, 3, P}})) ==
        ComponentKind::CycleType);
  CHECK_THROWS_AS((void)classify_component(state_graph({1, 2}, {})), Error);
}

TEST_CASE("lemma: path with one terminal input") {
  SignedNetwork path4 = state_graph({1, 2, 3, 4}, {{1, 2, P}, {2, 3, P}, {3, 4, P}});
  CHECK(check_lemma_path(path4, {4}));
  CHECK(!check_lemma_path(path4, {3}));
  CHECK(check_lemma_path(state_graph({1}, {}), {1}));

  try {
    (void)check_lemma_path(state_graph({1, 2, 3}, {{1, 2, P}, {2, 3, P}, {1, 3, P}}),
                           {1});
    FAIL("expected WrongKind");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongKind);
  }
  try {
    (void)check_lemma_path(path4, {1, 4});
    FAIL("expected WrongInputCount");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongInputCount);
  }
}

TEST_CASE("lemma: tree partitioned into input-terminated paths") {
  SignedNetwork tree = state_graph(fixtures::iota(1, 5), fixtures::tree5_edges());
  CHECK(check_lemma_tree(tree, {3, 5}));
  CHECK(!check_lemma_tree(tree, {4, 5}));

  SignedNetwork star =
      state_graph({0, 1, 2, 3}, {{0, 1, P}, {0, 2, P}, {0, 3, P}});
  CHECK(check_lemma_tree(star, {1, 2, 3}));
}

TEST_CASE("lemma: cycle with two adjacent inputs") {
  SignedNetwork cyc = state_graph(fixtures::iota(1, 4), fixtures::cycle4_edges());
  CHECK(check_lemma_cycle(cyc, {2, 3}));
  CHECK(!check_lemma_cycle(cyc, {1, 3}));

  SignedNetwork tri = state_graph({1, 2, 3}, {{1, 2, P}, {2, 3, P}, {1, 3, P}});
  CHECK(check_lemma_cycle(tri, {1, 2}));
  CHECK(check_lemma_cycle(tri, {1, 3}));
  CHECK(check_lemma_cycle(tri, {2, 3}));
}

TEST_CASE("lemma checkers agree with enumeration on their classes") {
  // every path size and attachment point
  for (int n = 2; n <= 7; ++n) {
    std::vector<StateEdge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, P});
    SignedNetwork comp = state_graph(fixtures::iota(1, n), edges);
    for (int t = 1; t <= n; ++t) {
      SignedNetwork net = fixtures::make(fixtures::iota(1, n), edges, {{101, t, P}});
      CHECK(check_lemma_path(comp, {t}) == oracle::check_ssc_full(net).first);
    }
  }
  // every cycle size and attachment pair
  for (int n = 3; n <= 7; ++n) {
    std::vector<StateEdge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, P});
    edges.push_back({1, n, P});
    SignedNetwork comp = state_graph(fixtures::iota(1, n), edges);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        SignedNetwork net = fixtures::make(fixtures::iota(1, n), edges,
                                           {{101, a, P}, {102, b, P}});
        CHECK(check_lemma_cycle(comp, {a, b}) == oracle::check_ssc_full(net).first);
      }
    }
  }
  // random trees from the corpus
  int trees = 0;
  for (const auto& fx : corpus::make_corpus(150, 0x17EE5)) {
    if (fx.family != corpus::Family::Tree || fx.attachments.size() < 2) continue;
    ++trees;
    SignedNetwork net = build_network(fx.spec);
    NetworkSpec bare = fx.spec;
    bare.input_nodes.clear();
    bare.input_edges.clear();
    std::set<int> attach(fx.attachments.begin(), fx.attachments.end());
    CHECK(check_lemma_tree(build_network(bare), attach) ==
          oracle::check_ssc_full(net).first);
  }
  CHECK(trees > 10);
}

TEST_CASE("validate_decomposition") {
  CHECK(validate_decomposition(fixtures::fig5a(), fixtures::fig5_dec()));
  CHECK(validate_decomposition(fixtures::fig7(), fixtures::fig7_dec()));
  CHECK(validate_decomposition(fixtures::fig6a(), fixtures::fig6_dec()));

  PactusDecomposition overlapping = fixtures::fig5_dec();
  overlapping.components[1].push_back(1);
  std::vector<std::string> diags;
  CHECK(!validate_decomposition(fixtures::fig5a(), overlapping, &diags));
  CHECK(!diags.empty());

  // a bridge edge that skips a component is rejected
  PactusDecomposition skipping = fixtures::fig5_dec();
  skipping.components = {{1, 2, 3}, {10, 11, 12}, {4, 5, 6, 7, 8, 9}, {13, 14, 15, 16}};
  CHECK(!validate_decomposition(fixtures::fig5a(), skipping));
}

TEST_CASE("auto_decompose recovers the 16-node chain") {
  auto dec = auto_decompose(fixtures::fig5a());
  REQUIRE(dec.has_value());
  CHECK(dec->components == fixtures::fig5_dec().components);
  CHECK(validate_decomposition(fixtures::fig5a(), *dec));
  CHECK(dec->kinds == std::vector<ComponentKind>{
                          ComponentKind::SymPath, ComponentKind::SymCycle,
                          ComponentKind::SymCycle, ComponentKind::SymCycle});
}

TEST_CASE("auto_decompose simple and impossible graphs") {
  std::vector<StateEdge> cyc5;
  for (int i = 1; i < 5; ++i) cyc5.push_back({i, i + 1, P});
  cyc5.push_back({1, 5, P});
  auto one = auto_decompose(state_graph(fixtures::iota(1, 5), cyc5));
  REQUIRE(one.has_value());
  CHECK(one->components.size() == 1);

  SignedNetwork k4 = state_graph(
      {1, 2, 3, 4},
      {{1, 2, P}, {1, 3, P}, {1, 4, P}, {2, 3, P}, {2, 4, P}, {3, 4, P}});
  CHECK(!auto_decompose(k4).has_value());
}

TEST_CASE("auto_decompose output always validates") {
  for (const auto& fx : corpus::make_corpus(60, 0xDEC0)) {
    NetworkSpec bare = fx.spec;
    bare.input_nodes.clear();
    bare.input_edges.clear();
    SignedNetwork net = build_network(bare);
    auto dec = auto_decompose(net);
    if (dec) CHECK(validate_decomposition(net, *dec));
  }
}

TEST_CASE("merging two SSC components through one bridge stays SSC") {
  // composition law behind the chain algorithms, small randomized version
  corpus::Rng rng(0x2B1D6E);
  int done = 0;
  while (done < 25) {
    int na = rng.range(2, 5);
    int nb = rng.range(3, 6);
    // component A: path 1..na with input at 1
    NetworkSpec spec;
    for (int i = 1; i <= na; ++i) spec.state_nodes.push_back(i);
    for (int i = 1; i < na; ++i) spec.state_edges.push_back({i, i + 1, P});
    spec.input_nodes.push_back(101);
    spec.input_edges.push_back({101, 1, P});
    // component B: cycle 11..10+nb with adjacent inputs
    for (int i = 11; i <= 10 + nb; ++i) spec.state_nodes.push_back(i);
    for (int i = 11; i < 10 + nb; ++i) spec.state_edges.push_back({i, i + 1, P});
    spec.state_edges.push_back({11, 10 + nb, P});
    spec.input_nodes.push_back(102);
    spec.input_edges.push_back({102, 11, P});
    spec.input_nodes.push_back(103);
    spec.input_edges.push_back({103, 12, P});
    // one bridge edge anywhere
    int k = rng.range(1, na);
    int l = rng.range(11, 10 + nb);
    spec.state_edges.push_back({k, l, P});
    SignedNetwork merged = build_network(spec);
    CHECK(check_ssc(merged).is_ssc);
    ++done;
  }
}

TEST_CASE("two input-adjacent sym-paths tolerate an extra bridge edge") {
  corpus::Rng rng(0xC0110);
  int done = 0;
  while (done < 25) {
    int na = rng.range(2, 5);
    int nb = rng.range(2, 5);
    NetworkSpec spec;
    for (int i = 1; i <= na; ++i) spec.state_nodes.push_back(i);
    for (int i = 1; i < na; ++i) spec.state_edges.push_back({i, i + 1, P});
    for (int i = 11; i <= 10 + nb; ++i) spec.state_nodes.push_back(i);
    for (int i = 11; i < 10 + nb; ++i) spec.state_edges.push_back({i, i + 1, P});
    spec.input_nodes = {101, 102};
    spec.input_edges = {{101, 1, P}, {102, 11, P}};
    // first bridge joins the two input attachments
    spec.state_edges.push_back({1, 11, P});
    // any injective second bridge edge
    if (na >= 2 && nb >= 2) {
      int k = rng.range(2, na);
      int l = rng.range(12, 10 + nb);
      spec.state_edges.push_back({k, l, P});
    }
    SignedNetwork merged = build_network(spec);
    CHECK(check_ssc(merged).is_ssc);
    ++done;
  }
}
