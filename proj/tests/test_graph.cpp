#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "sscnet/graph.hpp"

using namespace sscnet;
using fixtures::N;
using fixtures::P;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ValidationError;
}

}  // namespace

TEST_CASE("build_network accepts the introductory square") {
  SignedNetwork net = fixtures::fig1b();
  CHECK(net.state_count() == 4);
  CHECK(net.input_count() == 2);
  CHECK(net.has_state_edge(1, 2));
  CHECK(net.has_state_edge(1, 4));
  CHECK(!net.has_state_edge(1, 3));
  CHECK(net.input_target_labels() == std::vector<int>{2, 3});
}

TEST_CASE("build_network accepts the smallest accessible network") {
  SignedNetwork net = fixtures::make({1}, {}, {{101, 1, P}});
  CHECK(net.state_count() == 1);
  CHECK(is_accessible(net));
}

TEST_CASE("build_network rejects malformed specs") {
  CHECK(kind_of([] {
          NetworkSpec s;
          s.state_nodes = {1, 2};
          s.input_nodes = {101};
          s.input_edges = {{101, 1, P}, {101, 2, P}};
          build_network(s);
        }) == ErrorKind::InputFanOutViolation);
  CHECK(kind_of([] {
          NetworkSpec s;
          s.state_nodes = {1};
          s.input_nodes = {101};  // declared but unwired
          build_network(s);
        }) == ErrorKind::InputFanOutViolation);
  CHECK(kind_of([] {
          NetworkSpec s;
          s.state_nodes = {1, 2};
          s.state_edges = {{1, 2, P}, {2, 1, N}};
          build_network(s);
        }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] {
          NetworkSpec s;
          s.state_nodes = {1};
          s.state_edges = {{1, 1, P}};
          build_network(s);
        }) == ErrorKind::SelfEdgeInSpec);
  CHECK(kind_of([] {
          NetworkSpec s;
          s.state_nodes = {1};
          s.input_nodes = {101, 102};
          s.input_edges = {{101, 102, P}, {102, 1, P}};
          build_network(s);
        }) == ErrorKind::InputInEdge);
  CHECK(kind_of([] {
          NetworkSpec s;
          s.state_nodes = {1, 2};
          s.state_edges = {{1, 3, P}};
          build_network(s);
        }) == ErrorKind::UnknownNode);
  CHECK(kind_of([] {
          NetworkSpec s;
          s.state_nodes = {1, 1};
          build_network(s);
        }) == ErrorKind::DuplicateNode);
  CHECK(kind_of([] { build_network(NetworkSpec{}); }) == ErrorKind::EmptyStateSet);
}

TEST_CASE("in_neighbors follows the self-loop convention") {
  SignedNetwork net = fixtures::fig1b();
  CHECK(in_neighbors(net, 2) == std::set<int>{1, 2, 3, 101});
  CHECK(in_neighbors(net, 102).empty());
  CHECK(in_neighbors(fixtures::make({1}, {}, {}), 1) == std::set<int>{1});
  CHECK_THROWS_AS((void)in_neighbors(net, 99), Error);
}

TEST_CASE("neighborhood matches the worked boundary values") {
  SignedNetwork net = fixtures::fig1b();
  std::set<int> nb = neighborhood(net, {1, 3});
  for (int v : {1, 3}) nb.erase(v);
  CHECK(nb == std::set<int>{2, 4, 102});

  CHECK(neighborhood(net, {}).empty());

  SignedNetwork p = fixtures::fig2b();
  std::set<int> nb2 = neighborhood(p, {1, 2, 4});
  for (int v : {1, 2, 4}) nb2.erase(v);
  CHECK(nb2 == std::set<int>{3});

  CHECK(kind_of([&] { (void)neighborhood(net, {101}); }) ==
        ErrorKind::AlphaContainsInputNode);
}

TEST_CASE("is_accessible") {
  CHECK(is_accessible(fixtures::fig2a()));
  // two state nodes, no edge, one input on the first
  CHECK(!is_accessible(fixtures::make({1, 2}, {}, {{101, 1, P}})));
  CHECK(!is_accessible(fixtures::make({1, 2}, {{1, 2, P}}, {})));
}

TEST_CASE("sign_pattern of the introductory square") {
  SignedNetwork net = fixtures::fig1b();
  SignPattern pat = sign_pattern(net);
  using E = SignPattern::Entry;
  for (int i = 0; i < 4; ++i) {
    CHECK(pat.at(i, i) == E::Minus);  // all-positive couplings
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      bool edge = net.has_state_edge(net.state_label(i), net.state_label(j));
      CHECK(pat.at(i, j) == (edge ? E::Plus : E::Zero));
    }
  }
  CHECK(pat.at(1, 4) == E::Plus);  // u1 -> 2
  CHECK(pat.at(2, 5) == E::Plus);  // u2 -> 3
  CHECK(pat.at(0, 4) == E::Zero);
}

TEST_CASE("sign_pattern edge cases") {
  using E = SignPattern::Entry;
  SignPattern single = sign_pattern(fixtures::make({1}, {}, {{101, 1, N}}));
  CHECK(single.at(0, 0) == E::Zero);
  CHECK(single.at(0, 1) == E::Minus);

  // mixed-sign incident edges leave the row sum undetermined
  SignPattern tri = sign_pattern(
      fixtures::make({1, 2, 3}, {{1, 2, P}, {2, 3, P}, {1, 3, N}}, {}));
  CHECK(tri.at(0, 0) == E::Indeterminate);
  CHECK(tri.at(1, 1) == E::Minus);
  CHECK(tri.at(2, 2) == E::Indeterminate);
}

TEST_CASE("graph properties over the corpus") {
  auto fixtures_list = corpus::make_corpus(60, 0xC0FFEE);
  corpus::Rng rng(0xBEEF);
  for (const auto& fx : fixtures_list) {
    SignedNetwork net = build_network(fx.spec);

    for (int v : net.state_labels()) {
      CHECK(in_neighbors(net, v).count(v) == 1);
    }
    for (int u : net.input_labels()) {
      CHECK(in_neighbors(net, u).empty());
    }

    // union homomorphism on disjoint alpha halves
    std::set<int> a1, a2;
    for (int v : net.state_labels()) (rng.chance(0.5) ? a1 : a2).insert(v);
    std::set<int> joint;
    for (int v : net.state_labels()) joint.insert(v);
    std::set<int> lhs = neighborhood(net, joint);
    std::set<int> rhs = neighborhood(net, a1);
    std::set<int> rhs2 = neighborhood(net, a2);
    rhs.insert(rhs2.begin(), rhs2.end());
    CHECK(lhs == rhs);

    // sign pattern round-trips to the same edge set
    SignPattern pat = sign_pattern(net);
    std::vector<StateEdge> rebuilt;
    for (int i = 0; i < pat.n; ++i) {
      for (int j = i + 1; j < pat.n; ++j) {
        if (pat.at(i, j) != SignPattern::Entry::Zero) {
          rebuilt.push_back({net.state_label(i), net.state_label(j),
                             pat.at(i, j) == SignPattern::Entry::Plus ? P : N});
        }
      }
    }
    REQUIRE(rebuilt.size() == net.state_edges().size());
    for (size_t k = 0; k < rebuilt.size(); ++k) {
      CHECK(rebuilt[k].a == net.state_edges()[k].a);
      CHECK(rebuilt[k].b == net.state_edges()[k].b);
      CHECK(rebuilt[k].sign == net.state_edges()[k].sign);
    }

    // accessibility is monotone under edge addition
    if (net.state_count() >= 2) {
      bool before = is_accessible(net);
      int a = net.state_label(rng.range(0, net.state_count() - 1));
      int b = net.state_label(rng.range(0, net.state_count() - 1));
      if (a != b && !net.has_state_edge(a, b)) {
        NetworkSpec grown = fx.spec;
        grown.state_edges.push_back({std::min(a, b), std::max(a, b), P});
        if (before) CHECK(is_accessible(build_network(grown)));
      }
    }
  }
}
