#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "sscnet/numeric.hpp"
#include "sscnet/ssc.hpp"

using namespace sscnet;
using fixtures::N;
using fixtures::P;

TEST_CASE("sample_weights is deterministic and sign-consistent") {
  SignedNetwork net = fixtures::make(
      {1, 2, 3}, {{1, 2, P}, {2, 3, N}}, {{101, 1, N}});
  WeightSample a = sample_weights(net, 99);
  WeightSample b = sample_weights(net, 99);
  CHECK(a.edge_weights == b.edge_weights);
  CHECK(a.input_gains == b.input_gains);
  CHECK(a.edge_weights[0] > 0);
  CHECK(a.edge_weights[1] < 0);
  CHECK(a.input_gains[0] < 0);
  for (double w : a.edge_weights) {
    CHECK(std::abs(w) >= 0.5);
    CHECK(std::abs(w) <= 2.0);
  }
  WeightSample c = sample_weights(net, 100);
  CHECK(a.edge_weights != c.edge_weights);

  WeightSample fixed = sample_weights(net, 99, true);
  CHECK(fixed.input_gains == std::vector<double>{-1.0});
}

TEST_CASE("numeric_rank on the worked 3-node path") {
  SignedNetwork net = fixtures::path3_mid();
  auto [L1, B1] = numeric_matrices(net, {{1.0, 1.0}, {1.0}});
  CHECK(numeric_rank(L1, B1, 1e-9) == 2);

  auto [L2, B2] = numeric_matrices(net, {{1.0, 2.0}, {1.0}});
  CHECK(numeric_rank(L2, B2, 1e-9) == 3);

  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd B = Eigen::MatrixXd::Ones(1, 1);
  CHECK(numeric_rank(L, B, 1e-9) == 1);

  CHECK_THROWS_AS((void)numeric_rank(Eigen::MatrixXd::Zero(2, 3),
                                     Eigen::MatrixXd::Zero(2, 1), 1e-9),
                  Error);
}

TEST_CASE("monte_carlo_sc counts and injects") {
  // path-4 driven from the interior: inject the known degenerate weights
  SignedNetwork net = fixtures::fig2b();
  MonteCarloOptions opts;
  opts.initial_samples.push_back({{1.0, 1.0, (3.0 - std::sqrt(5.0)) / 2.0}, {1.0}});
  NumericReport rep = monte_carlo_sc(net, 50, 7, 1e-9, opts);
  CHECK(rep.samples_run == 50);
  CHECK(rep.min_rank_seen < 4);
  REQUIRE(rep.counterexample.has_value());
  CHECK(rep.counterexample_index == 0);

  // the stored counterexample reproduces its deficiency, much tighter too
  auto [L, B] = numeric_matrices(net, *rep.counterexample);
  CHECK(numeric_rank(L, B, 1e-9) < 4);
  CHECK(numeric_rank(L, B, 1e-10) < 4);
}

TEST_CASE("monte_carlo_sc with no inputs reports rank zero") {
  SignedNetwork net = fixtures::make({1, 2}, {{1, 2, P}}, {});
  NumericReport rep = monte_carlo_sc(net, 3, 1, 1e-9);
  CHECK(rep.min_rank_seen == 0);
  CHECK(rep.full_rank_count == 0);
}

TEST_CASE("monte_carlo_sc is seed deterministic") {
  SignedNetwork net = fixtures::fig4b();
  NumericReport a = monte_carlo_sc(net, 64, 2024, 1e-9);
  NumericReport b = monte_carlo_sc(net, 64, 2024, 1e-9);
  CHECK(a.min_rank_seen == b.min_rank_seen);
  CHECK(a.full_rank_count == b.full_rank_count);
  CHECK(a.counterexample_index == b.counterexample_index);
  if (a.counterexample) {
    CHECK(a.counterexample->edge_weights == b.counterexample->edge_weights);
  }
}

TEST_CASE("SSC fixtures stay full rank under sampling") {
  for (const SignedNetwork& net :
       {fixtures::fig2a(), fixtures::fig3a(), fixtures::fig4a(), fixtures::fig6a()}) {
    NumericReport rep = monte_carlo_sc(net, 300, 11, 1e-9);
    CHECK(rep.full_rank_count == rep.samples_run);
    CHECK(!rep.counterexample.has_value());
  }
}

TEST_CASE("adversarial_search finds symmetric degeneracies instantly") {
  auto found = adversarial_search(fixtures::path3_mid(), 100);
  REQUIRE(found.has_value());
  // all-equal magnitudes are already degenerate for the centered path
  CHECK(found->edge_weights == std::vector<double>{1.0, 1.0});

  auto cyc = adversarial_search(fixtures::fig4b(), 500);
  REQUIRE(cyc.has_value());
  auto [L, B] = numeric_matrices(fixtures::fig4b(), *cyc);
  CHECK(numeric_rank(L, B, 1e-9) < 4);
}

TEST_CASE("adversarial_search needs descent for the skewed path") {
  // no automorphism helps here; the degenerate surface is curved
  auto found = adversarial_search(fixtures::fig2b(), 4000);
  REQUIRE(found.has_value());
  auto [L, B] = numeric_matrices(fixtures::fig2b(), *found);
  CHECK(numeric_rank(L, B, 1e-9) < 4);
  CHECK(numeric_rank(L, B, 1e-10) < 4);
}

TEST_CASE("adversarial_search respects SSC graphs") {
  CHECK(!adversarial_search(fixtures::fig2a(), 800).has_value());
}
