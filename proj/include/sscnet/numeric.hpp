#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "sscnet/graph.hpp"

namespace sscnet {

/// One realization of the sign pattern: signed edge couplings and input gains,
/// aligned with the network's canonical state_edges()/input_edges() order.
/// Magnitudes are strictly positive; each value carries its edge's sign.
struct WeightSample {
  std::vector<double> edge_weights;
  std::vector<double> input_gains;
};

/// Draws magnitudes independently, uniform on [0.5, 2.0], multiplied by the
/// edge's sign. Deterministic per seed and identical across platforms.
WeightSample sample_weights(const SignedNetwork& net, std::uint64_t rng_seed,
                            bool fix_b_magnitudes = false);

/// Realizes (L, B) from a sample.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> numeric_matrices(
    const SignedNetwork& net, const WeightSample& sample);

/// Numeric rank of [B, LB, ..., L^{n-1}B]: singular values above
/// tol * sigma_max count, with the k-th power block scaled by ||L||^-k to keep
/// the dynamic range testable.
int numeric_rank(const Eigen::MatrixXd& L_val, const Eigen::MatrixXd& B_val,
                 double tol);

struct NumericReport {
  int samples_run = 0;
  int min_rank_seen = 0;
  int full_rank_count = 0;
  std::optional<WeightSample> counterexample;
  int counterexample_index = -1;
  double rank_tolerance = 0;
  std::uint64_t seed = 0;
};

struct MonteCarloOptions {
  bool fix_b_magnitudes = false;
  /// Samples evaluated before any random draws, counted against n_samples.
  std::vector<WeightSample> initial_samples;
};

/// Samples n realizations of the sign pattern and ranks each one. A reported
/// counterexample certifies the graph is not sign controllable; it is
/// re-checked at a 10x tighter tolerance so borderline singular values are
/// never reported. All-full-rank output is evidence, not proof.
NumericReport monte_carlo_sc(const SignedNetwork& net, int n_samples,
                             std::uint64_t rng_seed, double tol,
                             const MonteCarloOptions& opts = {});

/// Hunts for a rank-deficient realization: all-equal weights and
/// orbit-constant weights under the graph's sign-preserving automorphisms
/// first, then random samples, then derivative-free descent on the smallest
/// eigenvector-input alignment. Returns the first confirmed witness within
/// the evaluation budget.
std::optional<WeightSample> adversarial_search(const SignedNetwork& net,
                                               int budget,
                                               std::uint64_t rng_seed = 0x5eedULL,
                                               double tol = 1e-9);

}  // namespace sscnet
