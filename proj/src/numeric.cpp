#include "sscnet/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sscnet {

namespace {

// splitmix64; used directly so samples do not depend on library
// implementations of std distributions.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  int below(int n) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }
};

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  Rng mix(master ^ (0x6A09E667F3BCC909ULL + index * 0x9E3779B97F4A7C15ULL));
  return mix.next();
}

}  // namespace

WeightSample sample_weights(const SignedNetwork& net, std::uint64_t rng_seed,
                            bool fix_b_magnitudes) {
  Rng rng(rng_seed);
  WeightSample ws;
  ws.edge_weights.reserve(net.state_edges().size());
  for (const StateEdge& e : net.state_edges()) {
    ws.edge_weights.push_back(sign_value(e.sign) * rng.uniform(0.5, 2.0));
  }
  ws.input_gains.reserve(net.input_edges().size());
  for (const InputEdge& e : net.input_edges()) {
    double mag = fix_b_magnitudes ? 1.0 : rng.uniform(0.5, 2.0);
    ws.input_gains.push_back(sign_value(e.sign) * mag);
  }
  return ws;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> numeric_matrices(
    const SignedNetwork& net, const WeightSample& sample) {
  const int n = net.state_count();
  const int m = net.input_count();
  if (sample.edge_weights.size() != net.state_edges().size() ||
      sample.input_gains.size() != net.input_edges().size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "weight sample does not match the network's edge lists");
  }
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (size_t k = 0; k < net.state_edges().size(); ++k) {
    const StateEdge& e = net.state_edges()[k];
    int i = net.state_index(e.a);
    int j = net.state_index(e.b);
    double w = sample.edge_weights[k];
    L(i, j) += w;
    L(j, i) += w;
    L(i, i) -= w;
    L(j, j) -= w;
  }
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, m);
  for (size_t k = 0; k < net.input_edges().size(); ++k) {
    const InputEdge& e = net.input_edges()[k];
    B(net.state_index(e.target), net.input_index(e.input)) +=
        sample.input_gains[k];
  }
  return {L, B};
}

int numeric_rank(const Eigen::MatrixXd& L_val, const Eigen::MatrixXd& B_val,
                 double tol) {
  if (L_val.rows() != L_val.cols() || B_val.rows() != L_val.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "L must be square with B.rows() == L.rows()");
  }
  if (!(tol > 0)) {
    throw Error(ErrorKind::ValidationError, "tolerance must be positive");
  }
  const int n = static_cast<int>(L_val.rows());
  const int m = static_cast<int>(B_val.cols());
  if (n == 0 || m == 0) return 0;

  double norm_l = L_val.jacobiSvd().singularValues()(0);
  if (!(norm_l > 0)) norm_l = 1.0;

  Eigen::MatrixXd C(n, n * m);
  Eigen::MatrixXd power = B_val;
  double scale = 1.0;
  for (int k = 0; k < n; ++k) {
    C.middleCols(k * m, m) = power / scale;
    if (k + 1 == n) break;
    power = L_val * power;
    scale *= norm_l;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || !(sv(0) > 0)) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * sv(0)) ++rank;
  }
  return rank;
}

namespace {

int confirmed_rank(const SignedNetwork& net, const WeightSample& ws, double tol,
                   int n) {
  auto [L, B] = numeric_matrices(net, ws);
  int r = numeric_rank(L, B, tol);
  if (r < n && numeric_rank(L, B, tol / 10) == n) {
    return n;  // borderline singular value, not a certified deficiency
  }
  return r;
}

}  // namespace

NumericReport monte_carlo_sc(const SignedNetwork& net, int n_samples,
                             std::uint64_t rng_seed, double tol,
                             const MonteCarloOptions& opts) {
  if (n_samples < 1) {
    throw Error(ErrorKind::ValidationError, "need at least one sample");
  }
  const int n = net.state_count();
  NumericReport rep;
  rep.rank_tolerance = tol;
  rep.seed = rng_seed;
  rep.min_rank_seen = n;
  for (int i = 0; i < n_samples; ++i) {
    WeightSample ws =
        i < static_cast<int>(opts.initial_samples.size())
            ? opts.initial_samples[i]
            : sample_weights(net, derive_seed(rng_seed, i), opts.fix_b_magnitudes);
    int r = confirmed_rank(net, ws, tol, n);
    ++rep.samples_run;
    rep.min_rank_seen = std::min(rep.min_rank_seen, r);
    if (r == n) {
      ++rep.full_rank_count;
    } else if (!rep.counterexample) {
      rep.counterexample = ws;
      rep.counterexample_index = i;
    }
  }
  return rep;
}

namespace {

// Sign-preserving automorphisms of the state graph that fix the set of input
// targets; identity excluded. Exhaustive over permutations, so only attempted
// at small sizes.
std::vector<std::vector<int>> state_automorphisms(const SignedNetwork& net) {
  const int n = net.state_count();
  std::vector<std::vector<int>> out;
  if (n > 8) return out;

  std::vector<std::vector<int>> sig(n, std::vector<int>(n, 0));
  for (const StateEdge& e : net.state_edges()) {
    int i = net.state_index(e.a);
    int j = net.state_index(e.b);
    sig[i][j] = sig[j][i] = sign_value(e.sign);
  }
  std::vector<char> is_target(n, 0);
  for (int u = 0; u < net.input_count(); ++u) {
    is_target[net.input_target(u).first] = 1;
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool id = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      id = id && perm[i] == i;
      ok = is_target[i] == is_target[perm[i]];
    }
    if (!ok || id) continue;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        ok = sig[i][j] == sig[perm[i]][perm[j]];
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()) && out.size() < 50);
  return out;
}

// Union-find over edge indices giving the orbits induced by one automorphism.
std::vector<int> edge_orbits(const SignedNetwork& net, const std::vector<int>& perm) {
  const auto& edges = net.state_edges();
  std::vector<int> root(edges.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto edge_id = [&](int i, int j) -> int {
    int a = net.state_label(i);
    int b = net.state_label(j);
    if (a > b) std::swap(a, b);
    for (size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].a == a && edges[k].b == b) return static_cast<int>(k);
    }
    return -1;
  };
  for (size_t k = 0; k < edges.size(); ++k) {
    int i = net.state_index(edges[k].a);
    int j = net.state_index(edges[k].b);
    int img = edge_id(perm[i], perm[j]);
    if (img >= 0) {
      int ra = find(static_cast<int>(k));
      int rb = find(img);
      if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  for (size_t k = 0; k < edges.size(); ++k) root[k] = find(static_cast<int>(k));
  return root;
}

// Smallest singular value of [L - lambda*I, B] over the eigenvalues of L.
// Zero means an uncontrollable mode; the value stays accurate even when
// eigenvalues cluster, because only eigenvalues enter, never eigenvectors.
double pbh_margin(const SignedNetwork& net, const WeightSample& ws) {
  auto [L, B] = numeric_matrices(net, ws);
  const int n = static_cast<int>(L.rows());
  const int m = static_cast<int>(B.cols());
  if (m == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L, Eigen::EigenvaluesOnly);
  const auto& lam = es.eigenvalues();
  Eigen::MatrixXd pencil(n, n + m);
  pencil.rightCols(m) = B;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (i > 0 && std::abs(lam(i) - lam(i - 1)) < 1e-14 * std::abs(lam(0))) continue;
    pencil.leftCols(n) = L - lam(i) * Eigen::MatrixXd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(pencil);
    best = std::min(best, svd.singularValues()(n - 1));
  }
  return best;
}

// Log-magnitude box for the descent stage. The PBH margin degrades linearly
// towards an uncontrollable point, so the witness gate stays meaningful over
// this whole range of magnitude ratios.
constexpr double kLogBound = 2.5;

WeightSample decode(const SignedNetwork& net, const Eigen::VectorXd& x) {
  WeightSample ws;
  const size_t ne = net.state_edges().size();
  auto mag = [](double v) { return std::exp(std::clamp(v, -kLogBound, kLogBound)); };
  for (size_t k = 0; k < ne; ++k) {
    ws.edge_weights.push_back(sign_value(net.state_edges()[k].sign) *
                              mag(x(static_cast<int>(k))));
  }
  for (size_t k = 0; k < net.input_edges().size(); ++k) {
    ws.input_gains.push_back(sign_value(net.input_edges()[k].sign) *
                             mag(x(static_cast<int>(ne + k))));
  }
  return ws;
}

// Plain Nelder-Mead on log-magnitudes.
Eigen::VectorXd nelder_mead(const SignedNetwork& net, Eigen::VectorXd x0,
                            int iters, int& evals) {
  const int d = static_cast<int>(x0.size());
  auto f = [&](const Eigen::VectorXd& x) {
    ++evals;
    return pbh_margin(net, decode(net, x));
  };
  std::vector<Eigen::VectorXd> xs(d + 1, x0);
  std::vector<double> fs(d + 1);
  for (int i = 1; i <= d; ++i) xs[i](i - 1) += 0.25;
  for (int i = 0; i <= d; ++i) fs[i] = f(xs[i]);

  for (int it = 0; it < iters; ++it) {
    std::vector<int> ord(d + 1);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    std::vector<Eigen::VectorXd> xs2;
    std::vector<double> fs2;
    for (int i : ord) {
      xs2.push_back(xs[i]);
      fs2.push_back(fs[i]);
    }
    xs = std::move(xs2);
    fs = std::move(fs2);
    if (fs[0] < 1e-12) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) centroid += xs[i];
    centroid /= d;
    Eigen::VectorXd xr = centroid + (centroid - xs[d]);
    double fr = f(xr);
    if (fr < fs[0]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[d]);
      double fe = f(xe);
      if (fe < fr) {
        xs[d] = xe;
        fs[d] = fe;
      } else {
        xs[d] = xr;
        fs[d] = fr;
      }
    } else if (fr < fs[d - 1]) {
      xs[d] = xr;
      fs[d] = fr;
    } else {
      Eigen::VectorXd xc = centroid + 0.5 * (xs[d] - centroid);
      double fc = f(xc);
      if (fc < fs[d]) {
        xs[d] = xc;
        fs[d] = fc;
      } else {
        for (int i = 1; i <= d; ++i) {
          xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= d; ++i) {
    if (fs[i] < fs[best]) best = i;
  }
  return xs[best];
}

// Golden-section sweep over each coordinate in turn; picks up the narrow
// curved valleys that the simplex stalls in.
Eigen::VectorXd coordinate_polish(const SignedNetwork& net, Eigen::VectorXd x,
                                  int passes, int& evals) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](const Eigen::VectorXd& v) {
    ++evals;
    return pbh_margin(net, decode(net, v));
  };
  double fx = f(x);
  for (int pass = 0; pass < passes; ++pass) {
    for (int i = 0; i < x.size(); ++i) {
      double a = -kLogBound;
      double b = kLogBound;
      double c = b - phi * (b - a);
      double dpt = a + phi * (b - a);
      auto g = [&](double v) {
        Eigen::VectorXd y = x;
        y(i) = v;
        return f(y);
      };
      double fc = g(c);
      double fd = g(dpt);
      for (int step = 0; step < 18; ++step) {
        if (fc < fd) {
          b = dpt;
          dpt = c;
          fd = fc;
          c = b - phi * (b - a);
          fc = g(c);
        } else {
          a = c;
          c = dpt;
          fc = fd;
          dpt = a + phi * (b - a);
          fd = g(dpt);
        }
      }
      double mid = (a + b) / 2;
      double fmid = g(mid);
      if (fmid < fx) {
        x(i) = mid;
        fx = fmid;
      }
    }
  }
  return x;
}

}  // namespace

std::optional<WeightSample> adversarial_search(const SignedNetwork& net,
                                               int budget,
                                               std::uint64_t rng_seed,
                                               double tol) {
  const int n = net.state_count();
  const size_t ne = net.state_edges().size();
  const size_t ni = net.input_edges().size();
  int evals = 0;
  // A witness must fail the rank test at tol and tol/10 and exhibit an
  // eigenvector essentially orthogonal to every input column; the last check
  // rules out Krylov conditioning artifacts, since the eigendecomposition of
  // the symmetric Laplacian is accurate to machine precision.
  auto deficient = [&](const WeightSample& ws) {
    ++evals;
    return confirmed_rank(net, ws, tol, n) < n &&
           pbh_margin(net, ws) <= 1e-11;
  };

  // All-equal magnitudes first: the canonical symmetric degeneracy.
  WeightSample equal;
  equal.edge_weights.resize(ne);
  equal.input_gains.resize(ni);
  for (size_t k = 0; k < ne; ++k) {
    equal.edge_weights[k] = sign_value(net.state_edges()[k].sign);
  }
  for (size_t k = 0; k < ni; ++k) {
    equal.input_gains[k] = sign_value(net.input_edges()[k].sign);
  }
  if (deficient(equal)) return equal;

  // Orbit-constant magnitudes under each automorphism.
  Rng rng(rng_seed);
  for (const auto& perm : state_automorphisms(net)) {
    std::vector<int> orbit = edge_orbits(net, perm);
    for (int attempt = 0; attempt < 3 && evals < budget; ++attempt) {
      std::vector<double> value(ne);
      for (size_t k = 0; k < ne; ++k) {
        if (orbit[k] == static_cast<int>(k)) value[k] = rng.uniform(0.5, 2.0);
      }
      WeightSample ws = equal;
      for (size_t k = 0; k < ne; ++k) {
        ws.edge_weights[k] =
            sign_value(net.state_edges()[k].sign) * value[orbit[k]];
      }
      if (deficient(ws)) return ws;
    }
    if (evals >= budget) return std::nullopt;
  }

  // Random sampling; remember the most promising start.
  WeightSample best_start = equal;
  double best_margin = pbh_margin(net, equal);
  int random_tries = std::min(300, std::max(1, budget / 4));
  for (int i = 0; i < random_tries && evals < budget; ++i) {
    WeightSample ws = sample_weights(net, derive_seed(rng_seed, i + 1), false);
    if (deficient(ws)) return ws;
    double a = pbh_margin(net, ws);
    if (a < best_margin) {
      best_margin = a;
      best_start = ws;
    }
  }

  // Descend on the PBH margin: simplex, per-coordinate polish, simplex again,
  // restarting from fresh points while the budget lasts.
  const int d = static_cast<int>(ne + ni);
  Eigen::VectorXd x0(d);
  for (size_t k = 0; k < ne; ++k) {
    x0(static_cast<int>(k)) = std::log(std::abs(best_start.edge_weights[k]));
  }
  for (size_t k = 0; k < ni; ++k) {
    x0(static_cast<int>(ne + k)) = std::log(std::abs(best_start.input_gains[k]));
  }
  for (int round = 0; round < 40 && evals < budget; ++round) {
    Eigen::VectorXd x = nelder_mead(net, x0, std::min(600, budget - evals), evals);
    if (deficient(decode(net, x))) return decode(net, x);
    if (evals < budget) {
      x = coordinate_polish(net, x, 2, evals);
      if (deficient(decode(net, x))) return decode(net, x);
    }
    if (evals < budget) {
      x = nelder_mead(net, x, std::min(400, budget - evals), evals);
      if (deficient(decode(net, x))) return decode(net, x);
    }
    // fresh restart, alternating between tight and wide draws
    double span = round % 2 == 0 ? 1.2 : 2.3;
    for (int i = 0; i < d; ++i) {
      x0(i) = rng.uniform(-span, span);
    }
  }
  return std::nullopt;
}

}  // namespace sscnet
