#include "sscnet/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace sscnet {

SymbolTable::SymbolTable(const SignedNetwork& net) : edges_(net.state_edges()) {}

int SymbolTable::id_of(int label_a, int label_b) const {
  if (label_a > label_b) std::swap(label_a, label_b);
  for (int id = 0; id < symbol_count(); ++id) {
    if (edges_[id].a == label_a && edges_[id].b == label_b) return id;
  }
  throw Error(ErrorKind::UnknownNode,
              "no edge symbol for (" + std::to_string(label_a) + "," +
                  std::to_string(label_b) + ")");
}

std::string SymbolTable::name(int id) const {
  const StateEdge& e = edges_.at(id);
  if (e.a <= 9 && e.b <= 9) {
    return "a" + std::to_string(e.a) + std::to_string(e.b);
  }
  return "a" + std::to_string(e.a) + "_" + std::to_string(e.b);
}

SymMatrix build_symbolic_laplacian(const SignedNetwork& net,
                                   const SymbolTable& symbols) {
  const int n = net.state_count();
  SymMatrix L(n, n);
  for (int id = 0; id < symbols.symbol_count(); ++id) {
    const StateEdge& e = symbols.edge(id);
    int i = net.state_index(e.a);
    int j = net.state_index(e.b);
    Polynomial x = Polynomial::term(Monomial::symbol(id), Rational(sign_value(e.sign)));
    L.at(i, j) += x;
    L.at(j, i) += x;
    L.at(i, i) -= x;
    L.at(j, j) -= x;
  }
  return L;
}

SymMatrix input_sign_matrix(const SignedNetwork& net) {
  SymMatrix B(net.state_count(), net.input_count());
  for (int u = 0; u < net.input_count(); ++u) {
    auto [t, s] = net.input_target(u);
    B.at(t, u) = Polynomial(static_cast<long long>(sign_value(s)));
  }
  return B;
}

namespace {

void check_budget(const Polynomial& p, size_t cap) {
  if (p.term_count() > cap) {
    throw Error(ErrorKind::PolynomialBudgetExceeded,
                "intermediate polynomial has " + std::to_string(p.term_count()) +
                    " terms, cap is " + std::to_string(cap));
  }
}

}  // namespace

SymMatrix gramian(const SymMatrix& L, const SymMatrix& B, size_t term_cap) {
  if (L.rows != L.cols || B.rows != L.rows) {
    throw Error(ErrorKind::DimensionMismatch,
                "L must be square and B must have matching rows");
  }
  const int n = L.rows;
  const int m = B.cols;
  SymMatrix C(n, n * m);
  SymMatrix power = B;  // L^k B
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < m; ++c) C.at(r, k * m + c) = power.at(r, c);
    }
    if (k + 1 == n) break;
    SymMatrix next(n, m);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < m; ++c) {
        Polynomial acc;
        for (int t = 0; t < n; ++t) {
          if (L.at(r, t).is_zero() || power.at(t, c).is_zero()) continue;
          acc += L.at(r, t) * power.at(t, c);
          check_budget(acc, term_cap);
        }
        next.at(r, c) = std::move(acc);
      }
    }
    power = std::move(next);
  }
  return C;
}

namespace {

// Divide out the row's monomial and rational content and flip signs so the
// first nonzero entry leads with a positive coefficient.
void normalize_row(SymMatrix& M, int r) {
  int first = -1;
  for (int c = 0; c < M.cols; ++c) {
    if (!M.at(r, c).is_zero()) {
      first = c;
      break;
    }
  }
  if (first < 0) return;
  Monomial mg;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  bool began = false;
  for (int c = first; c < M.cols; ++c) {
    const Polynomial& p = M.at(r, c);
    if (p.is_zero()) continue;
    auto [m2, c2] = p.content();
    mg = began ? Monomial::gcd(mg, m2) : m2;
    began = true;
    num_gcd = boost::multiprecision::gcd(num_gcd,
                                         boost::multiprecision::abs(numerator(c2)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c2));
  }
  Rational cg(num_gcd, den_lcm);
  if (M.at(r, first).leading_coefficient() < 0) cg = -cg;
  if (mg.is_one() && cg == 1) return;
  for (int c = 0; c < M.cols; ++c) {
    if (!M.at(r, c).is_zero()) M.at(r, c) = M.at(r, c).divided_by(mg, cg);
  }
}

}  // namespace

ReductionReport rank_with_condition1(const SymMatrix& C, const SymbolicOptions& opts) {
  SymMatrix M = C;
  const int rows = M.rows;
  const int cols = M.cols;
  for (int r = 0; r < rows; ++r) normalize_row(M, r);

  ReductionReport rep;
  std::vector<int> pivot_col_of(rows, -1);

  for (int col = 0; col < cols; ++col) {
    while (true) {
      // candidate rows with a nonzero entry in this column, fewest terms
      // first, one-term candidates ahead of everything
      int best = -1;
      size_t best_terms = 0;
      for (int r = 0; r < rows; ++r) {
        if (pivot_col_of[r] >= 0 || M.at(r, col).is_zero()) continue;
        size_t t = M.at(r, col).term_count();
        if (best < 0 || t < best_terms) {
          best = r;
          best_terms = t;
        }
      }
      if (best < 0) break;

      const Polynomial pivot = M.at(best, col);
      bool usable = pivot.term_count() == 1 ||
                    (opts.sign_definite_pivots && pivot.same_sign_terms());
      if (!usable) {
        rep.pivot_log.push_back({best, col, pivot, PivotAction::ZeroedByCondition1});
        M.at(best, col) = Polynomial();
        continue;
      }

      rep.pivot_log.push_back({best, col, pivot, PivotAction::Used});
      pivot_col_of[best] = col;
      ++rep.rank;
      for (int r = 0; r < rows; ++r) {
        if (r == best || M.at(r, col).is_zero()) continue;
        const Polynomial factor = M.at(r, col);
        for (int c = 0; c < cols; ++c) {
          M.at(r, c) = pivot * M.at(r, c) - factor * M.at(best, c);
          check_budget(M.at(r, c), opts.term_cap);
        }
        normalize_row(M, r);
      }
      break;
    }
  }

  // Present pivot rows first, in column order, like a reduced echelon form.
  rep.rref = SymMatrix(rows, cols);
  std::vector<std::pair<int, int>> order;  // (pivot col, row)
  for (int r = 0; r < rows; ++r) {
    if (pivot_col_of[r] >= 0) order.push_back({pivot_col_of[r], r});
  }
  std::sort(order.begin(), order.end());
  int out = 0;
  for (const auto& [c, r] : order) {
    for (int cc = 0; cc < cols; ++cc) rep.rref.at(out, cc) = M.at(r, cc);
    ++out;
  }
  for (int r = 0; r < rows; ++r) {
    if (pivot_col_of[r] < 0) {
      for (int cc = 0; cc < cols; ++cc) rep.rref.at(out, cc) = M.at(r, cc);
      ++out;
    }
  }
  return rep;
}

std::pair<bool, ReductionReport> verify_ssc_symbolic(const SignedNetwork& net,
                                                     const SymbolicOptions& opts) {
  SymbolTable symbols(net);
  SymMatrix L = build_symbolic_laplacian(net, symbols);
  SymMatrix B = input_sign_matrix(net);
  SymMatrix C = gramian(L, B, opts.term_cap);
  ReductionReport rep = rank_with_condition1(C, opts);
  return {rep.rank == net.state_count(), std::move(rep)};
}

std::string pivot_log_text(const ReductionReport& report, const SymbolTable& symbols) {
  std::ostringstream os;
  auto name = [&](int id) { return symbols.name(id); };
  int step = 1;
  for (const PivotStep& ps : report.pivot_log) {
    os << "step " << step++ << ": pivot (" << ps.row + 1 << "," << ps.col + 1
       << ") = " << ps.pivot.to_string(name) << " "
       << (ps.action == PivotAction::Used ? "[used]" : "[zeroed]") << "\n";
  }
  return os.str();
}

}  // namespace sscnet
