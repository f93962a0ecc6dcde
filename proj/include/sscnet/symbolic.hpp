#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sscnet/graph.hpp"
#include "sscnet/polynomial.hpp"

namespace sscnet {

/// One symbol per state edge, in canonical edge order.
class SymbolTable {
 public:
  explicit SymbolTable(const SignedNetwork& net);

  int symbol_count() const { return static_cast<int>(edges_.size()); }
  const StateEdge& edge(int id) const { return edges_.at(id); }
  int id_of(int label_a, int label_b) const;
  std::string name(int id) const;

 private:
  std::vector<StateEdge> edges_;
};

struct SymMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Polynomial> cells;

  SymMatrix() = default;
  SymMatrix(int r, int c) : rows(r), cols(c), cells(static_cast<size_t>(r) * c) {}
  Polynomial& at(int r, int c) { return cells[static_cast<size_t>(r) * cols + c]; }
  const Polynomial& at(int r, int c) const {
    return cells[static_cast<size_t>(r) * cols + c];
  }
};

/// Laplacian over edge symbols: entry (i,j) is sign(i,j)*x_ij for each edge,
/// the diagonal is the negated signed row sum, so rows sum to the zero
/// polynomial. Rows and columns follow state-label order.
SymMatrix build_symbolic_laplacian(const SignedNetwork& net,
                                   const SymbolTable& symbols);

/// Input matrix B with constant entries: the sign of each input coupling.
SymMatrix input_sign_matrix(const SignedNetwork& net);

struct SymbolicOptions {
  /// Treat a multi-term pivot whose coefficients all share one sign as
  /// nonzero (such a value cannot vanish for positive edge magnitudes).
  bool sign_definite_pivots = false;
  /// Refuse once any intermediate polynomial grows past this many terms.
  size_t term_cap = 1'000'000;
};

/// Controllability matrix [B, LB, L^2 B, ..., L^{n-1} B] with exact entries.
SymMatrix gramian(const SymMatrix& L, const SymMatrix& B,
                  size_t term_cap = SymbolicOptions{}.term_cap);

enum class PivotAction : std::uint8_t { Used, ZeroedByCondition1 };

struct PivotStep {
  int row = 0;  // original row index, 0-based
  int col = 0;
  Polynomial pivot;
  PivotAction action = PivotAction::Used;
};

struct ReductionReport {
  int rank = 0;
  std::vector<PivotStep> pivot_log;
  SymMatrix rref;
};

/// Fraction-free Gaussian elimination with column-order pivoting. Rows are
/// kept primitive (monomial and rational content divided out, leading
/// coefficient positive). A candidate pivot that still has two or more terms
/// after normalization is logged and set to zero, and the column search moves
/// on; the rank is the number of pivots actually used.
ReductionReport rank_with_condition1(const SymMatrix& C,
                                     const SymbolicOptions& opts = {});

/// Full-rank test of the symbolic controllability matrix. True means every
/// weight choice respecting the sign pattern yields a controllable network.
std::pair<bool, ReductionReport> verify_ssc_symbolic(
    const SignedNetwork& net, const SymbolicOptions& opts = {});

/// Line-oriented audit of the elimination:
///   step <k>: pivot (r,c) = <poly> [used|zeroed]
/// with 1-based row/column positions.
std::string pivot_log_text(const ReductionReport& report,
                           const SymbolTable& symbols);

}  // namespace sscnet
