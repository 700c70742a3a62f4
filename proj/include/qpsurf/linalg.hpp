#pragma once

// Small exact linear algebra used by gauge solving and Jacobian dimensions.

#include <map>
#include <optional>
#include <vector>

#include "qpsurf/novikov.hpp"

namespace qpsurf::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// One solution of A x = b over Q (free variables set to zero), or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b,
                                                    std::size_t num_columns);

/// One solution of A x = b over GF(2), or nullopt when inconsistent.
std::optional<std::vector<int>> solve_mod2(const std::vector<std::vector<int>>& a, const std::vector<int>& b,
                                           std::size_t num_columns);

/// Smith normal form U * A * V = D with U, V unimodular.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> diagonal;  // nonzero invariant factors, in order
};
SmithForm smith_normal_form(const IntMatrix& a, std::size_t num_columns);

/// Outcome of solving A x = b over Z.
struct IntegerSolve {
  std::optional<std::vector<Integer>> solution;
  bool rationally_inconsistent = false;
  /// Invariant factor whose division failed (the root degree that would be needed).
  Integer obstruction_degree = 0;
};
IntegerSolve solve_integer(const SmithForm& smith, const std::vector<Integer>& b, std::size_t num_rows,
                           std::size_t num_columns);

/// Sparse row over the Novikov scalars, keyed by column.
using SparseRow = std::map<std::size_t, NovikovScalar>;

/// Incremental rank of a family of sparse rows over the fraction field of the
/// Novikov scalars. Uses fraction-free elimination, dividing exactly by monomial pivots.
class NovikovRowEchelon {
 public:
  /// Returns true when the row increased the rank.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

/// Rank of a dense rational matrix.
std::size_t rational_rank(RationalMatrix rows);

}  // namespace qpsurf::linalg
