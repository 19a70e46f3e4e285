#pragma once

/// @file enumeration.hpp
/// @brief Nonnegative integer solutions of A·x = λ and (generalized) vector
/// partition functions P_A(λ) and P_A(λ; φ).

#include "vpf/cone.hpp"
#include "vpf/core_types.hpp"

#include <map>
#include <vector>

namespace vpf {

struct SolutionSet {
  StepMatrix matrix;
  LatticeVector target;
  /// Every x >= 0 with A·x == target, lexicographically sorted, no duplicates.
  std::vector<LatticeVector> solutions;
};

/// Backtracking over x_1..x_N. The residual r = λ - Σ_{k<j} x_k α^k is pruned
/// by x_j * deg_j <= <ell, r> and rejected once <ell, r> < 0.
SolutionSet enumerate_solutions(const StepMatrix& matrix, const ConeCertificate& cert,
                                const LatticeVector& lambda);

/// P_A(λ): the number of solutions.
Scalar vector_partition(const StepMatrix& matrix, const ConeCertificate& cert, const LatticeVector& lambda);

/// P_A(λ; φ) = Σ_{A·x = λ, x >= 0} φ(x).
Scalar generalized_vp(const StepMatrix& matrix, const ConeCertificate& cert, const LatticeVector& lambda,
                      const WeightFunction& phi);

/// λ ↦ value, iterated in graded-lex order (ell-degree, then lexicographic).
using GradedTable = std::map<GradedKey, Scalar>;

/// P_A(λ; φ) for every λ with ell-degree <= max_degree that is reachable from
/// 0 by the steps, plus explicit zeros for the points of the integer span of
/// the columns that lie in the reachable set's bounding box and the slab
/// 0 <= <ell, λ> <= max_degree but admit no nonnegative representation.
GradedTable generalized_vp_table(const StepMatrix& matrix, const ConeCertificate& cert,
                                 const WeightFunction& phi, std::int64_t max_degree);

/// Same table built from an explicit column list; an empty list yields {0 ↦ φ()}.
/// Used for the sub-cones A_j, which may have no columns when N == 1.
GradedTable partition_table_for_columns(std::size_t ambient_dim, const std::vector<LatticeVector>& columns,
                                        const LatticeVector& ell, std::int64_t max_degree);

/// Membership in the integer span of a set of columns (Hermite-style echelon form).
class IntegerSpan {
 public:
  IntegerSpan(std::size_t ambient_dim, const std::vector<LatticeVector>& columns);
  bool contains(const LatticeVector& v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<Integer>> basis_;  // echelon columns
  std::vector<std::size_t> pivot_rows_;
};

}  // namespace vpf
