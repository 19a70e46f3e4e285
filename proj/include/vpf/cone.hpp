#pragma once

/// @file cone.hpp
/// @brief Pointedness certificates for the cone spanned by the step columns.
///
/// A cone K = cone(α^1, ..., α^N) is pointed iff some integer functional ell
/// satisfies <ell, α^j> >= 1 for every column. That functional grades every
/// lattice point of K, and since each step raises the grade by at least one,
/// all sums over solutions of A·x = λ are finite.

#include "vpf/core_types.hpp"

#include <stdexcept>
#include <vector>

namespace vpf {

class ConeCertificate {
 public:
  /// Validates <ell, α^j> >= 1 for every column and derives the step degrees.
  ConeCertificate(const StepMatrix& matrix, LatticeVector ell);
  /// Same check for an explicit column list (used for sub-cones A_j).
  ConeCertificate(const std::vector<LatticeVector>& columns, LatticeVector ell);

  const LatticeVector& ell() const { return ell_; }
  /// step_degrees()[j] == <ell, α^j> >= 1.
  const std::vector<std::int64_t>& step_degrees() const { return step_degrees_; }

 private:
  LatticeVector ell_;
  std::vector<std::int64_t> step_degrees_;
};

/// The cone contains a line. combination() holds integer weights w >= 0, not
/// all zero, with Σ_j w_j α^j = 0.
class NotPointed : public std::runtime_error {
 public:
  explicit NotPointed(std::vector<std::int64_t> combination);
  const std::vector<std::int64_t>& combination() const { return combination_; }

 private:
  std::vector<std::int64_t> combination_;
};

/// Deterministic: solves min Σ_j <y, α^j> s.t. <y, α^j> >= 1 exactly with
/// Bland's rule, then scales y to a primitive integer vector. The result is
/// canonical for a given A but not promised to be minimal in any norm.
ConeCertificate certify_pointed(const StepMatrix& matrix);

/// <ell, λ>.
std::int64_t ell_degree(const ConeCertificate& cert, const LatticeVector& lambda);

namespace detail {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Scalar> x;
  Scalar objective;
};

/// min cost·x subject to rows·x = rhs, x >= 0. Two-phase simplex over exact
/// rationals, smallest-index (Bland) entering and leaving rules.
LpResult solve_standard_lp(const std::vector<std::vector<Scalar>>& rows, const std::vector<Scalar>& rhs,
                           const std::vector<Scalar>& cost);

/// Multiplies by the common denominator and divides by the content.
std::vector<std::int64_t> primitive_integer_vector(const std::vector<Scalar>& v);

}  // namespace detail

}  // namespace vpf
