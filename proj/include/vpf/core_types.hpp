#pragma once

/// @file core_types.hpp
/// @brief Exact scalars, lattice vectors, step matrices and weight functions.
///
/// Everything in the library is exact: scalars are GMP rationals and lattice
/// coordinates are 64-bit integers. A weight function φ is a total function on
/// the nonnegative orthant Z^N_≥ that evaluates to 0 on any vector with a
/// negative coordinate.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vpf {

using Scalar = mpq_class;
using Integer = mpz_class;

/// Raised when two objects of incompatible dimension or arity meet.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// base^exponent with the formal power series convention 0^0 = 1.
Scalar power(const Scalar& base, std::uint64_t exponent);

/// Parses "p", "-p" or "p/q" into a canonical rational. Decimals are rejected.
Scalar parse_scalar(const std::string& text);

/// Canonical "p/q" form; integers keep the "/1" suffix.
std::string to_fraction_string(const Scalar& value);

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim, 0) {}
  explicit LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static LatticeVector unit(std::size_t dim, std::size_t j);
  static LatticeVector ones(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_nonnegative() const;
  bool is_zero() const;
  /// |x| = x_1 + ... + x_dim.
  std::int64_t total() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, LatticeVector a);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::int64_t dot(const LatticeVector& a, const LatticeVector& b);

/// "(1,2,3)": the compact form used by series rendering.
std::string to_string(const LatticeVector& v);
/// "(1, 2, 3)": the spaced form used for human-facing vectors.
std::string to_spaced_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Sort key for graded-lex order: first by degree, then lexicographically.
struct GradedKey {
  std::int64_t degree = 0;
  LatticeVector exponent;

  friend bool operator==(const GradedKey&, const GradedKey&) = default;
  friend auto operator<=>(const GradedKey&, const GradedKey&) = default;
};

/// All x ∈ Z^dim_≥ with |x| <= bound, in graded-lex order.
std::vector<LatticeVector> orthant_points(std::size_t dim, std::int64_t bound);

/// All x with 0 <= x <= corner (component-wise), in lexicographic order.
std::vector<LatticeVector> box_points(const LatticeVector& corner);

/// The n×N matrix A whose columns α^1..α^N are the allowed steps.
class StepMatrix {
 public:
  /// Columns must share a positive dimension; zero columns are rejected.
  explicit StepMatrix(std::vector<LatticeVector> columns);
  /// Row-major construction: rows.size() == n, each row of length N.
  static StepMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return columns_.front().dim(); }
  std::size_t cols() const { return columns_.size(); }
  const LatticeVector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<LatticeVector>& columns() const { return columns_; }

  /// A·x for x of dimension N.
  LatticeVector apply(const LatticeVector& x) const;
  /// α^1 + ... + α^N, i.e. A·I.
  LatticeVector column_sum() const;
  /// The columns with column j removed (may be empty when N == 1).
  std::vector<LatticeVector> columns_without(std::size_t j) const;

  friend bool operator==(const StepMatrix&, const StepMatrix&) = default;

 private:
  std::vector<LatticeVector> columns_;
};

/// N! / (x_1! ... x_N!) as an exact integer.
Integer multinomial_integer(const LatticeVector& x);
/// multinomial_integer as a Scalar; throws PreconditionError on negative input.
Scalar multinomial(const LatticeVector& x);

// Weight function variants.

/// φ ≡ 1.
struct ConstantOne {
  std::size_t arity = 1;
};

/// φ(x) = q_1^{x_1} ... q_N^{x_N}.
struct GeometricWeights {
  std::vector<Scalar> q;
};

/// φ_j(x) = (|x|!/x!) · c^{x + e^j}; j is 0-based.
struct MultinomialMonomial {
  std::vector<Scalar> c;
  std::size_t j = 0;
};

/// Number of unit-step lattice paths from 0 to x: the multinomial |x|!/x!.
struct LatticePathCount {
  std::size_t arity = 1;
};

/// Dense table on the box 0 <= x <= corner, zero elsewhere.
/// Values are row-major with the last coordinate varying fastest.
struct Table {
  LatticeVector corner;
  std::vector<Scalar> values;
};

class WeightFunction {
 public:
  using Variant = std::variant<ConstantOne, GeometricWeights, MultinomialMonomial, LatticePathCount, Table>;

  WeightFunction(ConstantOne w);
  WeightFunction(GeometricWeights w);
  WeightFunction(MultinomialMonomial w);
  WeightFunction(LatticePathCount w);
  WeightFunction(Table w);

  /// Tabulates f over the box [0, corner].
  static WeightFunction tabulate(const LatticeVector& corner,
                                 const std::function<Scalar(const LatticeVector&)>& f);

  std::size_t arity() const { return arity_; }
  const Variant& variant() const { return variant_; }

  /// Exact φ(x); 0 whenever x has a negative coordinate.
  Scalar operator()(const LatticeVector& x) const;

 private:
  Variant variant_;
  std::size_t arity_;
};

Scalar evaluate_weight(const WeightFunction& phi, const LatticeVector& x);

/// Human-readable variant name: "constant_one", "geometric", ...
std::string weight_kind(const WeightFunction& phi);

}  // namespace vpf
