#pragma once

/// @file series.hpp
/// @brief Sparse truncated multivariate power series with exact coefficients.
///
/// A series carries a grading vector g and a bound D; it stores exactly the
/// terms c·v^e with 0 <= <g, e> <= D and c != 0. Series in the step variables
/// ξ use g = (1, ..., 1) (total degree). After the substitution ξ = z^A the
/// grading is the cone functional ell, and exponents are lattice points of the
/// cone, which may have negative coordinates when A does.
///
/// Variable and projection indices are 0-based.

#include "vpf/cone.hpp"
#include "vpf/core_types.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace vpf {

class IncompatibleSeries : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TruncatedSeries {
 public:
  using TermMap = std::map<GradedKey, Scalar>;

  TruncatedSeries(LatticeVector grading, std::int64_t bound);

  /// Zero series in `nvars` variables graded by total degree.
  static TruncatedSeries total_degree(std::size_t nvars, std::int64_t bound);
  /// The constant `value` (empty if zero).
  static TruncatedSeries constant(const LatticeVector& grading, std::int64_t bound, const Scalar& value);
  /// A single term value·v^exponent (dropped when beyond the bound).
  static TruncatedSeries monomial(const LatticeVector& grading, std::int64_t bound, const LatticeVector& exponent,
                                  const Scalar& value = 1);

  std::size_t nvars() const { return grading_.dim(); }
  const LatticeVector& grading() const { return grading_; }
  std::int64_t bound() const { return bound_; }
  std::int64_t degree(const LatticeVector& exponent) const { return dot(grading_, exponent); }

  /// Adds value to the coefficient of v^exponent. Terms with degree above the
  /// bound are discarded (truncation); negative degree is an error.
  void add_term(const LatticeVector& exponent, const Scalar& value);
  Scalar coefficient(const LatticeVector& exponent) const;

  /// Terms in graded-lex order, never containing zeros.
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool compatible_with(const TruncatedSeries& other) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Scalar& k);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_compatible(const TruncatedSeries& other, const char* op) const;

  LatticeVector grading_;
  std::int64_t bound_;
  TermMap terms_;
};

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries series_scale(const TruncatedSeries& s, const Scalar& k);
/// Cauchy product truncated to the common bound.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

inline TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) { return series_add(s, t); }
inline TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) { return series_sub(s, t); }
inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) { return series_mul(s, t); }
inline TruncatedSeries operator*(const Scalar& k, const TruncatedSeries& s) { return series_scale(s, k); }

/// Multiplicative inverse of a series with nonzero constant term, by graded
/// recursion. Every other term must have positive degree.
TruncatedSeries series_inverse(const TruncatedSeries& s);

/// π_j: keeps the terms whose exponent has coordinate j equal to zero.
TruncatedSeries project(const TruncatedSeries& s, std::size_t j);

/// π_J = π_{j1} ∘ ... ∘ π_{jk} for strictly increasing J; π_∅ is the identity.
TruncatedSeries project_set(const TruncatedSeries& s, std::span<const std::size_t> indices);

/// Π = Σ_{J ⊆ {0..N-1}} (-1)^{#J} π_J, evaluated as the signed sum over all subsets.
TruncatedSeries pi_operator(const TruncatedSeries& s);

/// Π = (1 - π_1)···(1 - π_N) evaluated by support filtering: keeps the terms
/// whose exponent has no zero coordinate (for orthant series, exponents >= I).
TruncatedSeries pi_operator_filtered(const TruncatedSeries& s);

/// Π_j = Π_{k != j} (1 - π_k), as a signed sum over subsets avoiding j.
TruncatedSeries pi_operator_excluding(const TruncatedSeries& s, std::size_t j);

/// ξ^x ↦ z^{A·x}. The output is graded by cert.ell() and truncated at
/// out_bound. Exactness requires every x with <ell, A·x> <= out_bound to be
/// present in s, which holds when out_bound <= s.bound() and s's grading is
/// bounded by the step degrees; otherwise PreconditionError is thrown.
TruncatedSeries substitute_monomial(const TruncatedSeries& s, const StepMatrix& matrix, const ConeCertificate& cert,
                                    std::int64_t out_bound);

/// 1 / (1 - z^{α^1} - ... - z^{α^N}) up to ell-degree max_degree:
/// G(0) = 1, G(λ) = Σ_j G(λ - α^j).
TruncatedSeries geometric_inverse(const StepMatrix& matrix, const ConeCertificate& cert, std::int64_t max_degree);

/// Φ(ξ) = Σ_{|x| <= max_degree} φ(x) ξ^x.
TruncatedSeries weight_series(const WeightFunction& phi, std::size_t nvars, std::int64_t max_degree);

/// 1 - <c, ξ> in total-degree grading.
TruncatedSeries one_minus_linear(std::span<const Scalar> c, std::int64_t bound);

/// One line per term, "exponent : numerator/denominator", graded-lex order.
std::string render(const TruncatedSeries& s);

}  // namespace vpf
