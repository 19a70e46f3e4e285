#pragma once

/// @file identities.hpp
/// @brief Shift operators on weight functions and exact verifiers for the
/// summation identities of generalized vector partition functions.
///
/// Each verifier recomputes both sides along independent code paths (series
/// pipeline against direct enumeration, or two different enumerations) and
/// compares them coefficient by coefficient. A report only ever speaks for
/// the window it names.

#include "vpf/cone.hpp"
#include "vpf/core_types.hpp"
#include "vpf/enumeration.hpp"
#include "vpf/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vpf {

struct Violation {
  std::string location;
  Scalar lhs;
  Scalar rhs;
};

struct VerificationReport {
  std::string identity;
  std::string window;
  bool holds = true;
  std::optional<Violation> first_violation;
  std::size_t residual_terms = 0;
  std::size_t checked_terms = 0;
};

/// "holds <identity> on <window> (<k> coefficients)" or a violation line.
std::string to_text(const VerificationReport& report);

/// δ^μ φ : x ↦ φ(x + μ), tabulated on the box [0, corner].
WeightFunction shift_apply(const WeightFunction& phi, const LatticeVector& mu, const LatticeVector& corner);

/// Q(δ)φ : x ↦ φ(x + I) - Σ_j c_j φ(x + I - e^j), tabulated on [0, corner].
WeightFunction q_delta_apply(const WeightFunction& phi, const std::vector<Scalar>& c, const LatticeVector& corner);

/// Multidimensional analogue of (1 - ξ)Φ(ξ) - Φ(0) = Σ (φ(x) - φ(x-1)) ξ^x:
///
///   LHS = [Π((1 - <c,ξ>)Φ(ξ))]_{ξ = z^A}
///   RHS = Σ_λ P_A(λ; Q(δ)φ) z^{λ + A·I}
///
/// checked coefficient-wise for ell-degree <= max_degree. The shift by A·I is
/// forced: Π keeps only exponents x >= I, and A·x = A·(x - I) + A·I.
VerificationReport verify_theorem1(const StepMatrix& matrix, const ConeCertificate& cert, const WeightFunction& phi,
                                   const std::vector<Scalar>& c, std::int64_t max_degree);

/// Where the recurrence φ(x) = Σ_j φ(x - e^j) is checked.
enum class RecurrenceDomain {
  Interior,   ///< x >= I
  Punctured,  ///< x >= 0, x != 0 (the unit-seeded solution)
};

/// φ(x) - Σ_j φ(x - e^j) == 0 for all x in the domain with |x| <= max_degree.
VerificationReport verify_basic_recurrence(const WeightFunction& phi, std::size_t nvars, std::int64_t max_degree,
                                           RecurrenceDomain domain = RecurrenceDomain::Interior);

/// P_A(λ; φ) - Σ_j P_A(λ - α^j; φ) == 0 for every λ != 0 in the cone with
/// ell-degree <= max_degree. φ must satisfy the recurrence on every nonzero
/// x >= 0 with |x| <= max_degree; otherwise PreconditionError is thrown.
VerificationReport verify_prop1(const StepMatrix& matrix, const ConeCertificate& cert, const WeightFunction& phi,
                                std::int64_t max_degree);

/// Number of step sequences from 0 to each λ with ell-degree <= max_degree,
/// by exhaustive depth-first search over sequences.
GradedTable count_paths_bruteforce(const StepMatrix& matrix, const ConeCertificate& cert, std::int64_t max_degree);

/// Σ_λ P_A(λ; LatticePathCount) z^λ == 1/(1 - Σ_j z^{α^j}), and the latter
/// matches count_paths_bruteforce, for ell-degree <= max_degree.
VerificationReport verify_prop2(const StepMatrix& matrix, const ConeCertificate& cert, std::int64_t max_degree);

/// Key (j, ν) of one term of the Chaundy–Bullard type double sum; j is 0-based.
using TermKey = std::pair<std::size_t, LatticeVector>;

/// Terms P_{A_j}(ν) · P_A(μ - ν; φ_j) with φ_j(x) = (|x|!/x!) c^{x+e^j},
/// for ν ∈ K_j with ell-degree <= <ell, μ>; zero terms omitted.
std::map<TermKey, Scalar> prop3_terms(const StepMatrix& matrix, const ConeCertificate& cert,
                                      const std::vector<Scalar>& c, const LatticeVector& mu);

/// Σ_j Σ_{ν ∈ K_j} P_{A_j}(ν) P_A(μ - ν; φ_j) == P_A(μ), requires Σ c_j = 1.
VerificationReport verify_prop3(const StepMatrix& matrix, const ConeCertificate& cert, const std::vector<Scalar>& c,
                                const LatticeVector& mu);

/// Terms ((|μ|-|ν|)!/(μ-ν)!) c^{μ-ν+e^j} for 0 <= ν <= μ, ν_j = 0; zero terms omitted.
std::map<TermKey, Scalar> cb_multidim_terms(const std::vector<Scalar>& c, const LatticeVector& mu);

/// Σ of cb_multidim_terms == 1, requires Σ c_j = 1 and μ >= 0.
VerificationReport verify_cb_multidim(const std::vector<Scalar>& c, const LatticeVector& mu);

/// c2^{μ2+1} Σ_{ν1} C(μ1+μ2-ν1, μ1-ν1) c1^{μ1-ν1}
///   + c1^{μ1+1} Σ_{ν2} C(μ1+μ2-ν2, μ2-ν2) c2^{μ2-ν2} == 1, requires c1 + c2 = 1.
VerificationReport verify_cb_1d(const Scalar& c1, const Scalar& c2, std::int64_t mu1, std::int64_t mu2);

}  // namespace vpf
