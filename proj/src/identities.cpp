#include "vpf/identities.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace vpf {

namespace {

// Records one coefficient comparison into the report.
void record(VerificationReport& report, const std::string& location, const Scalar& lhs, const Scalar& rhs) {
  ++report.checked_terms;
  if (lhs == rhs) {
    return;
  }
  ++report.residual_terms;
  report.holds = false;
  if (!report.first_violation) {
    report.first_violation = Violation{location, lhs, rhs};
  }
}

// Coefficient-wise comparison over the union of both supports, graded-lex order.
void compare_tables(VerificationReport& report, const std::map<GradedKey, Scalar>& lhs,
                    const std::map<GradedKey, Scalar>& rhs, const std::string& prefix = "") {
  auto a = lhs.begin();
  auto b = rhs.begin();
  const Scalar zero = 0;
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && a->first < b->first)) {
      record(report, prefix + to_string(a->first.exponent), a->second, zero);
      ++a;
    } else if (a == lhs.end() || b->first < a->first) {
      record(report, prefix + to_string(b->first.exponent), zero, b->second);
      ++b;
    } else {
      record(report, prefix + to_string(a->first.exponent), a->second, b->second);
      ++a;
      ++b;
    }
  }
}

void require_sum_one(const std::vector<Scalar>& c) {
  const Scalar sum = std::accumulate(c.begin(), c.end(), Scalar(0));
  if (sum != 1) {
    throw PreconditionError("coefficients must sum to 1, got " + sum.get_str());
  }
}

void require_arity(const WeightFunction& phi, std::size_t n, const char* where) {
  if (phi.arity() != n) {
    throw DimensionError(std::string(where) + ": weight arity " + std::to_string(phi.arity()) + " but " +
                         std::to_string(n) + " steps");
  }
}

VerificationReport new_report(std::string identity, std::string window) {
  VerificationReport report;
  report.identity = std::move(identity);
  report.window = std::move(window);
  return report;
}

std::string degree_window(std::int64_t max_degree) { return "ell-degree <= " + std::to_string(max_degree); }

Scalar monomial(const std::vector<Scalar>& c, const LatticeVector& x) {
  Scalar out = 1;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out *= power(c[i], static_cast<std::uint64_t>(x[i]));
  }
  return out;
}

}  // namespace

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  if (report.holds) {
    os << "holds: " << report.identity << " on " << report.window << " (" << report.checked_terms
       << " coefficients)";
  } else {
    os << "violated: " << report.identity << " on " << report.window << " (" << report.residual_terms << " of "
       << report.checked_terms << " coefficients differ)";
    if (report.first_violation) {
      os << "\nfirst violation at " << report.first_violation->location
         << ": lhs = " << report.first_violation->lhs.get_str()
         << ", rhs = " << report.first_violation->rhs.get_str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Operators on weight functions

WeightFunction shift_apply(const WeightFunction& phi, const LatticeVector& mu, const LatticeVector& corner) {
  if (mu.dim() != phi.arity() || corner.dim() != phi.arity()) {
    throw DimensionError("shift: arity mismatch");
  }
  return WeightFunction::tabulate(corner, [&](const LatticeVector& x) { return phi(x + mu); });
}

WeightFunction q_delta_apply(const WeightFunction& phi, const std::vector<Scalar>& c, const LatticeVector& corner) {
  const std::size_t n = phi.arity();
  if (c.size() != n) {
    throw DimensionError("Q(delta): " + std::to_string(c.size()) + " coefficients for arity " + std::to_string(n));
  }
  const LatticeVector ones = LatticeVector::ones(n);
  Table result = std::get<Table>(shift_apply(phi, ones, corner).variant());
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] == 0) {
      continue;
    }
    const auto shifted = shift_apply(phi, ones - LatticeVector::unit(n, j), corner);
    const auto& values = std::get<Table>(shifted.variant()).values;
    for (std::size_t k = 0; k < values.size(); ++k) {
      result.values[k] -= c[j] * values[k];
    }
  }
  return WeightFunction(std::move(result));
}

// ---------------------------------------------------------------------------
// Verifiers

VerificationReport verify_theorem1(const StepMatrix& matrix, const ConeCertificate& cert, const WeightFunction& phi,
                                   const std::vector<Scalar>& c, std::int64_t max_degree) {
  const std::size_t big_n = matrix.cols();
  require_arity(phi, big_n, "theorem1");
  if (c.size() != big_n) {
    throw DimensionError("theorem1: c has " + std::to_string(c.size()) + " entries, expected " +
                         std::to_string(big_n));
  }
  if (max_degree < 0) {
    throw PreconditionError("theorem1: degree bound must be nonnegative");
  }
  VerificationReport report = new_report("generating series identity", degree_window(max_degree));

  // Left side: series pipeline in ξ, then ξ = z^A.
  const TruncatedSeries product = one_minus_linear(c, max_degree) * weight_series(phi, big_n, max_degree);
  const TruncatedSeries lhs = substitute_monomial(pi_operator(product), matrix, cert, max_degree);

  // Right side: weighted enumeration of Q(δ)φ, shifted by A·I.
  const LatticeVector shift = matrix.column_sum();
  const std::int64_t shift_degree = ell_degree(cert, shift);
  std::map<GradedKey, Scalar> rhs;
  if (max_degree >= shift_degree) {
    const auto q_phi = q_delta_apply(phi, c, max_degree * LatticeVector::ones(big_n));
    for (const auto& [key, value] : generalized_vp_table(matrix, cert, q_phi, max_degree - shift_degree)) {
      rhs.emplace(GradedKey{key.degree + shift_degree, key.exponent + shift}, value);
    }
  }
  compare_tables(report, lhs.terms(), rhs);
  return report;
}

VerificationReport verify_basic_recurrence(const WeightFunction& phi, std::size_t nvars, std::int64_t max_degree,
                                           RecurrenceDomain domain) {
  require_arity(phi, nvars, "basic recurrence");
  VerificationReport report = new_report("basic recurrence phi(x) = sum_j phi(x - e^j)",
                            std::string(domain == RecurrenceDomain::Interior ? "x >= I" : "x >= 0, x != 0") +
                                ", |x| <= " + std::to_string(max_degree));
  for (const auto& x : orthant_points(nvars, max_degree)) {
    if (domain == RecurrenceDomain::Interior ? !(x - LatticeVector::ones(nvars)).is_nonnegative() : x.is_zero()) {
      continue;
    }
    Scalar rhs = 0;
    for (std::size_t j = 0; j < nvars; ++j) {
      rhs += phi(x - LatticeVector::unit(nvars, j));
    }
    record(report, to_string(x), phi(x), rhs);
  }
  return report;
}

VerificationReport verify_prop1(const StepMatrix& matrix, const ConeCertificate& cert, const WeightFunction& phi,
                                std::int64_t max_degree) {
  require_arity(phi, matrix.cols(), "difference equation");
  const auto pre = verify_basic_recurrence(phi, matrix.cols(), max_degree, RecurrenceDomain::Punctured);
  if (!pre.holds) {
    throw PreconditionError("difference equation: weight does not solve the basic recurrence (" + to_text(pre) + ")");
  }
  VerificationReport report = new_report("P(lambda) = sum_j P(lambda - alpha^j)", degree_window(max_degree) + ", lambda != 0");
  for (const auto& [key, value] : generalized_vp_table(matrix, cert, phi, max_degree)) {
    if (key.exponent.is_zero()) {
      continue;
    }
    Scalar rhs = 0;
    for (const auto& alpha : matrix.columns()) {
      rhs += generalized_vp(matrix, cert, key.exponent - alpha, phi);
    }
    record(report, to_string(key.exponent), value, rhs);
  }
  return report;
}

GradedTable count_paths_bruteforce(const StepMatrix& matrix, const ConeCertificate& cert, std::int64_t max_degree) {
  GradedTable counts;
  std::function<void(const LatticeVector&, std::int64_t)> walk = [&](const LatticeVector& at, std::int64_t degree) {
    counts[GradedKey{degree, at}] += 1;
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const std::int64_t next = degree + cert.step_degrees()[j];
      if (next <= max_degree) {
        walk(at + matrix.column(j), next);
      }
    }
  };
  if (max_degree >= 0) {
    walk(LatticeVector(matrix.rows()), 0);
  }
  return counts;
}

VerificationReport verify_prop2(const StepMatrix& matrix, const ConeCertificate& cert, std::int64_t max_degree) {
  VerificationReport report = new_report("generalized lattice path generating function", degree_window(max_degree));
  const auto weighted = generalized_vp_table(matrix, cert, LatticePathCount{matrix.cols()}, max_degree);
  const auto inverse = geometric_inverse(matrix, cert, max_degree);
  compare_tables(report, weighted, inverse.terms(), "partition vs series at ");
  compare_tables(report, inverse.terms(), count_paths_bruteforce(matrix, cert, max_degree), "series vs paths at ");
  return report;
}

std::map<TermKey, Scalar> prop3_terms(const StepMatrix& matrix, const ConeCertificate& cert,
                                      const std::vector<Scalar>& c, const LatticeVector& mu) {
  if (c.size() != matrix.cols()) {
    throw DimensionError("c has " + std::to_string(c.size()) + " entries, expected " + std::to_string(matrix.cols()));
  }
  if (mu.dim() != matrix.rows()) {
    throw DimensionError("mu has dimension " + std::to_string(mu.dim()) + ", expected " +
                         std::to_string(matrix.rows()));
  }
  std::map<TermKey, Scalar> terms;
  const std::int64_t budget = ell_degree(cert, mu);
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    const WeightFunction phi_j(MultinomialMonomial{c, j});
    const auto sub_counts = partition_table_for_columns(matrix.rows(), matrix.columns_without(j), cert.ell(), budget);
    for (const auto& [key, count] : sub_counts) {
      if (count == 0) {
        continue;
      }
      const Scalar term = count * generalized_vp(matrix, cert, mu - key.exponent, phi_j);
      if (term != 0) {
        terms.emplace(TermKey{j, key.exponent}, term);
      }
    }
  }
  return terms;
}

VerificationReport verify_prop3(const StepMatrix& matrix, const ConeCertificate& cert, const std::vector<Scalar>& c,
                                const LatticeVector& mu) {
  require_sum_one(c);
  VerificationReport report = new_report("vector partition Chaundy-Bullard identity", "mu = " + to_string(mu));
  Scalar lhs = 0;
  for (const auto& [key, term] : prop3_terms(matrix, cert, c, mu)) {
    lhs += term;
  }
  record(report, to_string(mu), lhs, vector_partition(matrix, cert, mu));
  return report;
}

std::map<TermKey, Scalar> cb_multidim_terms(const std::vector<Scalar>& c, const LatticeVector& mu) {
  if (c.size() != mu.dim() || c.empty()) {
    throw DimensionError("c and mu must have the same positive length");
  }
  if (!mu.is_nonnegative()) {
    throw PreconditionError("mu must be nonnegative: " + to_string(mu));
  }
  std::map<TermKey, Scalar> terms;
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& nu : box_points(mu)) {
      if (nu[j] != 0) {
        continue;
      }
      const LatticeVector rest = mu - nu;
      const Scalar term = multinomial(rest) * monomial(c, rest + LatticeVector::unit(n, j));
      if (term != 0) {
        terms.emplace(TermKey{j, nu}, term);
      }
    }
  }
  return terms;
}

VerificationReport verify_cb_multidim(const std::vector<Scalar>& c, const LatticeVector& mu) {
  require_sum_one(c);
  VerificationReport report = new_report("multidimensional Chaundy-Bullard identity", "mu = " + to_string(mu));
  Scalar sum = 0;
  for (const auto& [key, term] : cb_multidim_terms(c, mu)) {
    sum += term;
  }
  record(report, to_string(mu), sum, Scalar(1));
  return report;
}

VerificationReport verify_cb_1d(const Scalar& c1, const Scalar& c2, std::int64_t mu1, std::int64_t mu2) {
  if (c1 + c2 != 1) {
    throw PreconditionError("c1 + c2 must equal 1");
  }
  if (mu1 < 0 || mu2 < 0) {
    throw PreconditionError("mu1 and mu2 must be nonnegative");
  }
  VerificationReport report = new_report("Chaundy-Bullard identity",
                            "mu = (" + std::to_string(mu1) + "," + std::to_string(mu2) + ")");
  const auto binom = [](std::int64_t top, std::int64_t k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    return Scalar(b);
  };
  const auto half = [&](const Scalar& a, const Scalar& b, std::int64_t ma, std::int64_t mb) -> Scalar {
    Scalar sum = 0;
    for (std::int64_t nu = 0; nu <= ma; ++nu) {
      sum += binom(ma + mb - nu, ma - nu) * power(a, static_cast<std::uint64_t>(ma - nu));
    }
    return power(b, static_cast<std::uint64_t>(mb + 1)) * sum;
  };
  const Scalar total = half(c1, c2, mu1, mu2) + half(c2, c1, mu2, mu1);
  record(report, report.window.substr(5), total, Scalar(1));
  return report;
}

}  // namespace vpf
