#include "vpf/series.hpp"

#include <sstream>

namespace vpf {

TruncatedSeries::TruncatedSeries(LatticeVector grading, std::int64_t bound)
    : grading_(std::move(grading)), bound_(bound) {
  if (grading_.dim() == 0) {
    throw PreconditionError("series needs at least one variable");
  }
  if (bound_ < 0) {
    throw PreconditionError("series bound must be nonnegative");
  }
}

TruncatedSeries TruncatedSeries::total_degree(std::size_t nvars, std::int64_t bound) {
  return TruncatedSeries(LatticeVector::ones(nvars), bound);
}

TruncatedSeries TruncatedSeries::constant(const LatticeVector& grading, std::int64_t bound, const Scalar& value) {
  TruncatedSeries s(grading, bound);
  s.add_term(LatticeVector(grading.dim()), value);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const LatticeVector& grading, std::int64_t bound,
                                          const LatticeVector& exponent, const Scalar& value) {
  TruncatedSeries s(grading, bound);
  s.add_term(exponent, value);
  return s;
}

void TruncatedSeries::add_term(const LatticeVector& exponent, const Scalar& value) {
  if (exponent.dim() != nvars()) {
    throw DimensionError("exponent " + to_string(exponent) + " in a series of " + std::to_string(nvars()) +
                         " variables");
  }
  const std::int64_t d = degree(exponent);
  if (d < 0) {
    throw PreconditionError("exponent " + to_string(exponent) + " has negative degree");
  }
  if (d > bound_ || value == 0) {
    return;
  }
  GradedKey key{d, exponent};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), value);
    return;
  }
  it->second += value;
  if (it->second == 0) {
    terms_.erase(it);
  }
}

Scalar TruncatedSeries::coefficient(const LatticeVector& exponent) const {
  if (exponent.dim() != nvars()) {
    throw DimensionError("exponent dimension mismatch");
  }
  auto it = terms_.find(GradedKey{degree(exponent), exponent});
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool TruncatedSeries::compatible_with(const TruncatedSeries& other) const {
  return grading_ == other.grading_ && bound_ == other.bound_;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other, const char* op) const {
  if (!compatible_with(other)) {
    throw IncompatibleSeries(std::string(op) + ": series differ in variables, grading or bound (" +
                             to_string(grading_) + "/" + std::to_string(bound_) + " vs " +
                             to_string(other.grading_) + "/" + std::to_string(other.bound_) + ")");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other, "series_add");
  for (const auto& [key, value] : other.terms_) {
    add_term(key.exponent, value);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_compatible(other, "series_sub");
  for (const auto& [key, value] : other.terms_) {
    add_term(key.exponent, -value);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, value] : terms_) {
    value *= k;
  }
  return *this;
}

TruncatedSeries series_add(const TruncatedSeries& s, const TruncatedSeries& t) {
  TruncatedSeries out = s;
  return out += t;
}

TruncatedSeries series_sub(const TruncatedSeries& s, const TruncatedSeries& t) {
  TruncatedSeries out = s;
  return out -= t;
}

TruncatedSeries series_scale(const TruncatedSeries& s, const Scalar& k) {
  TruncatedSeries out = s;
  return out *= k;
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (!s.compatible_with(t)) {
    throw IncompatibleSeries("series_mul: series differ in variables, grading or bound");
  }
  TruncatedSeries out(s.grading(), s.bound());
  for (const auto& [ks, vs] : s.terms()) {
    for (const auto& [kt, vt] : t.terms()) {
      if (ks.degree + kt.degree > s.bound()) {
        break;  // t's terms are in increasing degree
      }
      out.add_term(ks.exponent + kt.exponent, vs * vt);
    }
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  const LatticeVector zero(s.nvars());
  const Scalar c0 = s.coefficient(zero);
  if (c0 == 0) {
    throw PreconditionError("series_inverse: constant term is zero");
  }
  for (const auto& [key, value] : s.terms()) {
    if (key.degree == 0 && !key.exponent.is_zero()) {
      throw PreconditionError("series_inverse: nonconstant term of degree zero " + to_string(key.exponent));
    }
  }
  // G·s = 1: G(e) = (δ_{e,0} - Σ_{f != 0} s(f) G(e - f)) / s(0). Contributions
  // are pushed forward into `pending` in increasing degree order.
  TruncatedSeries::TermMap pending;
  pending.emplace(GradedKey{0, zero}, Scalar(1));
  TruncatedSeries out(s.grading(), s.bound());
  for (auto it = pending.begin(); it != pending.end(); ++it) {
    const Scalar g = it->second / c0;
    if (g == 0) {
      continue;
    }
    out.add_term(it->first.exponent, g);
    for (const auto& [key, value] : s.terms()) {
      if (key.degree == 0) {
        continue;
      }
      const std::int64_t d = it->first.degree + key.degree;
      if (d > s.bound()) {
        break;
      }
      pending[GradedKey{d, it->first.exponent + key.exponent}] -= value * g;
    }
  }
  return out;
}

TruncatedSeries project(const TruncatedSeries& s, std::size_t j) {
  if (j >= s.nvars()) {
    throw DimensionError("projection index " + std::to_string(j) + " out of range for " +
                         std::to_string(s.nvars()) + " variables");
  }
  TruncatedSeries out(s.grading(), s.bound());
  for (const auto& [key, value] : s.terms()) {
    if (key.exponent[j] == 0) {
      out.add_term(key.exponent, value);
    }
  }
  return out;
}

TruncatedSeries project_set(const TruncatedSeries& s, std::span<const std::size_t> indices) {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= s.nvars() || (k > 0 && indices[k] <= indices[k - 1])) {
      throw PreconditionError("projection index set must be strictly increasing and within range");
    }
  }
  TruncatedSeries out = s;
  // π_{j1} ∘ ... ∘ π_{jk}: innermost first.
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    out = project(out, *it);
  }
  return out;
}

namespace {

TruncatedSeries signed_subset_sum(const TruncatedSeries& s, std::size_t excluded) {
  const std::size_t n = s.nvars();
  if (n >= 8 * sizeof(unsigned long)) {
    throw PreconditionError("too many variables for the subset expansion");
  }
  TruncatedSeries out(s.grading(), s.bound());
  std::vector<std::size_t> subset;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (excluded < n && (mask >> excluded) & 1UL) {
      continue;
    }
    subset.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1UL) {
        subset.push_back(j);
      }
    }
    const TruncatedSeries term = project_set(s, subset);
    if (subset.size() % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

}  // namespace

TruncatedSeries pi_operator(const TruncatedSeries& s) { return signed_subset_sum(s, s.nvars()); }

TruncatedSeries pi_operator_filtered(const TruncatedSeries& s) {
  TruncatedSeries out(s.grading(), s.bound());
  for (const auto& [key, value] : s.terms()) {
    bool keep = true;
    for (std::int64_t v : key.exponent) {
      keep = keep && v != 0;
    }
    if (keep) {
      out.add_term(key.exponent, value);
    }
  }
  return out;
}

TruncatedSeries pi_operator_excluding(const TruncatedSeries& s, std::size_t j) {
  if (j >= s.nvars()) {
    throw DimensionError("index out of range");
  }
  return signed_subset_sum(s, j);
}

TruncatedSeries substitute_monomial(const TruncatedSeries& s, const StepMatrix& matrix, const ConeCertificate& cert,
                                    std::int64_t out_bound) {
  if (s.nvars() != matrix.cols()) {
    throw DimensionError("substitution: series has " + std::to_string(s.nvars()) + " variables, matrix has " +
                         std::to_string(matrix.cols()) + " columns");
  }
  if (out_bound > s.bound()) {
    throw PreconditionError("substitution: input bound " + std::to_string(s.bound()) +
                            " is below the requested output bound " + std::to_string(out_bound));
  }
  for (std::size_t j = 0; j < s.nvars(); ++j) {
    if (s.grading()[j] > cert.step_degrees()[j]) {
      throw PreconditionError("substitution: input grading exceeds the step degree of column " +
                              std::to_string(j + 1) + "; truncation would drop needed terms");
    }
  }
  TruncatedSeries out(cert.ell(), out_bound);
  for (const auto& [key, value] : s.terms()) {
    out.add_term(matrix.apply(key.exponent), value);
  }
  return out;
}

TruncatedSeries geometric_inverse(const StepMatrix& matrix, const ConeCertificate& cert, std::int64_t max_degree) {
  TruncatedSeries::TermMap counts;
  const LatticeVector zero(matrix.rows());
  counts.emplace(GradedKey{0, zero}, Scalar(1));
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const std::int64_t d = it->first.degree + cert.step_degrees()[j];
      if (d <= max_degree) {
        counts[GradedKey{d, it->first.exponent + matrix.column(j)}] += it->second;
      }
    }
  }
  TruncatedSeries out(cert.ell(), max_degree);
  for (const auto& [key, value] : counts) {
    out.add_term(key.exponent, value);
  }
  return out;
}

TruncatedSeries weight_series(const WeightFunction& phi, std::size_t nvars, std::int64_t max_degree) {
  if (phi.arity() != nvars) {
    throw DimensionError("weight arity does not match the number of series variables");
  }
  TruncatedSeries out = TruncatedSeries::total_degree(nvars, max_degree);
  for (const auto& x : orthant_points(nvars, max_degree)) {
    out.add_term(x, phi(x));
  }
  return out;
}

TruncatedSeries one_minus_linear(std::span<const Scalar> c, std::int64_t bound) {
  TruncatedSeries out = TruncatedSeries::constant(LatticeVector::ones(c.size()), bound, 1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    out.add_term(LatticeVector::unit(c.size(), j), -c[j]);
  }
  return out;
}

std::string render(const TruncatedSeries& s) {
  std::ostringstream os;
  for (const auto& [key, value] : s.terms()) {
    os << to_string(key.exponent) << " : " << to_fraction_string(value) << '\n';
  }
  return os.str();
}

}  // namespace vpf
