#include "vpf/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace vpf {

namespace {

void require_target_dim(const StepMatrix& matrix, const LatticeVector& lambda) {
  if (lambda.dim() != matrix.rows()) {
    throw DimensionError("target " + to_string(lambda) + " has dimension " + std::to_string(lambda.dim()) +
                         ", matrix has " + std::to_string(matrix.rows()) + " rows");
  }
}

void require_cert(const std::vector<LatticeVector>& columns, const ConeCertificate& cert) {
  if (cert.step_degrees().size() != columns.size() ||
      (!columns.empty() && cert.ell().dim() != columns.front().dim())) {
    throw DimensionError("certificate does not match the step matrix");
  }
}

// Calls visit(x) for every x >= 0 with A·x == lambda, in lexicographic order.
void for_each_solution(const std::vector<LatticeVector>& columns, const std::vector<std::int64_t>& degrees,
                       const LatticeVector& ell, const LatticeVector& lambda,
                       const std::function<void(const LatticeVector&)>& visit) {
  const std::size_t big_n = columns.size();
  LatticeVector x(big_n);
  std::function<void(std::size_t, const LatticeVector&)> rec = [&](std::size_t j, const LatticeVector& residual) {
    if (j == big_n) {
      if (residual.is_zero()) {
        visit(x);
      }
      return;
    }
    const std::int64_t budget = dot(ell, residual);
    if (budget < 0) {
      return;
    }
    LatticeVector r = residual;
    for (std::int64_t v = 0; v * degrees[j] <= budget; ++v) {
      x[j] = v;
      rec(j + 1, r);
      r -= columns[j];
    }
    x[j] = 0;
  };
  rec(0, lambda);
}

// Calls visit(x) for every x >= 0 with Σ_j x_j deg_j <= max_degree.
void for_each_bounded_x(const std::vector<std::int64_t>& degrees, std::int64_t max_degree,
                        const std::function<void(const LatticeVector&)>& visit) {
  LatticeVector x(degrees.size());
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
    if (j == degrees.size()) {
      visit(x);
      return;
    }
    for (std::int64_t v = 0; v * degrees[j] <= left; ++v) {
      x[j] = v;
      rec(j + 1, left - v * degrees[j]);
    }
    x[j] = 0;
  };
  if (max_degree >= 0) {
    rec(0, max_degree);
  }
}

LatticeVector combine(std::size_t ambient_dim, const std::vector<LatticeVector>& columns, const LatticeVector& x) {
  LatticeVector out(ambient_dim);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (x[j] != 0) {
      out += x[j] * columns[j];
    }
  }
  return out;
}

// Adds explicit zeros for unreachable lattice points inside the bounding box
// of the reachable set and the degree slab.
void add_slab_zeros(std::size_t ambient_dim, const std::vector<LatticeVector>& columns, const LatticeVector& ell,
                    std::int64_t max_degree, GradedTable& table) {
  if (table.empty() || columns.empty()) {
    return;
  }
  LatticeVector lo = table.begin()->first.exponent;
  LatticeVector hi = lo;
  for (const auto& [key, value] : table) {
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      lo[i] = std::min(lo[i], key.exponent[i]);
      hi[i] = std::max(hi[i], key.exponent[i]);
    }
  }
  const IntegerSpan span(ambient_dim, columns);
  for (const auto& offset : box_points(hi - lo)) {
    const LatticeVector lambda = lo + offset;
    const std::int64_t d = dot(ell, lambda);
    if (d < 0 || d > max_degree) {
      continue;
    }
    GradedKey key{d, lambda};
    if (!table.contains(key) && span.contains(lambda)) {
      table.emplace(std::move(key), Scalar(0));
    }
  }
}

}  // namespace

SolutionSet enumerate_solutions(const StepMatrix& matrix, const ConeCertificate& cert, const LatticeVector& lambda) {
  require_target_dim(matrix, lambda);
  require_cert(matrix.columns(), cert);
  SolutionSet set{matrix, lambda, {}};
  for_each_solution(matrix.columns(), cert.step_degrees(), cert.ell(), lambda,
                    [&](const LatticeVector& x) { set.solutions.push_back(x); });
  return set;
}

Scalar vector_partition(const StepMatrix& matrix, const ConeCertificate& cert, const LatticeVector& lambda) {
  return Scalar(static_cast<unsigned long>(enumerate_solutions(matrix, cert, lambda).solutions.size()));
}

Scalar generalized_vp(const StepMatrix& matrix, const ConeCertificate& cert, const LatticeVector& lambda,
                      const WeightFunction& phi) {
  if (phi.arity() != matrix.cols()) {
    throw DimensionError("weight arity " + std::to_string(phi.arity()) + " does not match " +
                         std::to_string(matrix.cols()) + " steps");
  }
  require_target_dim(matrix, lambda);
  require_cert(matrix.columns(), cert);
  Scalar sum = 0;
  for_each_solution(matrix.columns(), cert.step_degrees(), cert.ell(), lambda,
                    [&](const LatticeVector& x) { sum += phi(x); });
  return sum;
}

GradedTable generalized_vp_table(const StepMatrix& matrix, const ConeCertificate& cert, const WeightFunction& phi,
                                 std::int64_t max_degree) {
  if (phi.arity() != matrix.cols()) {
    throw DimensionError("weight arity " + std::to_string(phi.arity()) + " does not match " +
                         std::to_string(matrix.cols()) + " steps");
  }
  require_cert(matrix.columns(), cert);
  GradedTable table;
  for_each_bounded_x(cert.step_degrees(), max_degree, [&](const LatticeVector& x) {
    LatticeVector lambda = matrix.apply(x);
    const std::int64_t d = dot(cert.ell(), lambda);
    table[GradedKey{d, std::move(lambda)}] += phi(x);
  });
  add_slab_zeros(matrix.rows(), matrix.columns(), cert.ell(), max_degree, table);
  return table;
}

GradedTable partition_table_for_columns(std::size_t ambient_dim, const std::vector<LatticeVector>& columns,
                                        const LatticeVector& ell, std::int64_t max_degree) {
  GradedTable table;
  if (max_degree < 0) {
    return table;
  }
  if (columns.empty()) {
    table.emplace(GradedKey{0, LatticeVector(ambient_dim)}, Scalar(1));
    return table;
  }
  const ConeCertificate cert(columns, ell);
  for_each_bounded_x(cert.step_degrees(), max_degree, [&](const LatticeVector& x) {
    LatticeVector lambda = combine(ambient_dim, columns, x);
    const std::int64_t d = dot(ell, lambda);
    table[GradedKey{d, std::move(lambda)}] += 1;
  });
  add_slab_zeros(ambient_dim, columns, ell, max_degree, table);
  return table;
}

// ---------------------------------------------------------------------------
// IntegerSpan

IntegerSpan::IntegerSpan(std::size_t ambient_dim, const std::vector<LatticeVector>& columns) : dim_(ambient_dim) {
  std::vector<std::vector<Integer>> cols;
  for (const auto& c : columns) {
    if (c.dim() != ambient_dim) {
      throw DimensionError("integer span: column dimension mismatch");
    }
    std::vector<Integer> v(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      v[i] = c[i];
    }
    cols.push_back(std::move(v));
  }

  std::size_t p = 0;
  for (std::size_t r = 0; r < ambient_dim && p < cols.size(); ++r) {
    // Euclidean reduction of row r across columns p..end.
    while (true) {
      std::optional<std::size_t> smallest;
      std::size_t nonzero = 0;
      for (std::size_t k = p; k < cols.size(); ++k) {
        if (cols[k][r] != 0) {
          ++nonzero;
          if (!smallest || abs(cols[k][r]) < abs(cols[*smallest][r])) {
            smallest = k;
          }
        }
      }
      if (nonzero == 0) {
        break;
      }
      std::swap(cols[p], cols[*smallest]);
      if (nonzero == 1) {
        basis_.push_back(cols[p]);
        pivot_rows_.push_back(r);
        ++p;
        break;
      }
      for (std::size_t k = p + 1; k < cols.size(); ++k) {
        if (cols[k][r] == 0) {
          continue;
        }
        const Integer q = cols[k][r] / cols[p][r];  // truncating division
        for (std::size_t i = 0; i < ambient_dim; ++i) {
          cols[k][i] -= q * cols[p][i];
        }
      }
    }
  }
}

bool IntegerSpan::contains(const LatticeVector& v) const {
  if (v.dim() != dim_) {
    throw DimensionError("integer span: vector dimension mismatch");
  }
  std::vector<Integer> residual(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    residual[i] = v[i];
  }
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t r = pivot_rows_[k];
    if (!mpz_divisible_p(residual[r].get_mpz_t(), basis_[k][r].get_mpz_t())) {
      return false;
    }
    const Integer q = residual[r] / basis_[k][r];
    for (std::size_t i = 0; i < dim_; ++i) {
      residual[i] -= q * basis_[k][i];
    }
  }
  return std::all_of(residual.begin(), residual.end(), [](const Integer& z) { return z == 0; });
}

}  // namespace vpf
