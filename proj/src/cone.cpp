#include "vpf/cone.hpp"

#include <sstream>

namespace vpf {

ConeCertificate::ConeCertificate(const StepMatrix& matrix, LatticeVector ell)
    : ConeCertificate(matrix.columns(), std::move(ell)) {}

ConeCertificate::ConeCertificate(const std::vector<LatticeVector>& columns, LatticeVector ell)
    : ell_(std::move(ell)) {
  step_degrees_.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const std::int64_t d = dot(ell_, columns[j]);
    if (d < 1) {
      throw PreconditionError("functional " + to_string(ell_) + " is not positive on column " +
                              std::to_string(j + 1) + " " + to_string(columns[j]));
    }
    step_degrees_.push_back(d);
  }
}

static std::string describe_combination(const std::vector<std::int64_t>& w) {
  std::ostringstream os;
  os << "cone is not pointed: columns combine to zero with weights (";
  for (std::size_t j = 0; j < w.size(); ++j) {
    os << (j ? ", " : "") << w[j];
  }
  os << ')';
  return os.str();
}

NotPointed::NotPointed(std::vector<std::int64_t> combination)
    : std::runtime_error(describe_combination(combination)), combination_(std::move(combination)) {}

ConeCertificate certify_pointed(const StepMatrix& matrix) {
  const std::size_t n = matrix.rows();
  const std::size_t big_n = matrix.cols();
  const LatticeVector column_sum = matrix.column_sum();

  // Variables: y+ (n), y- (n), surplus (N).
  std::vector<std::vector<Scalar>> rows(big_n, std::vector<Scalar>(2 * n + big_n));
  std::vector<Scalar> rhs(big_n, 1);
  std::vector<Scalar> cost(2 * n + big_n, 0);
  for (std::size_t j = 0; j < big_n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      rows[j][i] = matrix.column(j)[i];
      rows[j][n + i] = -matrix.column(j)[i];
    }
    rows[j][2 * n + j] = -1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    cost[i] = column_sum[i];
    cost[n + i] = -column_sum[i];
  }

  const auto lp = detail::solve_standard_lp(rows, rhs, cost);
  if (lp.status == detail::LpStatus::Optimal) {
    std::vector<Scalar> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = lp.x[i] - lp.x[n + i];
    }
    return ConeCertificate(matrix, LatticeVector(detail::primitive_integer_vector(y)));
  }
  if (lp.status == detail::LpStatus::Unbounded) {
    // Σ_j <y, α^j> >= N on the feasible set.
    throw std::logic_error("pointedness LP reported an unbounded objective");
  }

  // Gordan alternative: w >= 0, A·w = 0, Σ w = 1.
  std::vector<std::vector<Scalar>> alt_rows(n + 1, std::vector<Scalar>(big_n));
  std::vector<Scalar> alt_rhs(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < big_n; ++j) {
      alt_rows[i][j] = matrix.column(j)[i];
    }
  }
  for (std::size_t j = 0; j < big_n; ++j) {
    alt_rows[n][j] = 1;
  }
  alt_rhs[n] = 1;
  const auto alt = detail::solve_standard_lp(alt_rows, alt_rhs, std::vector<Scalar>(big_n, 0));
  if (alt.status != detail::LpStatus::Optimal) {
    throw std::logic_error("neither a positive functional nor a zero combination was found");
  }
  throw NotPointed(detail::primitive_integer_vector(alt.x));
}

std::int64_t ell_degree(const ConeCertificate& cert, const LatticeVector& lambda) {
  return dot(cert.ell(), lambda);
}

}  // namespace vpf
