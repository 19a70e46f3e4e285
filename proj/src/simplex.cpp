#include "vpf/cone.hpp"

#include <limits>
#include <optional>

namespace vpf::detail {

namespace {

// Dense tableau: m constraint rows plus one objective row, columns are the
// structural variables followed by the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t cols) : m_(m), cols_(cols), cell_(m + 1, std::vector<Scalar>(cols + 1)) {}

  Scalar& at(std::size_t r, std::size_t c) { return cell_[r][c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return cell_[r][c]; }
  Scalar& rhs(std::size_t r) { return cell_[r][cols_]; }
  Scalar& obj(std::size_t c) { return cell_[m_][c]; }

  void pivot(std::size_t row, std::size_t col) {
    const Scalar p = cell_[row][col];
    for (auto& v : cell_[row]) {
      v /= p;
    }
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row || cell_[r][col] == 0) {
        continue;
      }
      const Scalar f = cell_[r][col];
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (cell_[row][c] != 0) {
          cell_[r][c] -= f * cell_[row][c];
        }
      }
    }
  }

  void drop_row(std::size_t row) {
    cell_.erase(cell_.begin() + static_cast<std::ptrdiff_t>(row));
    --m_;
  }

  std::size_t rows() const { return m_; }

 private:
  std::size_t m_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> cell_;
};

// Minimizes the objective row (stored as reduced costs; rhs cell holds -z).
// Returns false if unbounded.
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis, std::size_t allowed_cols) {
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < allowed_cols; ++c) {
      if (t.obj(c) < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) {
      return true;
    }
    std::optional<std::size_t> leaving;
    Scalar best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.at(r, *entering) <= 0) {
        continue;
      }
      Scalar ratio = t.rhs(r) / t.at(r, *entering);
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (!leaving) {
      return false;
    }
    t.pivot(*leaving, *entering);
    basis[*leaving] = *entering;
  }
}

}  // namespace

LpResult solve_standard_lp(const std::vector<std::vector<Scalar>>& rows, const std::vector<Scalar>& rhs,
                           const std::vector<Scalar>& cost) {
  const std::size_t m = rows.size();
  const std::size_t n = cost.size();
  const std::size_t total = n + m;  // structural + artificial
  Tableau t(m, total);
  std::vector<std::size_t> basis(m);

  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = rhs[r] < 0;
    for (std::size_t c = 0; c < n; ++c) {
      t.at(r, c) = flip ? -rows[r][c] : rows[r][c];
    }
    t.at(r, n + r) = 1;
    t.rhs(r) = flip ? -rhs[r] : rhs[r];
    basis[r] = n + r;
  }

  // Phase 1: minimize the sum of artificials, expressed in non-basic terms.
  for (std::size_t c = 0; c <= total; ++c) {
    Scalar sum = 0;
    for (std::size_t r = 0; r < m; ++r) {
      sum += t.at(r, c);
    }
    if (c < n) {
      t.obj(c) = -sum;
    } else if (c == total) {
      t.obj(c) = -sum;
    }
  }
  run_simplex(t, basis, total);

  LpResult result;
  if (t.obj(total) != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows();) {
    if (basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < n; ++c) {
      if (t.at(r, c) != 0) {
        col = c;
        break;
      }
    }
    if (col) {
      t.pivot(r, *col);
      basis[r] = *col;
      ++r;
    } else {
      t.drop_row(r);
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  // Phase 2: reduced costs for the real objective.
  for (std::size_t c = 0; c <= total; ++c) {
    Scalar v = (c < n) ? cost[c] : Scalar(0);
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (basis[r] < n && cost[basis[r]] != 0) {
        v -= cost[basis[r]] * t.at(r, c);
      }
    }
    t.obj(c) = v;
  }
  if (!run_simplex(t, basis, n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x.assign(n, 0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (basis[r] < n) {
      result.x[basis[r]] = t.rhs(r);
    }
  }
  result.objective = 0;
  for (std::size_t c = 0; c < n; ++c) {
    result.objective += cost[c] * result.x[c];
  }
  return result;
}

std::vector<std::int64_t> primitive_integer_vector(const std::vector<Scalar>& v) {
  Integer lcd = 1;
  for (const auto& s : v) {
    mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), s.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  Integer content = 0;
  for (const auto& s : v) {
    Integer k = s.get_num() * (lcd / s.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), k.get_mpz_t());
    scaled.push_back(k);
  }
  std::vector<std::int64_t> out;
  for (auto& k : scaled) {
    if (content != 0) {
      k /= content;
    }
    if (!k.fits_slong_p()) {
      throw std::overflow_error("certificate entry does not fit in 64 bits");
    }
    out.push_back(k.get_si());
  }
  return out;
}

}  // namespace vpf::detail
