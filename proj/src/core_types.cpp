#include "vpf/core_types.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <regex>
#include <sstream>

namespace vpf {

Scalar power(const Scalar& base, std::uint64_t exponent) {
  Scalar result = 1;
  if (exponent == 0) {
    return result;
  }
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

Scalar parse_scalar(const std::string& text) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  if (!std::regex_match(text, pattern)) {
    throw std::invalid_argument("not an exact rational literal: \"" + text + "\"");
  }
  std::string normalized = text.front() == '+' ? text.substr(1) : text;
  const auto slash = normalized.find('/');
  if (slash != std::string::npos && Integer(normalized.substr(slash + 1)) == 0) {
    throw std::invalid_argument("zero denominator in \"" + text + "\"");
  }
  Scalar value(normalized, 10);
  value.canonicalize();
  return value;
}

std::string to_fraction_string(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t j) {
  if (j >= dim) {
    throw DimensionError("unit vector index " + std::to_string(j) + " out of range for dim " +
                         std::to_string(dim));
  }
  LatticeVector e(dim);
  e[j] = 1;
  return e;
}

LatticeVector LatticeVector::ones(std::size_t dim) {
  return LatticeVector(std::vector<std::int64_t>(dim, 1));
}

bool LatticeVector::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t v) { return v >= 0; });
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t LatticeVector::total() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

static void require_same_dim(const LatticeVector& a, const LatticeVector& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_same_dim(*this, other, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] += other.coords_[i];
  }
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_same_dim(*this, other, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] -= other.coords_[i];
  }
  return *this;
}

LatticeVector operator*(std::int64_t k, LatticeVector a) {
  for (auto& v : a.coords_) {
    v *= k;
  }
  return a;
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b, "dot product");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

static std::string join(const LatticeVector& v, const char* sep) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i > 0) {
      os << sep;
    }
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const LatticeVector& v) { return join(v, ","); }
std::string to_spaced_string(const LatticeVector& v) { return join(v, ", "); }

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }

std::vector<LatticeVector> orthant_points(std::size_t dim, std::int64_t bound) {
  std::vector<LatticeVector> out;
  if (bound < 0) {
    return out;
  }
  // Walk the box [0, bound]^dim lexicographically and keep |x| <= bound,
  // then stable-sort by total degree to get graded-lex order.
  LatticeVector x(dim);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == dim) {
      out.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
    x[i] = 0;
  };
  rec(0, bound);
  std::stable_sort(out.begin(), out.end(),
                   [](const LatticeVector& a, const LatticeVector& b) { return a.total() < b.total(); });
  return out;
}

std::vector<LatticeVector> box_points(const LatticeVector& corner) {
  std::vector<LatticeVector> out;
  if (!corner.is_nonnegative()) {
    return out;
  }
  LatticeVector x(corner.dim());
  while (true) {
    out.push_back(x);
    std::size_t i = corner.dim();
    while (i > 0 && x[i - 1] == corner[i - 1]) {
      x[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return out;
    }
    ++x[i - 1];
  }
}

// ---------------------------------------------------------------------------
// StepMatrix

StepMatrix::StepMatrix(std::vector<LatticeVector> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) {
    throw PreconditionError("step matrix needs at least one column");
  }
  const std::size_t n = columns_.front().dim();
  if (n == 0) {
    throw PreconditionError("step matrix needs at least one row");
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].dim() != n) {
      throw DimensionError("column " + std::to_string(j + 1) + " has dimension " +
                           std::to_string(columns_[j].dim()) + ", expected " + std::to_string(n));
    }
    if (columns_[j].is_zero()) {
      throw PreconditionError("column " + std::to_string(j + 1) + " is zero; the cone would not be pointed");
    }
  }
}

StepMatrix StepMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw PreconditionError("step matrix must be at least 1x1");
  }
  const std::size_t width = rows.front().size();
  std::vector<LatticeVector> columns(width, LatticeVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      columns[j][i] = rows[i][j];
    }
  }
  return StepMatrix(std::move(columns));
}

LatticeVector StepMatrix::apply(const LatticeVector& x) const {
  if (x.dim() != cols()) {
    throw DimensionError("A·x: x has dimension " + std::to_string(x.dim()) + ", expected " +
                         std::to_string(cols()));
  }
  LatticeVector out(rows());
  for (std::size_t j = 0; j < cols(); ++j) {
    if (x[j] != 0) {
      out += x[j] * columns_[j];
    }
  }
  return out;
}

LatticeVector StepMatrix::column_sum() const { return apply(LatticeVector::ones(cols())); }

std::vector<LatticeVector> StepMatrix::columns_without(std::size_t j) const {
  if (j >= cols()) {
    throw DimensionError("column index out of range");
  }
  std::vector<LatticeVector> out;
  for (std::size_t k = 0; k < cols(); ++k) {
    if (k != j) {
      out.push_back(columns_[k]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multinomials

Integer multinomial_integer(const LatticeVector& x) {
  if (!x.is_nonnegative()) {
    throw PreconditionError("multinomial of a vector with a negative coordinate: " + to_string(x));
  }
  // Product of binomials C(x_1 + ... + x_k, x_k).
  Integer result = 1;
  Integer binom;
  std::uint64_t running = 0;
  for (std::int64_t v : x) {
    running += static_cast<std::uint64_t>(v);
    mpz_bin_uiui(binom.get_mpz_t(), running, static_cast<unsigned long>(v));
    result *= binom;
  }
  return result;
}

Scalar multinomial(const LatticeVector& x) { return Scalar(multinomial_integer(x)); }

// ---------------------------------------------------------------------------
// WeightFunction

namespace {

std::size_t table_size(const LatticeVector& corner) {
  std::size_t size = 1;
  for (std::int64_t v : corner) {
    size *= static_cast<std::size_t>(v + 1);
  }
  return size;
}

std::size_t table_index(const LatticeVector& corner, const LatticeVector& x) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < corner.dim(); ++i) {
    index = index * static_cast<std::size_t>(corner[i] + 1) + static_cast<std::size_t>(x[i]);
  }
  return index;
}

Scalar monomial(std::span<const Scalar> base, const LatticeVector& x) {
  Scalar result = 1;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    result *= power(base[i], static_cast<std::uint64_t>(x[i]));
  }
  return result;
}

}  // namespace

WeightFunction::WeightFunction(ConstantOne w) : variant_(w), arity_(w.arity) {
  if (arity_ == 0) {
    throw PreconditionError("weight arity must be positive");
  }
}

WeightFunction::WeightFunction(GeometricWeights w) : variant_(std::move(w)), arity_(0) {
  arity_ = std::get<GeometricWeights>(variant_).q.size();
  if (arity_ == 0) {
    throw PreconditionError("geometric weights need at least one ratio");
  }
}

WeightFunction::WeightFunction(MultinomialMonomial w) : variant_(std::move(w)), arity_(0) {
  const auto& m = std::get<MultinomialMonomial>(variant_);
  arity_ = m.c.size();
  if (arity_ == 0) {
    throw PreconditionError("multinomial monomial needs at least one coefficient");
  }
  if (m.j >= arity_) {
    throw DimensionError("multinomial monomial index out of range");
  }
}

WeightFunction::WeightFunction(LatticePathCount w) : variant_(w), arity_(w.arity) {
  if (arity_ == 0) {
    throw PreconditionError("weight arity must be positive");
  }
}

WeightFunction::WeightFunction(Table w) : variant_(std::move(w)), arity_(0) {
  const auto& t = std::get<Table>(variant_);
  arity_ = t.corner.dim();
  if (arity_ == 0) {
    throw PreconditionError("table weight needs a box of positive dimension");
  }
  if (!t.corner.is_nonnegative()) {
    throw PreconditionError("table box corner must be nonnegative: " + to_string(t.corner));
  }
  if (t.values.size() != table_size(t.corner)) {
    throw DimensionError("table over box " + to_string(t.corner) + " needs " +
                         std::to_string(table_size(t.corner)) + " values, got " +
                         std::to_string(t.values.size()));
  }
}

WeightFunction WeightFunction::tabulate(const LatticeVector& corner,
                                        const std::function<Scalar(const LatticeVector&)>& f) {
  Table t{corner, {}};
  for (const auto& x : box_points(corner)) {
    t.values.push_back(f(x));
  }
  return WeightFunction(std::move(t));
}

Scalar WeightFunction::operator()(const LatticeVector& x) const {
  if (x.dim() != arity_) {
    throw DimensionError("weight of arity " + std::to_string(arity_) + " evaluated at " + to_string(x));
  }
  if (!x.is_nonnegative()) {
    return 0;
  }
  return std::visit(
      [&](const auto& w) -> Scalar {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, ConstantOne>) {
          return 1;
        } else if constexpr (std::is_same_v<W, GeometricWeights>) {
          return monomial(w.q, x);
        } else if constexpr (std::is_same_v<W, MultinomialMonomial>) {
          return multinomial(x) * monomial(w.c, x + LatticeVector::unit(arity_, w.j));
        } else if constexpr (std::is_same_v<W, LatticePathCount>) {
          return multinomial(x);
        } else {
          for (std::size_t i = 0; i < x.dim(); ++i) {
            if (x[i] > w.corner[i]) {
              return 0;
            }
          }
          return w.values[table_index(w.corner, x)];
        }
      },
      variant_);
}

Scalar evaluate_weight(const WeightFunction& phi, const LatticeVector& x) { return phi(x); }

std::string weight_kind(const WeightFunction& phi) {
  static constexpr const char* names[] = {"constant_one", "geometric", "multinomial_monomial",
                                          "lattice_path_count", "table"};
  return names[phi.variant().index()];
}

}  // namespace vpf
