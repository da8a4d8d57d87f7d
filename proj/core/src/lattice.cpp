#include "toric/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

// ---------------------------------------------------------------------------
// Scalars

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + value.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

std::string to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("LatticeVector: dimension must be >= 1");
}

LatticeVector::LatticeVector(std::initializer_list<long long> entries)
    : LatticeVector(std::vector<Integer>(entries.begin(), entries.end())) {}

LatticeVector LatticeVector::zero(std::size_t dim) {
  return LatticeVector(std::vector<Integer>(dim, Integer(0)));
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("LatticeVector::unit: index out of range");
  LatticeVector v = zero(dim);
  v[index] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out = *this;
  for (auto& x : out.entries_) x = -x;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.dim() != dim()) throw std::invalid_argument("LatticeVector: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.dim() != dim()) throw std::invalid_argument("LatticeVector: dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LatticeVector operator*(const Integer& k, LatticeVector v) {
  for (auto& x : v.entries_) x *= k;
  return v;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v.entries()) g = gcd(g, x);
  return g;
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("IntegerMatrix: empty shape");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntegerMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged rows");
    std::size_t c = 0;
    for (long long x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const Integer> entries) {
  IntegerMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::span<const LatticeVector> columns) {
  if (columns.empty()) throw std::invalid_argument("IntegerMatrix::from_columns: no columns");
  IntegerMatrix m(columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != m.rows_) {
      throw std::invalid_argument("IntegerMatrix::from_columns: dimension mismatch");
    }
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticeVector> rows) {
  return from_columns(rows).transpose();
}

LatticeVector IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return LatticeVector(std::move(out));
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
  return LatticeVector(std::vector<Integer>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntegerMatrix product: shape mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.dim()) throw std::invalid_argument("IntegerMatrix*vector: shape mismatch");
  std::vector<Integer> out(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return LatticeVector(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Determinant

Integer det(const IntegerMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact by Sylvester's identity
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntegerMatrix& m) { return m.is_square() && abs(det(m)) == 1; }

IntegerMatrix adjugate(const IntegerMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntegerMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Integer cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Fold every entry below the pivot into the pivot with unimodular 2x2 steps.
    for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      const Integer a = h(pivot_row, col);
      const Integer b = h(i, col);
      const auto [g, s, t] = extended_gcd(a, b);
      const Integer a_g = a / g;
      const Integer b_g = b / g;
      for (IntegerMatrix* target : {&h, &u}) {
        IntegerMatrix& x = *target;
        for (std::size_t c = 0; c < x.cols(); ++c) {
          Integer top = s * x(pivot_row, c) + t * x(i, c);
          Integer bottom = a_g * x(i, c) - b_g * x(pivot_row, c);
          x(pivot_row, c) = std::move(top);
          x(i, c) = std::move(bottom);
        }
      }
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    const Integer pivot = h(pivot_row, col);
    for (std::size_t k = 0; k < pivot_row; ++k) {
      const Integer q = floor_div(h(k, col), pivot);
      h.add_row_multiple(k, pivot_row, -q);
      u.add_row_multiple(k, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t rank_bound = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < rank_bound; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
          if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
            best = {i, j};
      if (!best) return {std::move(d), std::move(u), std::move(v)};

      d.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        const Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        const Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the rest of the block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.push_back(snf.d(i, i));
  return out;
}

// ---------------------------------------------------------------------------
// Solving

std::optional<LatticeVector> solve_integer(const IntegerMatrix& a, const LatticeVector& b) {
  if (b.dim() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  // a*x = b  <=>  D*y = U*b with x = V*y.
  const SmithForm snf = smith_normal_form(a);
  const LatticeVector rhs = snf.u * b;
  std::vector<Integer> y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer di = i < a.cols() ? snf.d(i, i) : Integer(0);
    if (di == 0) {
      if (rhs[i] != 0) return std::nullopt;
      continue;
    }
    if (rhs[i] % di != 0) return std::nullopt;
    y[i] = rhs[i] / di;
  }
  return snf.v * LatticeVector(std::move(y));
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out;
  out.reserve(v.dim());
  for (const auto& x : v.entries()) out.emplace_back(x);
  return out;
}

std::optional<RationalVector> solve_rational(const IntegerMatrix& a, std::span<const Rational> b) {
  if (!a.is_square()) throw std::invalid_argument("solve_rational: matrix is not square");
  if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(a(i, j));
    aug[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational f = aug[i][col] / aug[col][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
  return x;
}

}  // namespace toric
