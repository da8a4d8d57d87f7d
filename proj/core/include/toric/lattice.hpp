#pragma once

// Exact integer linear algebra over Z^n.
//
// Conventions:
//  * Hermite normal form is row-style: H = U*M is in row echelon form, every
//    pivot is positive and the entries above a pivot lie in [0, pivot).
//  * Smith normal form D = U*M*V has non-negative diagonal d1 | d2 | ...,
//    with zero invariant factors last.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

class LatticeVector {
 public:
  /// Throws std::invalid_argument for an empty entry list.
  explicit LatticeVector(std::vector<Integer> entries);
  LatticeVector(std::initializer_list<long long> entries);

  static LatticeVector zero(std::size_t dim);
  static LatticeVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Integer> entries() const { return entries_; }

  bool is_zero() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, LatticeVector v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// gcd of all entries; 0 for the zero vector.
Integer content(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

class IntegerMatrix {
 public:
  /// Zero matrix. Throws std::invalid_argument if rows or cols is 0.
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(std::span<const Integer> entries);
  /// Every column must have the same dimension.
  static IntegerMatrix from_columns(std::span<const LatticeVector> columns);
  static IntegerMatrix from_rows(std::span<const LatticeVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  LatticeVector column(std::size_t c) const;
  LatticeVector row(std::size_t r) const;
  IntegerMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
/// Throws std::invalid_argument for a non-square matrix.
Integer det(const IntegerMatrix& m);

/// Square with determinant +-1.
bool is_unimodular(const IntegerMatrix& m);

/// Adjugate of a square matrix: adj(M)*M = M*adj(M) = det(M)*I.
IntegerMatrix adjugate(const IntegerMatrix& m);

struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix u;  // unimodular, h == u * m
};
HermiteForm hermite_normal_form(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix d;
  IntegerMatrix u;  // unimodular rows x rows
  IntegerMatrix v;  // unimodular cols x cols, d == u * m * v
};
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Diagonal of the Smith form, min(rows, cols) entries.
std::vector<Integer> invariant_factors(const IntegerMatrix& m);

/// Some integer x with a*x == b, or nullopt. Throws std::invalid_argument if
/// b.dim() != a.rows().
std::optional<LatticeVector> solve_integer(const IntegerMatrix& a, const LatticeVector& b);

using RationalVector = std::vector<Rational>;

RationalVector to_rational(const LatticeVector& v);

/// Unique rational solution of a square system, or nullopt when singular.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<RationalVector> solve_rational(const IntegerMatrix& a, std::span<const Rational> b);

}  // namespace toric
