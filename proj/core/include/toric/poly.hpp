#pragma once

// Sparse multivariate polynomials with integer coefficients.
//
// Variables are identified by name and kept in a canonical order:
// a, b, c, d, e, delta, x, y, z first, then any other name alphabetically.
// Terms are ordered by graded reverse lexicographic order (highest first),
// which is also the rendering order. Zero coefficients are never stored.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  /// True when a precedes b in the term order (a is the larger monomial).
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Integer, TermOrder>;

  MultiPoly() = default;  // zero
  MultiPoly(long long c);  // NOLINT: constants convert implicitly
  MultiPoly(const Integer& c);  // NOLINT

  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree when each variable has the given weight (missing names weigh 0).
  std::int64_t weighted_degree(const Exponents& monomial, const std::map<std::string, std::int64_t>& weights) const;
  bool is_homogeneous(const std::map<std::string, std::int64_t>& weights) const;

  /// Coefficient of the monomial given as name -> exponent.
  Integer coefficient(const std::map<std::string, std::uint32_t>& monomial) const;

  /// Same polynomial over a larger variable list. Throws std::invalid_argument
  /// if a used variable is missing from `variables`.
  MultiPoly over(const std::vector<std::string>& variables) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }

  MultiPoly pow(std::uint32_t k) const;

  /// Ring homomorphism sending each assigned variable to its image;
  /// unassigned variables map to themselves.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;

  /// Throws std::invalid_argument when a used variable has no value.
  Integer evaluate(const std::map<std::string, Integer>& values) const;

  /// Equal as polynomials (variable lists may differ in unused names).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<std::string> variables_;
  Terms terms_;
};

/// Canonical ordering of variable names.
bool variable_precedes(const std::string& a, const std::string& b);
std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// e.g. "3*d^2 - 8*c*e + 4*delta*e"; "0" for zero.
std::string to_string(const MultiPoly& p);

}  // namespace toric
