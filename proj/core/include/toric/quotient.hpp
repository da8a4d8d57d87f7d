#pragma once

// Cyclic quotient singularities 1/r(a1,a2,a3) of simplicial cones in Z^3.
//
// A cone with rays v1, v2, v3 has the group G = Z^3 / (Z v1 + Z v2 + Z v3).
// When G is cyclic of order r, a generator lifts to a lattice point with ray
// coordinates (a1/r, a2/r, a3/r) mod Z; the singularity is 1/r(a1,a2,a3).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

class CyclicQuotientType {
 public:
  /// Weights are reduced into [0, r); negative input is accepted.
  /// Throws std::invalid_argument if r < 1 or gcd(a1, a2, a3, r) != 1.
  CyclicQuotientType(std::int64_t r, std::array<std::int64_t, 3> weights);

  static CyclicQuotientType smooth() { return CyclicQuotientType(1, {0, 0, 0}); }

  std::int64_t order() const { return r_; }
  const std::array<std::int64_t, 3>& weights() const { return weights_; }
  bool is_smooth() const { return r_ == 1; }

  friend bool operator==(const CyclicQuotientType&, const CyclicQuotientType&) = default;
  friend auto operator<=>(const CyclicQuotientType&, const CyclicQuotientType&) = default;

 private:
  std::int64_t r_;
  std::array<std::int64_t, 3> weights_;
};

/// "smooth" for r = 1, otherwise "1/r(a1,a2,a3)" with the stored weights.
std::string to_string(const CyclicQuotientType& t);

/// Parses "smooth" or "1/r(a1,a2,a3)" (weights may be negative).
/// Throws std::invalid_argument on malformed text.
CyclicQuotientType parse_cyclic_type(const std::string& text);

/// Group with two or more nontrivial invariant factors.
struct NonCyclicType {
  std::vector<Integer> factors;  // invariant factors > 1, in divisibility order
  friend bool operator==(const NonCyclicType&, const NonCyclicType&) = default;
};

using QuotientTypeResult = std::variant<CyclicQuotientType, NonCyclicType>;

/// "noncyclic(d1,d2,...)" for the non-cyclic case.
std::string to_string(const QuotientTypeResult& t);

/// Lexicographically least sorted weight triple over all unit rescalings
/// u*(a1,a2,a3) mod r with gcd(u, r) = 1.
CyclicQuotientType normalize_type(const CyclicQuotientType& t);

/// Quotient type of the cone, cyclic weights normalized.
QuotientTypeResult quotient_type(const SimplicialCone& c);

/// Sum of frac(k*a_i/r). Throws std::out_of_range unless 1 <= k <= r-1.
Rational reid_tai_sum(const CyclicQuotientType& t, std::int64_t k);

/// Reid-Tai: every k in 1..r-1 has sum > 1 (terminal) or >= 1 (canonical).
bool is_terminal(const CyclicQuotientType& t);
bool is_canonical(const CyclicQuotientType& t);

/// Ray coordinates in [0,1)^3 of every element of the cone's group
/// (identity first). One entry per lattice point of the half-open
/// fundamental parallelepiped.
std::vector<RationalVector> group_elements(const SimplicialCone& c);

/// Age criterion over the whole group: every non-identity element has
/// coordinate sum > 1 (terminal) or >= 1 (canonical). Agrees with the
/// cyclic criterion and also covers non-cyclic groups.
bool cone_is_terminal(const SimplicialCone& c);
bool cone_is_canonical(const SimplicialCone& c);

/// Cone on e1, e3 and (-(n-1), n, -1), of type 1/n(1,1,-1).
/// Throws std::invalid_argument for n < 1.
SimplicialCone standard_cone(std::int64_t n);

/// A unimodular g with g * (rays of a) = (rays of b) up to a bijection of
/// rays. Bijections are tried in lexicographic order of permutations of b's
/// rays; the first integral unimodular solution is returned.
std::optional<IntegerMatrix> lattice_equivalent(const SimplicialCone& a, const SimplicialCone& b);

/// Every such g, in the same search order.
std::vector<IntegerMatrix> lattice_equivalences(const SimplicialCone& a, const SimplicialCone& b);

}  // namespace toric
