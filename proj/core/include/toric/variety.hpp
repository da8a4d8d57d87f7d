#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/quotient.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Weighted projective spaces

enum class WpsBasis {
  automatic,  // explicit basis when w0 == 1, Smith basis otherwise
  smith,      // always the Smith basis of Z^4 / Z*w
};

/// Fan of P(w0,w1,w2,w3). Ray j (j < 3) is the image of the basis vector of
/// weight w_{j+1}; ray 3 is the image of the one of weight w0. With w0 == 1
/// the rays are e1, e2, e3, (-w1,-w2,-w3). Cones are all four ray triples in
/// lexicographic order.
/// Throws std::invalid_argument for non-positive or ill-formed weights (some
/// three weights share a common factor).
Fan build_wps_fan(const std::array<std::int64_t, 4>& weights, WpsBasis basis = WpsBasis::automatic);

/// "P(w0,w1,w2,w3)"
std::string wps_name(const std::array<std::int64_t, 4>& weights);

/// Free rank of the class group, #rays - 3 (rho over Q for complete
/// simplicial fans). Throws std::invalid_argument unless the fan is valid
/// and complete.
std::int64_t class_group_rank(const Fan& f);

/// Some unimodular g that maps the rays of a bijectively onto the rays of b
/// and the maximal cones of a onto those of b.
std::optional<IntegerMatrix> fan_lattice_equivalent(const Fan& a, const Fan& b);

// ---------------------------------------------------------------------------
// Fan analysis

struct ConeRecord {
  ConeIndices rays{};
  std::int64_t multiplicity = 0;  // 0 when the cone is malformed
  std::string type;               // "smooth", "1/r(a,b,c)", "noncyclic(...)" or "invalid"
  bool terminal = false;
  friend bool operator==(const ConeRecord&, const ConeRecord&) = default;
};

struct AnalysisReport {
  std::string fan_name;
  std::vector<LatticeVector> rays;
  bool valid = false;
  std::vector<std::string> violations;
  bool complete = false;
  std::vector<ConeRecord> cones;              // one per maximal cone, fan order
  std::optional<std::int64_t> class_rank;     // only for valid complete fans
  bool all_terminal = false;
  bool q_factorial = false;                   // every valid fan here is simplicial
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Fan& f);

// ---------------------------------------------------------------------------
// Linking equations m = mu*n - 1, n = nu*m - 1

struct LinkingSolution {
  std::int64_t n = 0, m = 0, mu = 0, nu = 0;
  friend bool operator==(const LinkingSolution&, const LinkingSolution&) = default;
  friend auto operator<=>(const LinkingSolution&, const LinkingSolution&) = default;
};

/// All solutions with n > m > 1, gcd(n, m) = 1 and n <= bound, ascending.
/// Throws std::invalid_argument for bound < 2.
std::vector<LinkingSolution> solve_linking_equations(std::int64_t bound);

/// One relabeling of the coordinates of v = (-m, -n, -1).
struct Case1Labeling {
  std::array<std::size_t, 3> permutation{};  // v'[i] = v[permutation[i]]
  Fan fan;
  AnalysisReport analysis;
  bool types_match = false;                  // {smooth, smooth, 1/n(1,1,-1), 1/m(1,1,-1)}
  std::optional<IntegerMatrix> equivalence;  // onto the matching weighted projective space
};

struct Case1Record {
  LinkingSolution solution;
  Fan fan;                        // rays e1, e2, e3, (-m, -n, -1)
  std::vector<std::string> singularities;  // normalized types of the singular cones
  std::string target;             // "P(1,1,m,n)"
  std::vector<Case1Labeling> labelings;    // all 6, lexicographic permutation order
  bool matched = false;           // every labeling is lattice-equivalent to the target
  std::string verdict;
};

struct Case1Classification {
  std::int64_t bound = 0;
  std::vector<LinkingSolution> solutions;
  std::vector<Case1Record> records;
  bool all_matched() const;
};

/// Throws std::invalid_argument for bound < 2.
Case1Classification classify_case1(std::int64_t bound);

}  // namespace toric
