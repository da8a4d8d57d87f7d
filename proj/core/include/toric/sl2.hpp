#pragma once

// Polynomial identities from SL2 invariant theory: the invariant surfaces in
// the 5-dimensional representation, their Z/2 quotient presentation and the
// quadric family 4xz - y^2 = delta^k.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toric/poly.hpp"

namespace toric::sl2 {

/// The six generators in (a, b, c, d, e, delta), in the order
/// 3d^2-8ce+4de, cd-6be+dd, 3bd-48ae+2dc+2d^2, c^2-36ae+2dc+d^2,
/// bc-6ad+db, 3b^2-8ac+4da (delta abbreviated to d above).
std::vector<MultiPoly> invariant_ideal_generators();

/// a -> x^2, b -> 2xy, c -> 2xz + y^2, d -> 2yz, e -> z^2, delta -> 4xz - y^2.
std::map<std::string, MultiPoly> quotient_map_substitution();

/// 4xz - y^2 - delta^k
MultiPoly quadric_family(std::uint32_t k);

struct RepWeights {
  std::int64_t k = 0;
  std::vector<std::int64_t> weights;  // k, k-2, ..., -k
  /// Dimension of the torus-fixed subspace (multiplicity of weight 0).
  std::size_t fixed_dimension() const;
};

/// Torus weights of the irreducible (k+1)-dimensional representation V_k.
/// Throws std::invalid_argument for k < 0.
RepWeights rep_weights(std::int64_t k);

/// gcd(a mod n, n) == 1. Throws std::invalid_argument for n < 1.
bool etale_codim1_compatible(std::int64_t a, std::int64_t n);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t sample_points = 100;
  std::vector<std::size_t> generators;  // 1-based; empty selects all six
  int sample_range = 10;                // samples drawn from [-range, range]^3
};

struct GeneratorCheck {
  std::size_t index = 0;  // 1-based
  std::string generator;
  std::string image;      // expanded image under the quotient map
  bool symbolic_zero = false;
  std::size_t samples = 0;
  std::size_t nonzero_samples = 0;  // samples where the composed map is nonzero
  bool agrees() const { return symbolic_zero == (nonzero_samples == 0); }
};

struct InvolutionCheck {
  std::string variable;
  std::string image;
  bool invariant = false;  // unchanged by (x,y,z) -> (-x,-y,-z)
};

struct Verification {
  std::uint64_t seed = 0;
  std::size_t sample_points = 0;
  std::vector<GeneratorCheck> generators;
  std::vector<InvolutionCheck> involution;
  bool all_vanish() const;
  bool all_invariant() const;
  bool numeric_agrees() const;
  bool passed() const { return all_vanish() && all_invariant() && numeric_agrees(); }
};

/// Substitutes the quotient map into the selected generators, checks the
/// result symbolically and at seeded random integer points (evaluating the
/// map numerically, then the generator), and checks the sign involution.
/// Throws std::out_of_range for a generator index outside 1..6.
Verification verify_invariant_ideal(const VerifyOptions& options = {});

}  // namespace toric::sl2
