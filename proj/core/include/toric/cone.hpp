#pragma once

#include <array>
#include <span>

#include "toric/lattice.hpp"

namespace toric {

/// Full-dimensional simplicial cone in Z^3 spanned by three primitive,
/// linearly independent rays. The ray order is significant: ray-coordinate
/// results (quotient weights, point classification) follow it.
class SimplicialCone {
 public:
  /// Throws std::invalid_argument unless every ray lies in Z^3, is primitive,
  /// and the three rays are linearly independent.
  SimplicialCone(LatticeVector r0, LatticeVector r1, LatticeVector r2);
  explicit SimplicialCone(std::array<LatticeVector, 3> rays);

  const std::array<LatticeVector, 3>& rays() const { return rays_; }
  const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }

  /// 3x3 matrix whose columns are the rays.
  IntegerMatrix ray_matrix() const;

  friend bool operator==(const SimplicialCone&, const SimplicialCone&) = default;

 private:
  std::array<LatticeVector, 3> rays_;
};

/// |det| of the ray matrix: the index of the ray sublattice in Z^3.
Integer cone_multiplicity(const SimplicialCone& c);
bool is_smooth(const SimplicialCone& c);

enum class PointLocation { interior, boundary, outside };

const char* to_string(PointLocation location);

/// Classifies p by its exact ray coordinates. The origin is on the boundary.
/// Throws std::invalid_argument unless p has 3 entries.
PointLocation classify_point(const SimplicialCone& c, std::span<const Rational> p);
PointLocation classify_point(const SimplicialCone& c, const LatticeVector& p);

/// Ray coordinates of p: the unique x with ray_matrix() * x == p.
RationalVector ray_coordinates(const SimplicialCone& c, std::span<const Rational> p);

/// Inward facet normals, one per ray: normal i vanishes on every ray except
/// ray i, where it is positive. Integral (rows of the signed adjugate).
std::array<LatticeVector, 3> facet_normals(const SimplicialCone& c);

}  // namespace toric
