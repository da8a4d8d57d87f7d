#include "toric/cone.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

SimplicialCone::SimplicialCone(LatticeVector r0, LatticeVector r1, LatticeVector r2)
    : SimplicialCone(std::array<LatticeVector, 3>{std::move(r0), std::move(r1), std::move(r2)}) {}

SimplicialCone::SimplicialCone(std::array<LatticeVector, 3> rays) : rays_(std::move(rays)) {
  for (const auto& r : rays_) {
    if (r.dim() != 3) throw std::invalid_argument("SimplicialCone: rays must lie in Z^3");
    if (!is_primitive(r)) {
      std::ostringstream msg;
      msg << "SimplicialCone: ray " << r << " is not primitive";
      throw std::invalid_argument(msg.str());
    }
  }
  if (det(ray_matrix()) == 0) throw std::invalid_argument("SimplicialCone: rays are linearly dependent");
}

IntegerMatrix SimplicialCone::ray_matrix() const { return IntegerMatrix::from_columns(rays_); }

Integer cone_multiplicity(const SimplicialCone& c) { return abs(det(c.ray_matrix())); }

bool is_smooth(const SimplicialCone& c) { return cone_multiplicity(c) == 1; }

const char* to_string(PointLocation location) {
  switch (location) {
    case PointLocation::interior: return "interior";
    case PointLocation::boundary: return "boundary";
    case PointLocation::outside: return "outside";
  }
  return "?";
}

RationalVector ray_coordinates(const SimplicialCone& c, std::span<const Rational> p) {
  if (p.size() != 3) throw std::invalid_argument("ray_coordinates: point must have 3 entries");
  auto x = solve_rational(c.ray_matrix(), p);
  if (!x) throw std::logic_error("ray_coordinates: singular ray matrix");
  return *std::move(x);
}

PointLocation classify_point(const SimplicialCone& c, std::span<const Rational> p) {
  const RationalVector x = ray_coordinates(c, p);
  if (std::any_of(x.begin(), x.end(), [](const Rational& q) { return q < 0; })) return PointLocation::outside;
  if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q > 0; })) return PointLocation::interior;
  return PointLocation::boundary;
}

PointLocation classify_point(const SimplicialCone& c, const LatticeVector& p) {
  return classify_point(c, to_rational(p));
}

std::array<LatticeVector, 3> facet_normals(const SimplicialCone& c) {
  const IntegerMatrix r = c.ray_matrix();
  IntegerMatrix adj = adjugate(r);  // adj * r = det * I
  if (det(r) < 0) {
    for (std::size_t i = 0; i < 3; ++i) adj.negate_row(i);
  }
  return {adj.row(0), adj.row(1), adj.row(2)};
}

}  // namespace toric
