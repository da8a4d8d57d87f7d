#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

using ConeIndices = std::array<std::size_t, 3>;

/// A fan in Z^3 given by its rays and its maximal (simplicial,
/// full-dimensional) cones as triples of ray indices. Lower-dimensional faces
/// are implicit. Nothing is validated on construction; see validate_fan.
struct Fan {
  std::string name;
  std::vector<LatticeVector> rays;
  std::vector<ConeIndices> cones;

  /// Throws std::out_of_range on a bad index and std::invalid_argument when
  /// the cone is not a valid simplicial cone.
  SimplicialCone cone(std::size_t index) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct FanViolation {
  enum class Kind {
    bad_ray_dimension,
    non_primitive_ray,
    duplicate_ray,
    bad_cone_index,
    degenerate_cone,
    duplicate_cone,
    improper_intersection,
  };
  Kind kind;
  std::vector<std::size_t> indices;  // ray indices or cone indices, by kind
  std::string message;
};

const char* to_string(FanViolation::Kind kind);

struct FanValidity {
  std::vector<FanViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Reports non-primitive and duplicate rays, malformed and degenerate cones,
/// and every pair of maximal cones whose intersection is not the cone on
/// their shared rays. Violations are ordered by kind, then by index.
FanValidity validate_fan(const Fan& f);

/// Whether two valid simplicial cones meet in a common face. On failure
/// `witness` (if given) receives a primitive vector in both cones that is
/// not on any shared face.
bool meet_in_common_face(const SimplicialCone& a, const SimplicialCone& b,
                         LatticeVector* witness = nullptr);

/// Unordered ray pair -> indices of the maximal cones containing that wall.
std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> walls(const Fan& f);

/// Wall criterion: every wall lies in exactly two maximal cones and the
/// wall-adjacency graph on maximal cones is connected.
/// Throws std::invalid_argument if the fan is not valid.
bool is_complete(const Fan& f);

}  // namespace toric
