#include "toric/fan.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {
namespace {

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return LatticeVector(std::vector<Integer>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                            a[0] * b[1] - a[1] * b[0]});
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector make_primitive(LatticeVector v) {
  const Integer g = content(v);
  if (g > 1)
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= g;
  return v;
}

std::string describe(const ConeIndices& c) {
  std::ostringstream os;
  os << '(' << c[0] << ',' << c[1] << ',' << c[2] << ')';
  return os.str();
}

}  // namespace

SimplicialCone Fan::cone(std::size_t index) const {
  const ConeIndices& idx = cones.at(index);
  return SimplicialCone(rays.at(idx[0]), rays.at(idx[1]), rays.at(idx[2]));
}

const char* to_string(FanViolation::Kind kind) {
  using K = FanViolation::Kind;
  switch (kind) {
    case K::bad_ray_dimension: return "bad_ray_dimension";
    case K::non_primitive_ray: return "non_primitive_ray";
    case K::duplicate_ray: return "duplicate_ray";
    case K::bad_cone_index: return "bad_cone_index";
    case K::degenerate_cone: return "degenerate_cone";
    case K::duplicate_cone: return "duplicate_cone";
    case K::improper_intersection: return "improper_intersection";
  }
  return "?";
}

bool meet_in_common_face(const SimplicialCone& a, const SimplicialCone& b, LatticeVector* witness) {
  // a ∩ b is pointed, so each of its extreme rays lies on two independent
  // facet planes. Enumerate those candidates and require every one that lies
  // in both cones to be a shared ray.
  std::vector<LatticeVector> normals;
  for (const auto& n : facet_normals(a)) normals.push_back(n);
  for (const auto& n : facet_normals(b)) normals.push_back(n);

  std::set<LatticeVector> shared;
  for (const auto& r : a.rays())
    if (std::find(b.rays().begin(), b.rays().end(), r) != b.rays().end()) shared.insert(r);

  auto inside_both = [&](const LatticeVector& v) {
    return std::all_of(normals.begin(), normals.end(), [&](const LatticeVector& n) { return dot(n, v) >= 0; });
  };

  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      const LatticeVector line = cross(normals[i], normals[j]);
      if (line.is_zero()) continue;
      for (const LatticeVector& dir : {line, -line}) {
        if (!inside_both(dir)) continue;
        LatticeVector ray = make_primitive(dir);
        if (!shared.contains(ray)) {
          if (witness) *witness = std::move(ray);
          return false;
        }
      }
    }
  }
  return true;
}

FanValidity validate_fan(const Fan& f) {
  using K = FanViolation::Kind;
  FanValidity report;
  auto add = [&](K kind, std::vector<std::size_t> idx, std::string msg) {
    report.violations.push_back({kind, std::move(idx), std::move(msg)});
  };

  std::vector<bool> ray_ok(f.rays.size(), true);
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    std::ostringstream os;
    os << "ray " << i << ' ' << f.rays[i];
    if (f.rays[i].dim() != 3) {
      add(K::bad_ray_dimension, {i}, os.str() + " is not in Z^3");
      ray_ok[i] = false;
    } else if (!is_primitive(f.rays[i])) {
      add(K::non_primitive_ray, {i}, os.str() + " is not primitive");
      ray_ok[i] = false;
    }
  }
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    for (std::size_t j = i + 1; j < f.rays.size(); ++j)
      if (f.rays[i] == f.rays[j])
        add(K::duplicate_ray, {i, j}, "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  std::vector<std::optional<SimplicialCone>> cones(f.cones.size());
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    const ConeIndices& idx = f.cones[c];
    const bool in_range = std::all_of(idx.begin(), idx.end(), [&](std::size_t r) { return r < f.rays.size(); });
    const bool distinct = idx[0] != idx[1] && idx[0] != idx[2] && idx[1] != idx[2];
    if (!in_range || !distinct) {
      add(K::bad_cone_index, {c},
          "cone " + std::to_string(c) + ' ' + describe(idx) + (in_range ? " repeats a ray" : " has a ray index out of range"));
      continue;
    }
    if (!std::all_of(idx.begin(), idx.end(), [&](std::size_t r) { return ray_ok[r]; })) continue;
    if (det(IntegerMatrix::from_columns(std::vector{f.rays[idx[0]], f.rays[idx[1]], f.rays[idx[2]]})) == 0) {
      add(K::degenerate_cone, {c}, "cone " + std::to_string(c) + ' ' + describe(idx) + " is not full-dimensional");
      continue;
    }
    cones[c] = f.cone(c);
  }

  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!cones[i]) continue;
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!cones[j]) continue;
      std::set<LatticeVector> ri(cones[i]->rays().begin(), cones[i]->rays().end());
      std::set<LatticeVector> rj(cones[j]->rays().begin(), cones[j]->rays().end());
      if (ri == rj) {
        add(K::duplicate_cone, {i, j}, "cones " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        continue;
      }
      LatticeVector witness = LatticeVector::zero(3);
      if (!meet_in_common_face(*cones[i], *cones[j], &witness)) {
        std::ostringstream os;
        os << "cones " << i << ' ' << describe(f.cones[i]) << " and " << j << ' ' << describe(f.cones[j])
           << " do not meet in a common face (both contain " << witness << ")";
        add(K::improper_intersection, {i, j}, os.str());
      }
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const FanViolation& a, const FanViolation& b) {
                     return std::tie(a.kind, a.indices) < std::tie(b.kind, b.indices);
                   });
  return report;
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> walls(const Fan& f) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    const ConeIndices& idx = f.cones[c];
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        out[std::minmax(idx[a], idx[b])].push_back(c);
  }
  return out;
}

bool is_complete(const Fan& f) {
  if (!validate_fan(f).valid()) throw std::invalid_argument("is_complete: fan '" + f.name + "' is not valid");
  if (f.cones.empty()) return false;

  const auto wall_map = walls(f);
  std::vector<std::vector<std::size_t>> adjacent(f.cones.size());
  for (const auto& [wall, owners] : wall_map) {
    if (owners.size() != 2) return false;
    adjacent[owners[0]].push_back(owners[1]);
    adjacent[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> seen(f.cones.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t n : adjacent[c])
      if (!seen[n]) {
        seen[n] = true;
        ++reached;
        stack.push_back(n);
      }
  }
  return reached == f.cones.size();
}

}  // namespace toric
