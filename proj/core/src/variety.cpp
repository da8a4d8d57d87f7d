#include "toric/variety.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toric {

// ---------------------------------------------------------------------------
// Weighted projective spaces

std::string wps_name(const std::array<std::int64_t, 4>& w) {
  return "P(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
         std::to_string(w[3]) + ")";
}

Fan build_wps_fan(const std::array<std::int64_t, 4>& w, WpsBasis basis) {
  for (std::int64_t x : w)
    if (x <= 0) throw std::invalid_argument("build_wps_fan: weights must be positive, got " + wps_name(w));
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) g = std::gcd(g, w[i]);
    if (g != 1) {
      throw std::invalid_argument("build_wps_fan: weights " + wps_name(w) + " are not well-formed (three share the factor " +
                                  std::to_string(g) + ")");
    }
  }

  Fan fan;
  fan.name = wps_name(w);
  fan.cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

  if (basis == WpsBasis::automatic && w[0] == 1) {
    fan.rays = {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1},
                LatticeVector{-w[1], -w[2], -w[3]}};
    return fan;
  }

  // N = Z^4 / Z*w. With u*w*v = (1,0,0,0)^T and v = +-1, x -> (u*x)[1..3]
  // identifies N with Z^3.
  IntegerMatrix column(4, 1);
  for (std::size_t i = 0; i < 4; ++i) column(i, 0) = w[i];
  const SmithForm snf = smith_normal_form(column);
  if (snf.d(0, 0) != 1) throw std::logic_error("build_wps_fan: weights are not coprime");

  for (std::size_t j : {1u, 2u, 3u, 0u}) {
    LatticeVector ray{0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) ray[i] = snf.u(i + 1, j);
    if (!is_primitive(ray)) throw std::logic_error("build_wps_fan: image ray is not primitive");
    fan.rays.push_back(std::move(ray));
  }
  return fan;
}

std::int64_t class_group_rank(const Fan& f) {
  if (!validate_fan(f).valid()) throw std::invalid_argument("class_group_rank: fan '" + f.name + "' is not valid");
  if (!is_complete(f)) throw std::invalid_argument("class_group_rank: fan '" + f.name + "' is not complete");
  return static_cast<std::int64_t>(f.rays.size()) - 3;
}

std::optional<IntegerMatrix> fan_lattice_equivalent(const Fan& a, const Fan& b) {
  if (a.rays.size() != b.rays.size() || a.cones.size() != b.cones.size() || a.cones.empty()) return std::nullopt;
  if (!validate_fan(a).valid() || !validate_fan(b).valid()) return std::nullopt;

  auto sorted = [](ConeIndices c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  std::set<ConeIndices> target_cones;
  for (const auto& c : b.cones) target_cones.insert(sorted(c));

  const SimplicialCone anchor = a.cone(0);
  for (std::size_t j = 0; j < b.cones.size(); ++j) {
    for (IntegerMatrix& g : lattice_equivalences(anchor, b.cone(j))) {
      std::vector<std::size_t> image(a.rays.size());
      bool ok = true;
      for (std::size_t i = 0; i < a.rays.size() && ok; ++i) {
        const LatticeVector mapped = g * a.rays[i];
        const auto it = std::find(b.rays.begin(), b.rays.end(), mapped);
        if (it == b.rays.end()) ok = false;
        else image[i] = static_cast<std::size_t>(it - b.rays.begin());
      }
      if (!ok) continue;
      std::set<ConeIndices> mapped_cones;
      for (const auto& c : a.cones) mapped_cones.insert(sorted({image[c[0]], image[c[1]], image[c[2]]}));
      if (mapped_cones == target_cones) return std::move(g);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Analysis

AnalysisReport analyze(const Fan& f) {
  AnalysisReport report;
  report.fan_name = f.name;
  report.rays = f.rays;

  const FanValidity validity = validate_fan(f);
  report.valid = validity.valid();
  for (const auto& v : validity.violations) report.violations.push_back(std::string(to_string(v.kind)) + ": " + v.message);
  report.q_factorial = report.valid;
  report.complete = report.valid && is_complete(f);

  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    ConeRecord rec;
    rec.rays = f.cones[c];
    try {
      const SimplicialCone cone = f.cone(c);
      rec.multiplicity = to_int64(cone_multiplicity(cone));
      const QuotientTypeResult type = quotient_type(cone);
      rec.type = to_string(type);
      if (const auto* cyclic = std::get_if<CyclicQuotientType>(&type)) rec.terminal = is_terminal(*cyclic);
      else rec.terminal = cone_is_terminal(cone);
    } catch (const std::invalid_argument&) {
      rec.type = "invalid";
    } catch (const std::out_of_range&) {
      rec.type = "invalid";
    }
    report.cones.push_back(std::move(rec));
  }
  report.all_terminal =
      std::all_of(report.cones.begin(), report.cones.end(), [](const ConeRecord& r) { return r.terminal; });
  if (report.complete) report.class_rank = class_group_rank(f);
  return report;
}

// ---------------------------------------------------------------------------
// Linking equations

std::vector<LinkingSolution> solve_linking_equations(std::int64_t bound) {
  if (bound < 2) throw std::invalid_argument("solve_linking_equations: bound must be >= 2");
  std::vector<LinkingSolution> out;
  for (std::int64_t n = 3; n <= bound; ++n) {
    // m = mu*n - 1 with 1 < m < n
    for (std::int64_t mu = 1;; ++mu) {
      const std::int64_t m = mu * n - 1;
      if (m >= n) break;
      if (m <= 1 || std::gcd(n, m) != 1) continue;
      if ((n + 1) % m != 0) continue;
      out.push_back({n, m, mu, (n + 1) / m});
    }
  }
  return out;
}

bool Case1Classification::all_matched() const {
  return std::all_of(records.begin(), records.end(), [](const Case1Record& r) { return r.matched; });
}

namespace {

Fan case1_fan(const LatticeVector& v, const std::string& name) {
  Fan fan;
  fan.name = name;
  fan.rays = {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}, LatticeVector{0, 0, 1}, v};
  // sigma1 = (e1,e2,e3), sigma2 = (e1,e2,v), sigma3 = (e1,e3,v), sigma4 = (e2,e3,v)
  fan.cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return fan;
}

std::multiset<std::string> cone_types(const AnalysisReport& r) {
  std::multiset<std::string> out;
  for (const auto& c : r.cones) out.insert(c.type);
  return out;
}

}  // namespace

Case1Classification classify_case1(std::int64_t bound) {
  Case1Classification result;
  result.bound = bound;
  result.solutions = solve_linking_equations(bound);

  for (const LinkingSolution& s : result.solutions) {
    Case1Record rec;
    rec.solution = s;
    const LatticeVector v{-s.m, -s.n, -1};
    rec.fan = case1_fan(v, "case1(n=" + std::to_string(s.n) + ",m=" + std::to_string(s.m) + ")");

    const std::array<std::int64_t, 4> target_weights{1, 1, s.m, s.n};
    const Fan target = build_wps_fan(target_weights);
    rec.target = wps_name(target_weights);

    const std::multiset<std::string> expected_types{
        "smooth", "smooth", to_string(normalize_type(CyclicQuotientType(s.n, {1, 1, -1}))),
        to_string(normalize_type(CyclicQuotientType(s.m, {1, 1, -1})))};

    const AnalysisReport base = analyze(rec.fan);
    for (const auto& c : base.cones)
      if (c.type != "smooth") rec.singularities.push_back(c.type);

    std::array<std::size_t, 3> perm{0, 1, 2};
    rec.matched = true;
    do {
      Case1Labeling lab;
      lab.permutation = perm;
      LatticeVector w{0, 0, 0};
      for (std::size_t i = 0; i < 3; ++i) w[i] = v[perm[i]];
      lab.fan = case1_fan(w, rec.fan.name);
      lab.analysis = analyze(lab.fan);
      lab.types_match = lab.analysis.valid && lab.analysis.complete && lab.analysis.all_terminal &&
                        cone_types(lab.analysis) == expected_types;
      lab.equivalence = fan_lattice_equivalent(lab.fan, target);
      rec.matched = rec.matched && lab.types_match && lab.equivalence.has_value();
      rec.labelings.push_back(std::move(lab));
    } while (std::next_permutation(perm.begin(), perm.end()));

    rec.verdict = rec.matched ? "X is isomorphic to " + rec.target
                              : "reconstructed fan is not lattice-equivalent to " + rec.target;
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace toric
