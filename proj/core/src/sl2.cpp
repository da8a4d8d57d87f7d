#include "toric/sl2.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace toric::sl2 {
namespace {

const MultiPoly a = MultiPoly::variable("a");
const MultiPoly b = MultiPoly::variable("b");
const MultiPoly c = MultiPoly::variable("c");
const MultiPoly d = MultiPoly::variable("d");
const MultiPoly e = MultiPoly::variable("e");
const MultiPoly delta = MultiPoly::variable("delta");
const MultiPoly x = MultiPoly::variable("x");
const MultiPoly y = MultiPoly::variable("y");
const MultiPoly z = MultiPoly::variable("z");

}  // namespace

std::vector<MultiPoly> invariant_ideal_generators() {
  return {
      3 * d * d - 8 * c * e + 4 * delta * e,
      c * d - 6 * b * e + delta * d,
      3 * b * d - 48 * a * e + 2 * delta * c + 2 * delta * delta,
      c * c - 36 * a * e + 2 * delta * c + delta * delta,
      b * c - 6 * a * d + delta * b,
      3 * b * b - 8 * a * c + 4 * delta * a,
  };
}

std::map<std::string, MultiPoly> quotient_map_substitution() {
  return {
      {"a", x * x},
      {"b", 2 * x * y},
      {"c", 2 * x * z + y * y},
      {"d", 2 * y * z},
      {"e", z * z},
      {"delta", 4 * x * z - y * y},
  };
}

MultiPoly quadric_family(std::uint32_t k) { return 4 * x * z - y * y - delta.pow(k); }

std::size_t RepWeights::fixed_dimension() const {
  return static_cast<std::size_t>(std::count(weights.begin(), weights.end(), 0));
}

RepWeights rep_weights(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("rep_weights: k must be >= 0");
  RepWeights r;
  r.k = k;
  for (std::int64_t w = k; w >= -k; w -= 2) r.weights.push_back(w);
  return r;
}

bool etale_codim1_compatible(std::int64_t a_weight, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("etale_codim1_compatible: n must be >= 1");
  const std::int64_t residue = ((a_weight % n) + n) % n;
  return std::gcd(residue, n) == 1;
}

bool Verification::all_vanish() const {
  return std::all_of(generators.begin(), generators.end(), [](const GeneratorCheck& g) { return g.symbolic_zero; });
}

bool Verification::all_invariant() const {
  return std::all_of(involution.begin(), involution.end(), [](const InvolutionCheck& i) { return i.invariant; });
}

bool Verification::numeric_agrees() const {
  return std::all_of(generators.begin(), generators.end(), [](const GeneratorCheck& g) { return g.agrees(); });
}

Verification verify_invariant_ideal(const VerifyOptions& options) {
  const auto gens = invariant_ideal_generators();
  const auto map = quotient_map_substitution();

  std::vector<std::size_t> selection = options.generators;
  if (selection.empty()) {
    selection.resize(gens.size());
    std::iota(selection.begin(), selection.end(), std::size_t{1});
  }
  for (std::size_t i : selection)
    if (i < 1 || i > gens.size())
      throw std::out_of_range("verify_invariant_ideal: generator index " + std::to_string(i) + " outside 1..6");

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coord(-options.sample_range, options.sample_range);
  std::vector<std::map<std::string, Integer>> points(options.sample_points);
  for (auto& p : points) {
    p["x"] = coord(rng);
    p["y"] = coord(rng);
    p["z"] = coord(rng);
  }

  Verification out;
  out.seed = options.seed;
  out.sample_points = options.sample_points;

  // Values of a..delta at each sample, computed from the map directly.
  std::vector<std::map<std::string, Integer>> images(points.size());
  for (std::size_t s = 0; s < points.size(); ++s)
    for (const auto& [name, poly] : map) images[s][name] = poly.evaluate(points[s]);

  for (std::size_t i : selection) {
    const MultiPoly& g = gens[i - 1];
    GeneratorCheck check;
    check.index = i;
    check.generator = to_string(g);
    const MultiPoly image = g.substitute(map);
    check.image = to_string(image);
    check.symbolic_zero = image.is_zero();
    check.samples = points.size();
    for (const auto& values : images)
      if (g.evaluate(values) != 0) ++check.nonzero_samples;
    out.generators.push_back(std::move(check));
  }

  const std::map<std::string, MultiPoly> flip{{"x", -x}, {"y", -y}, {"z", -z}};
  for (const std::string name : {"a", "b", "c", "d", "e", "delta"}) {
    const MultiPoly& image = map.at(name);
    out.involution.push_back({name, to_string(image), image.substitute(flip) == image});
  }
  return out;
}

}  // namespace toric::sl2
