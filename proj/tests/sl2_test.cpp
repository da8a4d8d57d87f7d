#include "toric/sl2.hpp"

#include <random>

#include <gtest/gtest.h>

namespace toric {
void PrintTo(const MultiPoly& p, std::ostream* os) { *os << to_string(p); }
}  // namespace toric

namespace toric::sl2 {
namespace {

const MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b"), c = MultiPoly::variable("c"),
                d = MultiPoly::variable("d"), e = MultiPoly::variable("e"), delta = MultiPoly::variable("delta"),
                x = MultiPoly::variable("x"), y = MultiPoly::variable("y"), z = MultiPoly::variable("z");

TEST(Sl2Test, GeneratorsAsPrinted) {
  const auto g = invariant_ideal_generators();
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g[0], 3 * d * d - 8 * c * e + 4 * delta * e);
  EXPECT_EQ(g[1], c * d - 6 * b * e + delta * d);
  EXPECT_EQ(g[2], 3 * b * d - 48 * a * e + 2 * delta * c + 2 * delta * delta);
  EXPECT_EQ(g[3], c * c - 36 * a * e + 2 * delta * c + delta * delta);
  EXPECT_EQ(g[4], b * c - 6 * a * d + delta * b);
  EXPECT_EQ(g[5], 3 * b * b - 8 * a * c + 4 * delta * a);
  for (const auto& p : g) {
    EXPECT_TRUE(p.is_homogeneous({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}, {"delta", 1}}));
    EXPECT_EQ(p.degree(), 2);
  }
}

TEST(Sl2Test, QuotientMap) {
  const auto s = quotient_map_substitution();
  EXPECT_EQ(s.at("a"), x * x);
  EXPECT_EQ(s.at("b"), 2 * x * y);
  EXPECT_EQ(s.at("c"), 2 * x * z + y * y);
  EXPECT_EQ(s.at("d"), 2 * y * z);
  EXPECT_EQ(s.at("e"), z * z);
  EXPECT_EQ(s.at("delta"), 4 * x * z - y * y);
  // c + delta = 6xz on the image
  EXPECT_EQ((36 * a * e - (c + delta).pow(2)).substitute(s), MultiPoly());
}

TEST(Sl2Test, HandExpansionOfLastGenerator) {
  // 12x^2y^2 - 16x^3z - 8x^2y^2 + 16x^3z - 4x^2y^2 = 0, term by term
  const auto s = quotient_map_substitution();
  EXPECT_EQ((3 * b * b).substitute(s), 12 * x * x * y * y);
  EXPECT_EQ((-8 * a * c).substitute(s), -16 * x.pow(3) * z - 8 * x * x * y * y);
  EXPECT_EQ((4 * delta * a).substitute(s), 16 * x.pow(3) * z - 4 * x * x * y * y);
}

TEST(Sl2Test, AllGeneratorsVanish) {
  const Verification v = verify_invariant_ideal();
  EXPECT_EQ(v.seed, kDefaultSeed);
  ASSERT_EQ(v.generators.size(), 6u);
  for (const auto& g : v.generators) {
    EXPECT_TRUE(g.symbolic_zero) << g.generator << " -> " << g.image;
    EXPECT_EQ(g.image, "0");
    EXPECT_EQ(g.samples, 100u);
    EXPECT_EQ(g.nonzero_samples, 0u);
  }
  EXPECT_TRUE(v.all_invariant());
  EXPECT_EQ(v.involution.size(), 6u);
  EXPECT_TRUE(v.passed());
}

TEST(Sl2Test, SubsetAndSampleCount) {
  VerifyOptions opt;
  opt.generators = {1};
  opt.sample_points = 500;
  const Verification v = verify_invariant_ideal(opt);
  ASSERT_EQ(v.generators.size(), 1u);
  EXPECT_EQ(v.generators[0].index, 1u);
  EXPECT_EQ(v.generators[0].samples, 500u);
  EXPECT_TRUE(v.passed());
  opt.generators = {7};
  EXPECT_THROW(verify_invariant_ideal(opt), std::out_of_range);
}

TEST(Sl2Test, NumericSamplesCatchPerturbations) {
  // A perturbed generator is not in the ideal; random points must notice.
  const auto s = quotient_map_substitution();
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> dist(-10, 10);
  for (const auto& g : invariant_ideal_generators()) {
    const MultiPoly wrong = (g + a * e).substitute(s);
    ASSERT_FALSE(wrong.is_zero());
    int nonzero = 0;
    for (int i = 0; i < 100; ++i)
      if (wrong.evaluate({{"x", dist(rng)}, {"y", dist(rng)}, {"z", dist(rng)}}) != 0) ++nonzero;
    EXPECT_GT(nonzero, 0);
  }
}

TEST(Sl2Test, QuadricFamily) {
  EXPECT_EQ(quadric_family(0), 4 * x * z - y * y - 1);
  EXPECT_EQ(quadric_family(1), 4 * x * z - y * y - delta);
  EXPECT_EQ(quadric_family(2).evaluate({{"x", 1}, {"y", 2}, {"z", 2}, {"delta", 2}}), 0);
  // on the image of the quotient map delta really is the quadric
  const auto s = quotient_map_substitution();
  EXPECT_EQ(quadric_family(1).substitute({{"delta", s.at("delta")}}), MultiPoly());
}

TEST(Sl2Test, RepWeights) {
  EXPECT_EQ(rep_weights(2).weights, (std::vector<std::int64_t>{2, 0, -2}));
  EXPECT_EQ(rep_weights(2).fixed_dimension(), 1u);
  EXPECT_EQ(rep_weights(1).weights, (std::vector<std::int64_t>{1, -1}));
  EXPECT_EQ(rep_weights(1).fixed_dimension(), 0u);
  EXPECT_EQ(rep_weights(4).weights.size(), 5u);
  EXPECT_THROW(rep_weights(-1), std::invalid_argument);
  for (std::int64_t k = 0; k <= 40; ++k) {
    const RepWeights w = rep_weights(k);
    EXPECT_EQ(w.weights.size(), static_cast<std::size_t>(k + 1));
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
      sum += w.weights[i];
      EXPECT_EQ(w.weights[i], -w.weights[w.weights.size() - 1 - i]);
    }
    EXPECT_EQ(sum, 0);
    EXPECT_EQ(w.fixed_dimension(), static_cast<std::size_t>(1 - k % 2));
  }
}

TEST(Sl2Test, EtaleCompatibility) {
  EXPECT_TRUE(etale_codim1_compatible(1, 5));
  EXPECT_FALSE(etale_codim1_compatible(2, 4));
  for (std::int64_t n = 1; n <= 50; ++n) EXPECT_TRUE(etale_codim1_compatible(-1, n));
  EXPECT_THROW(etale_codim1_compatible(1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace toric::sl2
