#include "toric/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace toric {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t r) {
  const std::int64_t m = a % r;
  return m < 0 ? m + r : m;
}

// (k * a) mod r for 0 <= k, a < r.
std::int64_t mulmod(std::int64_t k, std::int64_t a, std::int64_t r) {
  if (r < (std::int64_t{1} << 31)) return (k * a) % r;
  return to_int64(Integer(k) * a % r);
}

Rational frac(const Rational& q) {
  const Integer fl = floor_div(numerator(q), denominator(q));
  return q - Rational(fl);
}

}  // namespace

CyclicQuotientType::CyclicQuotientType(std::int64_t r, std::array<std::int64_t, 3> weights) : r_(r) {
  if (r < 1) throw std::invalid_argument("CyclicQuotientType: order must be >= 1");
  std::int64_t g = r;
  for (std::size_t i = 0; i < 3; ++i) {
    weights_[i] = mod(weights[i], r);
    g = std::gcd(g, weights_[i]);
  }
  if (g != 1) {
    throw std::invalid_argument("CyclicQuotientType: action of 1/" + std::to_string(r) +
                                " is not effective (gcd of weights and order is " + std::to_string(g) + ")");
  }
}

std::string to_string(const CyclicQuotientType& t) {
  if (t.is_smooth()) return "smooth";
  const auto& a = t.weights();
  return "1/" + std::to_string(t.order()) + "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
         std::to_string(a[2]) + ")";
}

CyclicQuotientType parse_cyclic_type(const std::string& text) {
  if (text == "smooth") return CyclicQuotientType::smooth();
  static const std::regex pattern(R"(\s*1/(\d+)\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("malformed quotient type '" + text + "'");
  return CyclicQuotientType(std::stoll(m[1]), {std::stoll(m[2]), std::stoll(m[3]), std::stoll(m[4])});
}

std::string to_string(const QuotientTypeResult& t) {
  if (const auto* cyclic = std::get_if<CyclicQuotientType>(&t)) return to_string(*cyclic);
  const auto& factors = std::get<NonCyclicType>(t).factors;
  std::string out = "noncyclic(";
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + factors[i].str();
  return out + ")";
}

CyclicQuotientType normalize_type(const CyclicQuotientType& t) {
  const std::int64_t r = t.order();
  if (r == 1) return t;
  std::optional<std::array<std::int64_t, 3>> best;
  for (std::int64_t u = 1; u < r; ++u) {
    if (std::gcd(u, r) != 1) continue;
    std::array<std::int64_t, 3> w{};
    for (std::size_t i = 0; i < 3; ++i) w[i] = mulmod(u, t.weights()[i], r);
    std::sort(w.begin(), w.end());
    if (!best || w < *best) best = w;
  }
  return CyclicQuotientType(r, *best);
}

QuotientTypeResult quotient_type(const SimplicialCone& c) {
  const IntegerMatrix rays = c.ray_matrix();
  if (det(rays) == 0) throw std::invalid_argument("quotient_type: degenerate cone");
  const SmithForm snf = smith_normal_form(rays);

  std::vector<Integer> nontrivial;
  for (std::size_t i = 0; i < 3; ++i)
    if (snf.d(i, i) > 1) nontrivial.push_back(snf.d(i, i));
  if (nontrivial.size() >= 2) return NonCyclicType{std::move(nontrivial)};
  if (nontrivial.empty()) return CyclicQuotientType::smooth();

  // u*R*v = D and only d3 > 1: the lift u^-1 e3 of the generator has ray
  // coordinates R^-1 u^-1 e3 = v e3 / d3.
  const Integer& r = snf.d(2, 2);
  std::array<std::int64_t, 3> weights{};
  for (std::size_t i = 0; i < 3; ++i) weights[i] = to_int64(floor_mod(snf.v(i, 2), r));
  return normalize_type(CyclicQuotientType(to_int64(r), weights));
}

Rational reid_tai_sum(const CyclicQuotientType& t, std::int64_t k) {
  if (k < 1 || k > t.order() - 1)
    throw std::out_of_range("reid_tai_sum: k = " + std::to_string(k) + " outside 1.." + std::to_string(t.order() - 1));
  Integer numerator_sum = 0;
  for (std::int64_t a : t.weights()) numerator_sum += floor_mod(Integer(k) * a, Integer(t.order()));
  return Rational(numerator_sum, Integer(t.order()));
}

namespace {

// Every k in 1..r-1 has r * reid_tai_sum(t, k) > r (strict) or >= r.
bool ages_exceed_one(const CyclicQuotientType& t, bool strict) {
  const std::int64_t r = t.order();
  for (std::int64_t k = 1; k < r; ++k) {
    std::int64_t scaled = 0;
    for (std::int64_t a : t.weights()) scaled += mulmod(k, a, r);
    if (strict ? scaled <= r : scaled < r) return false;
  }
  return true;
}

}  // namespace

bool is_terminal(const CyclicQuotientType& t) { return ages_exceed_one(t, true); }

bool is_canonical(const CyclicQuotientType& t) { return ages_exceed_one(t, false); }

std::vector<RationalVector> group_elements(const SimplicialCone& c) {
  const SmithForm snf = smith_normal_form(c.ray_matrix());
  // Element sum_i k_i (u^-1 e_i) has ray coordinates sum_i k_i v e_i / d_i.
  std::array<Integer, 3> d{snf.d(0, 0), snf.d(1, 1), snf.d(2, 2)};
  std::vector<RationalVector> out;
  std::array<Integer, 3> k{0, 0, 0};
  for (;;) {
    RationalVector coords(3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (k[j] != 0) coords[i] += Rational(k[j] * snf.v(i, j), d[j]);
    for (auto& x : coords) x = frac(x);
    out.push_back(std::move(coords));

    std::size_t pos = 0;
    while (pos < 3 && ++k[pos] == d[pos]) k[pos++] = 0;
    if (pos == 3) break;
  }
  return out;
}

bool cone_is_terminal(const SimplicialCone& c) {
  const auto elements = group_elements(c);
  return std::all_of(elements.begin() + 1, elements.end(), [](const RationalVector& x) {
    return x[0] + x[1] + x[2] > 1;
  });
}

bool cone_is_canonical(const SimplicialCone& c) {
  const auto elements = group_elements(c);
  return std::all_of(elements.begin() + 1, elements.end(), [](const RationalVector& x) {
    return x[0] + x[1] + x[2] >= 1;
  });
}

SimplicialCone standard_cone(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("standard_cone: n must be >= 1");
  return SimplicialCone({1, 0, 0}, {0, 0, 1}, LatticeVector({-(n - 1), n, -1}));
}

std::optional<IntegerMatrix> lattice_equivalent(const SimplicialCone& a, const SimplicialCone& b) {
  auto all = lattice_equivalences(a, b);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<IntegerMatrix> lattice_equivalences(const SimplicialCone& a, const SimplicialCone& b) {
  std::vector<IntegerMatrix> out;
  const IntegerMatrix ra = a.ray_matrix();
  const Integer det_a = det(ra);
  if (abs(det_a) != abs(det(b.ray_matrix()))) return out;
  const IntegerMatrix adj_a = adjugate(ra);

  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    // g * ra = rb_perm  =>  g = rb_perm * adj(ra) / det(ra)
    const IntegerMatrix rb = IntegerMatrix::from_columns(std::vector{b.ray(perm[0]), b.ray(perm[1]), b.ray(perm[2])});
    IntegerMatrix g = rb * adj_a;
    bool integral = true;
    for (std::size_t i = 0; i < 3 && integral; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (g(i, j) % det_a != 0) {
          integral = false;
          break;
        }
        g(i, j) /= det_a;
      }
    if (integral && is_unimodular(g)) out.push_back(std::move(g));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace toric
