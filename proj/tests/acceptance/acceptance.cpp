// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "oracle/parallelepiped.hpp"
#include "toric/quotient.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = toricctl::run(args, out, err);
  return {code, out.str() + err.str()};
}

json cli_json(std::vector<std::string> args, int* code) {
  args.push_back("--format");
  args.push_back("json");
  const CliRun r = cli(std::move(args));
  *code = r.code;
  return json::parse(r.out);
}

const json* find_cone(const json& report, std::vector<int> rays) {
  for (const auto& c : report["cones"])
    if (c["rays"].get<std::vector<int>>() == rays) return &c;
  return nullptr;
}

bool cone_is(const json& report, std::vector<int> rays, int mult, const std::string& type, bool terminal) {
  const json* c = find_cone(report, std::move(rays));
  return c && (*c)["multiplicity"] == mult && (*c)["type"] == type && (*c)["terminal"] == terminal;
}

// ---------------------------------------------------------------------------

Outcome ac1() {
  Outcome o;
  int code = 0;
  const json doc = cli_json({"wps", "1,1,2,3"}, &code);
  const json& r = doc["report"];
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(r["valid"] == true && r["complete"] == true, "fan not valid and complete");
  o.require(r["rays"] == json::parse("[[1,0,0],[0,1,0],[0,0,1],[-1,-2,-3]]"), "rays " + r["rays"].dump());
  o.require(r["cones"].size() == 4, "cone count");
  o.require(cone_is(r, {0, 1, 2}, 1, "smooth", true), "cone (e1,e2,e3)");
  o.require(cone_is(r, {1, 2, 3}, 1, "smooth", true), "cone (e2,e3,v)");
  o.require(cone_is(r, {0, 1, 3}, 3, "1/3(1,1,2)", true), "cone (e1,e2,v)");
  o.require(cone_is(r, {0, 2, 3}, 2, "1/2(1,1,1)", true), "cone (e1,e3,v)");
  o.require(r["class_rank"] == 1, "class rank " + r["class_rank"].dump());
  o.require(r["all_terminal"] == true, "all_terminal");
  const CliRun text = cli({"wps", "1,1,2,3"});
  o.require(text.code == 0 && text.out.find("1/3(1,1,2)") != std::string::npos, "text output");
  return o;
}

Outcome ac2() {
  Outcome o;
  int code = 0;
  const json doc = cli_json({"classify-case1", "--bound", "1000000"}, &code);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(doc["solutions"] == json::parse(R"([{"n":3,"m":2,"mu":1,"nu":2}])"), "solutions " + doc["solutions"].dump());
  o.require(doc["records"].size() == 1, "record count");
  if (o.ok) {
    const json& rec = doc["records"][0];
    o.require(rec["target"] == "P(1,1,2,3)", "target");
    o.require(rec["matched"] == true, "not lattice-equivalent");
    o.require(rec["verdict"] == "X is isomorphic to P(1,1,2,3)", "verdict " + rec["verdict"].dump());
    for (const auto& lab : rec["labelings"]) o.require(!lab["equivalence"].is_null(), "labeling without equivalence");
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  int code = 0;
  const json doc = cli_json({"verify-sl2"}, &code);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(doc["vanishing"] == 6 && doc["generators"].size() == 6, "vanishing " + doc["vanishing"].dump());
  for (const auto& g : doc["generators"]) o.require(g["image"] == "0", "generator image " + g["image"].dump());
  o.require(doc["involution"].size() == 6, "involution checks");
  for (const auto& i : doc["involution"]) o.require(i["invariant"] == true, "not invariant: " + i["variable"].dump());
  const CliRun text = cli({"verify-sl2"});
  o.require(text.out.find("6/6 generators vanish") != std::string::npos, "text summary");
  return o;
}

Outcome ac4() {
  Outcome o;
  std::size_t types = 0;
  for (std::int64_t r = 1; r <= 50 && o.ok; ++r) {
    std::set<toric::CyclicQuotientType> passing;
    for (std::int64_t a = 0; a < r || (r == 1 && a == 0); ++a)
      for (std::int64_t b = a; b < r || (r == 1 && b == 0); ++b)
        for (std::int64_t c = b; c < r || (r == 1 && c == 0); ++c) {
          if (std::gcd(std::gcd(a, b), std::gcd(c, r)) != 1) continue;
          const toric::CyclicQuotientType t(r, {a, b, c});
          if (toric::normalize_type(t) != t) continue;
          ++types;
          if (toric::is_terminal(t)) passing.insert(t);
        }
    std::set<toric::CyclicQuotientType> family;
    for (std::int64_t b = 0; b < r || (r == 1 && b == 0); ++b)
      if (std::gcd(b, r) == 1) family.insert(toric::normalize_type(toric::CyclicQuotientType(r, {1, r - 1, b})));
    o.require(passing == family, "mismatch at r=" + std::to_string(r));
  }
  if (o.ok) o.detail = std::to_string(types) + " normalized types";
  return o;
}

Outcome ac5() {
  Outcome o;
  std::mt19937_64 rng(0xac5);
  std::uniform_int_distribution<int> dist(-3, 3);
  int checked = 0, noncyclic = 0;
  while (checked < 500 && o.ok) {
    oracle::Vec3 r[3];
    for (auto& v : r)
      for (auto& x : v) x = dist(rng);
    bool primitive = true;
    for (const auto& v : r) primitive = primitive && std::gcd(std::gcd(v[0], v[1]), v[2]) == 1;
    if (!primitive) continue;
    const std::int64_t d = oracle::det3(r[0], r[1], r[2]);
    if (d == 0 || std::abs(d) > 12) continue;

    const toric::SimplicialCone cone(toric::LatticeVector{r[0][0], r[0][1], r[0][2]},
                                     toric::LatticeVector{r[1][0], r[1][1], r[1][2]},
                                     toric::LatticeVector{r[2][0], r[2][1], r[2][2]});
    const auto expected = oracle::describe_group(r[0], r[1], r[2]);
    const auto got = toric::quotient_type(cone);
    const auto* cyclic = std::get_if<toric::CyclicQuotientType>(&got);
    const std::string where = "cone #" + std::to_string(checked) + " " + toric::to_string(got);
    o.require(expected.cyclic == (cyclic != nullptr), "cyclicity differs at " + where);
    if (!o.ok) break;
    if (cyclic) {
      o.require(cyclic->order() == expected.order, "order differs at " + where);
      o.require(cyclic->weights() == *expected.normalized_weights, "weights differ at " + where);
    } else {
      ++noncyclic;
      const auto& factors = std::get<toric::NonCyclicType>(got).factors;
      toric::Integer order = 1;
      for (const auto& f : factors) order *= f;
      o.require(order == expected.order, "order differs at " + where);
      std::vector<toric::Integer> nontrivial;
      for (auto f : expected.factors)
        if (f > 1) nontrivial.emplace_back(f);
      o.require(factors == nontrivial, "invariant factors differ at " + where);
    }
    ++checked;
  }
  o.require(noncyclic > 0, "sample contained no non-cyclic cone");
  if (o.ok) o.detail = std::to_string(checked) + " cones, " + std::to_string(noncyclic) + " non-cyclic";
  return o;
}

bool hermite_shape(const toric::IntegerMatrix& h) {
  std::size_t row = 0;
  std::optional<std::size_t> last_pivot;
  for (; row < h.rows(); ++row) {
    std::optional<std::size_t> pivot;
    for (std::size_t c = 0; c < h.cols() && !pivot; ++c)
      if (h(row, c) != 0) pivot = c;
    if (!pivot) break;
    if (last_pivot && *pivot <= *last_pivot) return false;
    if (h(row, *pivot) <= 0) return false;
    for (std::size_t above = 0; above < row; ++above)
      if (h(above, *pivot) < 0 || h(above, *pivot) >= h(row, *pivot)) return false;
    for (std::size_t below = row + 1; below < h.rows(); ++below)
      if (h(below, *pivot) != 0) return false;
    last_pivot = pivot;
  }
  for (; row < h.rows(); ++row)
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (h(row, c) != 0) return false;
  return true;
}

bool smith_shape(const toric::IntegerMatrix& d) {
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n) {
      if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
      if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
    }
  }
  return true;
}

Outcome ac6() {
  Outcome o;
  std::mt19937_64 rng(0xac6);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    toric::IntegerMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = dist(rng);
    const std::string where = " (matrix #" + std::to_string(i) + ")";
    const auto hnf = toric::hermite_normal_form(m);
    o.require(toric::is_unimodular(hnf.u), "HNF factor not unimodular" + where);
    o.require(hnf.u * m == hnf.h, "U*M != H" + where);
    o.require(hermite_shape(hnf.h), "H not in Hermite form" + where);
    const auto snf = toric::smith_normal_form(m);
    o.require(toric::is_unimodular(snf.u) && toric::is_unimodular(snf.v), "SNF factors not unimodular" + where);
    o.require(snf.u * m * snf.v == snf.d, "U*M*V != D" + where);
    o.require(smith_shape(snf.d), "D not a divisibility chain" + where);
    o.require(abs(toric::det(m)) == snf.d(0, 0) * snf.d(1, 1) * snf.d(2, 2), "|det| != product of factors" + where);
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  int code = 0;
  const json p3 = cli_json({"wps", "1,1,1,1"}, &code)["report"];
  o.require(code == 0, "wps 1,1,1,1 exit code");
  o.require(p3["valid"] == true && p3["complete"] == true, "P3 fan not valid and complete");
  for (const auto& c : p3["cones"]) o.require(c["type"] == "smooth", "P3 cone not smooth");
  o.require(p3["class_rank"] == 1, "P3 class rank");

  const json p1112 = cli_json({"wps", "1,1,1,2"}, &code)["report"];
  o.require(code == 0, "wps 1,1,1,2 exit code");
  int singular = 0;
  for (const auto& c : p1112["cones"]) {
    if (c["type"] == "smooth") continue;
    ++singular;
    o.require(c["type"] == "1/2(1,1,1)" && c["terminal"] == true, "P(1,1,1,2) singular cone " + c.dump());
  }
  o.require(singular == 1, "P(1,1,1,2) has " + std::to_string(singular) + " singular cones");
  o.require(p1112["class_rank"] == 1, "P(1,1,1,2) class rank");
  return o;
}

Outcome ac8() {
  Outcome o;
  const CliRun a = cli({"reproduce-paper", "--format", "json"});
  const CliRun b = cli({"reproduce-paper", "--format", "json"});
  o.require(a.code == 0, "exit code " + std::to_string(a.code));
  o.require(a.out == b.out, "JSON differs between runs");
  const json doc = json::parse(a.out);
  o.require(doc["ok"] == true && doc["failed"] == 0, "assertions failed: " + doc["first_failure"].dump());
  if (o.ok) o.detail = std::to_string(doc["passed"].get<int>()) + " assertions";
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "wps 1,1,2,3 analysis", 0.1, ac1},
      {"AC2", "classify-case1 --bound 1000000", 1.0, ac2},
      {"AC3", "verify-sl2 generators and involution", 0.1, ac3},
      {"AC4", "terminal cyclic types, r <= 50", 5.0, ac4},
      {"AC5", "quotient type vs parallelepiped oracle, 500 cones", 10.0, ac5},
      {"AC6", "HNF/SNF identities, 1000 matrices", 5.0, ac6},
      {"AC7", "wps 1,1,1,1 and 1,1,1,2", 0.0, ac7},
      {"AC8", "reproduce-paper deterministic JSON", 0.0, ac8},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.ok = false;
      o.detail = "too slow";
    }
    if (!o.ok) ++failures;

    std::ostringstream timing;
    timing << std::fixed << std::setprecision(3) << seconds << "s";
    if (c.limit_seconds > 0) timing << " < " << c.limit_seconds << "s";
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << "  (" << timing.str() << ")";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria pass\n";
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
