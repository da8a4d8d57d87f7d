#include "toric/poly.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string_view>

namespace toric {
namespace {

constexpr std::array<std::string_view, 9> kCanonicalVariables{"a", "b", "c", "d", "e", "delta", "x", "y", "z"};

std::size_t rank_of(const std::string& name) {
  const auto it = std::find(kCanonicalVariables.begin(), kCanonicalVariables.end(), name);
  return static_cast<std::size_t>(it - kCanonicalVariables.begin());
}

std::size_t index_of(const std::vector<std::string>& vars, const std::string& name) {
  const auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? vars.size() : static_cast<std::size_t>(it - vars.begin());
}

std::uint64_t total(const MultiPoly::Exponents& e) {
  std::uint64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

void add_term(MultiPoly::Terms& terms, const MultiPoly::Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

bool variable_precedes(const std::string& a, const std::string& b) {
  const std::size_t ra = rank_of(a), rb = rank_of(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end(), variable_precedes);
  return out;
}

bool MultiPoly::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total(a), db = total(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly::MultiPoly(long long c) : MultiPoly(Integer(c)) {}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("MultiPoly::variable: empty name");
  MultiPoly p;
  p.variables_ = {name};
  p.terms_.emplace(Exponents{1}, Integer(1));
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total(e)));
  return d;
}

std::int64_t MultiPoly::weighted_degree(const Exponents& monomial,
                                        const std::map<std::string, std::int64_t>& weights) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    const auto it = weights.find(variables_[i]);
    if (it != weights.end()) d += it->second * monomial[i];
  }
  return d;
}

bool MultiPoly::is_homogeneous(const std::map<std::string, std::int64_t>& weights) const {
  if (terms_.empty()) return true;
  const std::int64_t d = weighted_degree(terms_.begin()->first, weights);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return weighted_degree(t.first, weights) == d; });
}

Integer MultiPoly::coefficient(const std::map<std::string, std::uint32_t>& monomial) const {
  Exponents e(variables_.size(), 0);
  for (const auto& [name, power] : monomial) {
    if (power == 0) continue;
    const std::size_t i = index_of(variables_, name);
    if (i == variables_.size()) return 0;
    e[i] = power;
  }
  const auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

MultiPoly MultiPoly::over(const std::vector<std::string>& variables) const {
  if (variables == variables_) return *this;
  std::vector<std::size_t> position(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) position[i] = index_of(variables, variables_[i]);

  MultiPoly out;
  out.variables_ = variables;
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (position[i] == variables.size())
        throw std::invalid_argument("MultiPoly::over: variable '" + variables_[i] + "' is not in the target list");
      f[position[i]] = e[i];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  const auto vars = merge_variables(variables_, other.variables_);
  *this = over(vars);
  const MultiPoly rhs = other.over(vars);
  for (const auto& [e, c] : rhs.terms_) add_term(terms_, e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  const auto vars = merge_variables(variables_, other.variables_);
  const MultiPoly lhs = over(vars);
  const MultiPoly rhs = other.over(vars);
  Terms product;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(product, e, ca * cb);
    }
  variables_ = vars;
  terms_ = std::move(product);
  return *this;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
  std::vector<MultiPoly> images;
  images.reserve(variables_.size());
  for (const auto& v : variables_) {
    const auto it = assignment.find(v);
    images.push_back(it == assignment.end() ? variable(v) : it->second);
  }
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= images[i].pow(e[i]);
    out += term;
  }
  return out;
}

Integer MultiPoly::evaluate(const std::map<std::string, Integer>& values) const {
  std::vector<const Integer*> value_of(variables_.size(), nullptr);
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto it = values.find(variables_[i]);
    if (it != values.end()) value_of[i] = &it->second;
  }
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!value_of[i]) throw std::invalid_argument("MultiPoly::evaluate: no value for '" + variables_[i] + "'");
      term *= boost::multiprecision::pow(*value_of[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).is_zero(); }

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += p.variables()[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    const Integer magnitude = abs(c);
    if (monomial.empty()) out += magnitude.str();
    else if (magnitude == 1) out += monomial;
    else out += magnitude.str() + "*" + monomial;
  }
  return out;
}

}  // namespace toric
