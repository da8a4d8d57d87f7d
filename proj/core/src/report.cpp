#include "toric/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace toric {
namespace {

using ojson = nlohmann::ordered_json;

std::string indices(const ConeIndices& c) {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_json(const AnalysisReport& r, int indent) {
  ojson doc;
  doc["fan"] = r.fan_name;
  doc["rays"] = ojson::array();
  for (const auto& ray : r.rays) {
    auto row = ojson::array();
    for (const auto& x : ray.entries()) row.push_back(to_int64(x));
    doc["rays"].push_back(std::move(row));
  }
  doc["valid"] = r.valid;
  doc["violations"] = r.violations;
  doc["complete"] = r.complete;
  doc["q_factorial"] = r.q_factorial;
  doc["cones"] = ojson::array();
  for (const auto& c : r.cones) {
    ojson cone;
    cone["rays"] = {c.rays[0], c.rays[1], c.rays[2]};
    cone["multiplicity"] = c.multiplicity;
    cone["type"] = c.type;
    cone["terminal"] = c.terminal;
    doc["cones"].push_back(std::move(cone));
  }
  doc["class_rank"] = r.class_rank ? ojson(*r.class_rank) : ojson(nullptr);
  doc["all_terminal"] = r.all_terminal;
  return doc.dump(indent);
}

AnalysisReport analysis_report_from_json(std::string_view text) {
  try {
    const ojson doc = ojson::parse(text.begin(), text.end());
    AnalysisReport r;
    r.fan_name = doc.at("fan").get<std::string>();
    for (const auto& row : doc.at("rays")) {
      std::vector<Integer> entries;
      for (const auto& x : row) entries.emplace_back(x.get<std::int64_t>());
      r.rays.emplace_back(std::move(entries));
    }
    r.valid = doc.at("valid").get<bool>();
    r.violations = doc.at("violations").get<std::vector<std::string>>();
    r.complete = doc.at("complete").get<bool>();
    r.q_factorial = doc.at("q_factorial").get<bool>();
    for (const auto& c : doc.at("cones")) {
      ConeRecord rec;
      const auto& idx = c.at("rays");
      if (idx.size() != 3) throw std::invalid_argument("cone record needs 3 ray indices");
      for (std::size_t k = 0; k < 3; ++k) rec.rays[k] = idx[k].get<std::size_t>();
      rec.multiplicity = c.at("multiplicity").get<std::int64_t>();
      rec.type = c.at("type").get<std::string>();
      rec.terminal = c.at("terminal").get<bool>();
      r.cones.push_back(std::move(rec));
    }
    if (!doc.at("class_rank").is_null()) r.class_rank = doc.at("class_rank").get<std::int64_t>();
    r.all_terminal = doc.at("all_terminal").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed analysis report: ") + e.what());
  }
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "fan " << r.fan_name << ": " << r.rays.size() << " rays, " << r.cones.size() << " maximal cones\n";
  os << "  valid: " << yes_no(r.valid) << "   complete: " << yes_no(r.complete)
     << "   Q-factorial: " << yes_no(r.q_factorial) << '\n';
  for (const auto& v : r.violations) os << "  violation: " << v << '\n';
  os << "  rays:\n";
  for (std::size_t i = 0; i < r.rays.size(); ++i) os << "    " << i << "  " << r.rays[i] << '\n';
  os << "  " << std::left << std::setw(6) << "cone" << std::setw(10) << "rays" << std::setw(6) << "mult"
     << std::setw(18) << "type"
     << "terminal\n";
  for (std::size_t i = 0; i < r.cones.size(); ++i) {
    const auto& c = r.cones[i];
    os << "  " << std::setw(6) << i << std::setw(10) << indices(c.rays) << std::setw(6) << c.multiplicity
       << std::setw(18) << c.type << yes_no(c.terminal) << '\n';
  }
  os << "  class rank (rho over Q): " << (r.class_rank ? std::to_string(*r.class_rank) : std::string("n/a")) << '\n';
  os << "  all terminal: " << yes_no(r.all_terminal) << '\n';
  return os.str();
}

}  // namespace toric
