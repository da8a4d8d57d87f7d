#include "toric/fan_io.hpp"

#include <climits>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace toric {
namespace {

using nlohmann::json;

// Byte offset -> 1-based line and column.
std::string location(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw FanFormatError("fan file: field '" + field + "': " + what);
}

long long integer_at(const json& value, const std::string& field) {
  if (!value.is_number_integer()) fail(field, "expected an integer, got " + value.dump());
  if (value.is_number_unsigned() && value.get<unsigned long long>() > static_cast<unsigned long long>(LLONG_MAX))
    fail(field, "integer out of range");
  return value.get<long long>();
}

}  // namespace

Fan parse_fan_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FanFormatError("fan file: JSON syntax error at " + location(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                         e.what());
  }
  if (!doc.is_object()) throw FanFormatError("fan file: top level must be a JSON object");

  Fan fan;
  if (!doc.contains("name")) fail("name", "missing");
  if (!doc["name"].is_string()) fail("name", "expected a string");
  fan.name = doc["name"].get<std::string>();

  if (!doc.contains("dim")) fail("dim", "missing");
  if (integer_at(doc["dim"], "dim") != 3) fail("dim", "only dim = 3 is supported, got " + doc["dim"].dump());

  if (!doc.contains("rays") || !doc["rays"].is_array()) fail("rays", "expected an array of integer triples");
  const json& rays = doc["rays"];
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string field = "rays[" + std::to_string(i) + "]";
    if (!rays[i].is_array() || rays[i].size() != 3) fail(field, "expected 3 integers");
    std::vector<Integer> entries;
    for (std::size_t k = 0; k < 3; ++k) entries.emplace_back(integer_at(rays[i][k], field + "[" + std::to_string(k) + "]"));
    fan.rays.emplace_back(std::move(entries));
  }

  if (!doc.contains("cones") || !doc["cones"].is_array()) fail("cones", "expected an array of index triples");
  const json& cones = doc["cones"];
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string field = "cones[" + std::to_string(c) + "]";
    if (!cones[c].is_array() || cones[c].size() != 3) fail(field, "expected 3 ray indices");
    ConeIndices idx{};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string sub = field + "[" + std::to_string(k) + "]";
      const long long r = integer_at(cones[c][k], sub);
      if (r < 0 || static_cast<std::size_t>(r) >= fan.rays.size())
        fail(sub, "ray index " + std::to_string(r) + " out of range [0, " + std::to_string(fan.rays.size()) + ")");
      idx[k] = static_cast<std::size_t>(r);
    }
    fan.cones.push_back(idx);
  }
  return fan;
}

Fan load_fan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FanFormatError("cannot open fan file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fan_json(buf.str());
}

std::string fan_to_json(const Fan& f) {
  nlohmann::ordered_json doc;
  doc["name"] = f.name;
  doc["dim"] = 3;
  doc["rays"] = nlohmann::ordered_json::array();
  for (const auto& r : f.rays) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : r.entries()) row.push_back(to_int64(x));
    doc["rays"].push_back(std::move(row));
  }
  doc["cones"] = nlohmann::ordered_json::array();
  for (const auto& c : f.cones) doc["cones"].push_back({c[0], c[1], c[2]});
  return doc.dump(2) + "\n";
}

void save_fan_file(const Fan& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write fan file " + path.string());
  out << fan_to_json(f);
}

}  // namespace toric
