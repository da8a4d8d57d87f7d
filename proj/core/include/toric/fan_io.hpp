#pragma once

// Fan file format:
//   { "name": <string>, "dim": 3, "rays": [[int,int,int], ...], "cones": [[i,j,k], ...] }
// Ray indices are 0-based.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toric/fan.hpp"

namespace toric {

/// Malformed fan document. what() names the offending field (and the
/// line/column for JSON syntax errors).
class FanFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural parse only: dim must be 3, entries integral, indices in range.
/// Geometric checks are left to validate_fan.
Fan parse_fan_json(std::string_view text);
Fan load_fan_file(const std::filesystem::path& path);

std::string fan_to_json(const Fan& f);
void save_fan_file(const Fan& f, const std::filesystem::path& path);

}  // namespace toric
