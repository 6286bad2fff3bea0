#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "framedual/numerics.hpp"

namespace framedual::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// Non-finite values become the strings "inf" / "-inf" / "nan".
Json number(double x);
Json numbers(const std::vector<double>& xs);
Json matrix_json(const Matrix& a);
std::string sha256_hex(std::string_view bytes);

struct Report {
  std::string command;
  std::vector<std::string> args;
  Json inputs = Json::array();
  Json results = Json::object();
  Json tolerances = Json::object();
  bool tolerance_dependent = false;
  double seconds = 0;

  // Reads the file, records its digest and returns the contents.
  std::string add_input(const std::filesystem::path& path);

  Json to_json() const;
  // "key: value" lines, nested keys joined with dots.
  std::string to_text() const;
};

}  // namespace framedual::cli
