#include "report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "framedual/matrix_io.hpp"

namespace framedual::cli {

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json numbers(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

Json matrix_json(const Matrix& a) {
  Json rows = Json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(format_entry(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"field", to_string(a.field())}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out.push_back(hex[digest[k] >> 4]);
    out.push_back(hex[digest[k] & 15]);
  }
  return out;
}

std::string Report::add_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FrameError(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();
  inputs.push_back({{"path", path.string()}, {"sha256", sha256_hex(bytes)}});
  return bytes;
}

Json Report::to_json() const {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = {{"name", command}, {"args", args}};
  out["inputs"] = inputs;
  out["results"] = results;
  out["tolerances"] = tolerances;
  out["tolerance_dependent"] = tolerance_dependent;
  out["timing"] = {{"seconds", seconds}};
  return out;
}

namespace {

void flatten(const Json& value, const std::string& prefix, std::string& out) {
  if (value.is_object() && !value.empty()) {
    for (const auto& [key, item] : value.items()) flatten(item, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out += prefix + ": ";
  out += value.is_string() ? value.get<std::string>() : value.dump();
  out += "\n";
}

}  // namespace

std::string Report::to_text() const {
  std::string out;
  flatten(results, "", out);
  if (tolerance_dependent) out += "tolerance_dependent: true\n";
  return out;
}

}  // namespace framedual::cli
