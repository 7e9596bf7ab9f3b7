#pragma once

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano/error.hpp"
#include "fano/exactnum.hpp"
#include "fano/matrix.hpp"
#include "fano/polynomial.hpp"

#ifndef FANO_DEFAULT_ASSET_DIR
#define FANO_DEFAULT_ASSET_DIR "assets"
#endif

namespace fano {

struct RunOptions {
  int depth = 10;
  int grid = 20;
};

inline constexpr const char* kAssetDirVariable = "FANO_ASSET_DIR";

inline std::string asset_dir() {
  const char* env = std::getenv(kAssetDirVariable);
  return env && *env ? std::string(env) : std::string(FANO_DEFAULT_ASSET_DIR);
}

inline nlohmann::json load_asset(const std::string& scenarioId) {
  const std::string path = asset_dir() + "/" + scenarioId + ".json";
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario asset " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed scenario asset " + path + ": " + e.what());
  }
}

inline Rational rational_of(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

inline Cyclotomic cyclotomic_of(const nlohmann::json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  return Cyclotomic::parse(j.get<std::string>());
}

inline CycMatrix matrix_of(const nlohmann::json& rows) {
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const auto& e : r) out.back().push_back(cyclotomic_of(e));
  }
  return CycMatrix::from_rows(out);
}

inline std::vector<std::string> strings_of(const nlohmann::json& j) {
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

// Polynomial in the single variable x, normalised to text; used to compare
// displayed closed forms with computed ones.
inline std::string canonical_text(const std::string& text, const std::vector<std::string>& vars) {
  return MultiPoly::parse(text, vars).to_string();
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace fano
