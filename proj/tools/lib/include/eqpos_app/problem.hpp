#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqpos/bundle_algebra.hpp"
#include "eqpos/integer.hpp"
#include "eqpos/weyl.hpp"

namespace eqpos::app {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

enum class Mode { kBsdh, kWonderful };

struct Query {
  std::string op;
  std::optional<Json> point;
};

/// Parsed problem file. Words are stored 0-based; the file uses 1-based letters.
struct ProblemFile {
  std::string root_system;
  Mode mode = Mode::kBsdh;
  Word word;
  /// Raw involution input: a shortcut string or a matrix (list of rows).
  Json involution;
  std::optional<BundleExpr> bundle;
  std::vector<Query> queries;
};

/// Schema-checks and parses a problem. Throws InvalidInput with the offending
/// field path on violations.
ProblemFile parse_problem(const Json& j);
ProblemFile load_problem(const std::string& path);

/// {"line":[...]}, {"sum":[...]}, {"tensor":[a,b]}, {"sym":{"n":k,"of":e}},
/// {"dual":e}, {"table":{"curve-id":[...], ...}}.
BundleExpr parse_bundle(const Json& j, const std::string& path = "bundle");
Json bundle_to_json(const BundleExpr& e);

/// Accepts "1,2", "[1,2]", "" or a JSON integer array (1-based letters).
Word parse_word(const Json& j, int rank, const std::string& path);
std::vector<int> word_to_json(const Word& w);

/// A shortcut string or a list of rows with M x = sigma(x).
IntMat parse_involution(const Json& j, const RootSystem& rs);

}  // namespace eqpos::app
