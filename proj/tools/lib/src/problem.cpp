#include "eqpos_app/problem.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "eqpos/errors.hpp"
#include "eqpos/wonderful.hpp"

namespace eqpos::app {
namespace {

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InvalidInput(path + ": expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InvalidInput(path + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key)) throw InvalidInput(path + ": unknown field '" + key + "'");
}

}  // namespace

BundleExpr parse_bundle(const Json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1)
    throw InvalidInput(path + ": expected an object with exactly one of line, sum, tensor, sym, dual, table");
  const auto& [key, value] = *j.items().begin();
  const std::string sub = path + "." + key;
  if (key == "line") {
    return BundleExpr::line(PicClass{as_int_list(value, sub)});
  }
  if (key == "sum") {
    if (!value.is_array() || value.empty()) throw InvalidInput(sub + ": expected a nonempty array");
    std::vector<BundleExpr> terms;
    for (std::size_t k = 0; k < value.size(); ++k) terms.push_back(parse_bundle(value[k], sub + "[" + std::to_string(k) + "]"));
    return BundleExpr::direct_sum(std::move(terms));
  }
  if (key == "tensor") {
    if (!value.is_array() || value.size() != 2) throw InvalidInput(sub + ": expected an array of two bundles");
    return BundleExpr::tensor(parse_bundle(value[0], sub + "[0]"), parse_bundle(value[1], sub + "[1]"));
  }
  if (key == "sym") {
    if (!value.is_object() || !value.contains("n") || !value.contains("of") || value.size() != 2)
      throw InvalidInput(sub + ": expected {\"n\": k, \"of\": bundle}");
    const auto n = as_int(value["n"], sub + ".n");
    if (n < 1 || n > 1'000'000) throw InvalidInput(sub + ".n: exponent must be >= 1");
    return BundleExpr::sym(static_cast<int>(n), parse_bundle(value["of"], sub + ".of"));
  }
  if (key == "dual") {
    return BundleExpr::dual(parse_bundle(value, sub));
  }
  if (key == "table") {
    if (!value.is_object() || value.empty()) throw InvalidInput(sub + ": expected a nonempty object");
    std::map<std::string, SplitType, std::less<>> entries;
    for (const auto& [id, degrees] : value.items()) {
      auto list = as_int_list(degrees, sub + "." + id);
      if (list.empty()) throw InvalidInput(sub + "." + id + ": split type must be nonempty");
      entries.emplace(id, SplitType(std::move(list)));
    }
    return BundleExpr::table(std::move(entries));
  }
  throw InvalidInput(path + ": unknown bundle constructor '" + key + "'");
}

Json bundle_to_json(const BundleExpr& e) {
  using E = BundleExpr;
  const auto& node = e.node();
  if (const auto* l = std::get_if<E::Line>(&node)) return Json{{"line", l->cls.coeffs}};
  if (const auto* s = std::get_if<E::DirectSum>(&node)) {
    Json terms = Json::array();
    for (const auto& t : s->terms) terms.push_back(bundle_to_json(t));
    return Json{{"sum", terms}};
  }
  if (const auto* t = std::get_if<E::Tensor>(&node))
    return Json{{"tensor", Json::array({bundle_to_json(t->factors[0]), bundle_to_json(t->factors[1])})}};
  if (const auto* s = std::get_if<E::Sym>(&node)) return Json{{"sym", {{"n", s->power}, {"of", bundle_to_json(s->of[0])}}}};
  if (const auto* d = std::get_if<E::Dual>(&node)) return Json{{"dual", bundle_to_json(d->of[0])}};
  const auto& table = std::get<E::Table>(node);
  Json entries = Json::object();
  for (const auto& [id, split] : table.entries) entries[id] = split.degrees();
  return Json{{"table", entries}};
}

Word parse_word(const Json& j, int rank, const std::string& path) {
  std::vector<std::int64_t> letters;
  if (j.is_array()) {
    letters = as_int_list(j, path);
  } else if (j.is_string()) {
    auto text = j.get<std::string>();
    if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput(path + ": malformed word '" + j.get<std::string>() + "'");
      letters.push_back(std::stoll(item));
    }
  } else {
    throw InvalidInput(path + ": expected a word (array of simple indices)");
  }
  Word out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] < 1 || letters[k] > rank)
      throw InvalidInput(path + "[" + std::to_string(k) + "]: letter " + std::to_string(letters[k]) + " outside 1.." +
                         std::to_string(rank));
    out.push_back(static_cast<int>(letters[k] - 1));
  }
  return out;
}

std::vector<int> word_to_json(const Word& w) {
  std::vector<int> out;
  for (int i : w) out.push_back(i + 1);
  return out;
}

IntMat parse_involution(const Json& j, const RootSystem& rs) {
  if (j.is_string()) return involution_from_shortcut(rs, j.get<std::string>());
  const int n = rs.rank();
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InvalidInput("involution: expected a shortcut or a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  IntMat m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto row = as_int_list(j[static_cast<std::size_t>(r)], "involution[" + std::to_string(r) + "]");
    if (static_cast<int>(row.size()) != n) throw InvalidInput("involution[" + std::to_string(r) + "]: wrong row length");
    for (int c = 0; c < n; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

ProblemFile parse_problem(const Json& j) {
  if (!j.is_object()) throw InvalidInput("problem: expected a JSON object");
  reject_unknown_keys(j, {"root_system", "mode", "word", "involution", "bundle", "queries"}, "problem");
  ProblemFile p;
  if (!j.contains("root_system") || !j["root_system"].is_string()) throw InvalidInput("root_system: required string");
  p.root_system = j["root_system"].get<std::string>();
  const auto rs = RootSystem::build(p.root_system);

  if (!j.contains("mode") || !j["mode"].is_string()) throw InvalidInput("mode: required, one of \"bsdh\", \"wonderful\"");
  const auto mode = j["mode"].get<std::string>();
  if (mode == "bsdh") {
    p.mode = Mode::kBsdh;
    if (!j.contains("word")) throw InvalidInput("word: required in bsdh mode");
    if (j.contains("involution")) throw InvalidInput("involution: not allowed in bsdh mode");
    p.word = parse_word(j["word"], rs.rank(), "word");
  } else if (mode == "wonderful") {
    p.mode = Mode::kWonderful;
    if (!j.contains("involution")) throw InvalidInput("involution: required in wonderful mode");
    if (j.contains("word")) throw InvalidInput("word: not allowed in wonderful mode");
    p.involution = j["involution"];
  } else {
    throw InvalidInput("mode: expected \"bsdh\" or \"wonderful\", got \"" + mode + "\"");
  }

  if (j.contains("bundle")) p.bundle = parse_bundle(j["bundle"]);

  if (j.contains("queries")) {
    const auto& qs = j["queries"];
    if (!qs.is_array()) throw InvalidInput("queries: expected an array");
    for (std::size_t k = 0; k < qs.size(); ++k) {
      const std::string path = "queries[" + std::to_string(k) + "]";
      const auto& q = qs[k];
      if (!q.is_object()) throw InvalidInput(path + ": expected an object");
      reject_unknown_keys(q, {"op", "point"}, path);
      if (!q.contains("op") || !q["op"].is_string()) throw InvalidInput(path + ".op: required string");
      Query query{q["op"].get<std::string>(), std::nullopt};
      static const std::set<std::string> kOps{"nef", "ample", "seshadri", "curves", "gkm-graph"};
      if (!kOps.contains(query.op)) throw InvalidInput(path + ".op: unknown operation '" + query.op + "'");
      if (q.contains("point")) query.point = q["point"];
      p.queries.push_back(std::move(query));
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  Json j;
  try {
    if (path == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw InvalidInput("cannot open input file '" + path + "'");
      j = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_problem(j);
}

}  // namespace eqpos::app
