#include "eqpos/wonderful.hpp"

#include <algorithm>
#include <set>

#include "eqpos/errors.hpp"

namespace eqpos {
namespace {

std::string key_coords(const IntVec& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_permutation(std::string_view text, int n) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    const auto part = text.substr(pos, end - pos);
    if (part.empty()) throw InvalidInput("malformed diagram permutation '" + std::string(text) + "'");
    int value = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9' || value > 1000) throw InvalidInput("malformed diagram permutation '" + std::string(text) + "'");
      value = value * 10 + (ch - '0');
    }
    out.push_back(value - 1);
    if (end == text.size()) break;
    pos = end + 1;
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(out.size()) != n)
    throw InvalidInput("diagram permutation has " + std::to_string(out.size()) + " entries, expected " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i) throw InvalidInput("diagram shortcut is not a permutation of 1.." + std::to_string(n));
  return out;
}

}  // namespace

std::vector<Root> SymmetricSpaceData::positive_levi_roots() const {
  std::vector<Root> out;
  for (const auto& a : fixed_levi_roots)
    if (a.is_positive()) out.push_back(a);
  return out;
}

Root apply_involution(const SymmetricSpaceData& sd, const Root& x) { return Root{sd.sigma * x.coords}; }

SymmetricSpaceData validate_involution(RootSystem rs, IntMat sigma) {
  const int n = rs.rank();
  if (sigma.rows() != n || sigma.cols() != n)
    throw InvalidInput("involution must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  const IntMat id = IntMat::Identity(n, n);
  if (sigma * sigma != id) throw InvalidInput("involution does not square to the identity");

  SymmetricSpaceData sd{std::move(rs), std::move(sigma), {}, {}, 0, 0};
  std::set<IntVec, LexLess> restricted;
  for (const auto& alpha : sd.rs.positive_roots()) {
    const Root image = apply_involution(sd, alpha);
    if (!sd.rs.is_root(image.coords))
      throw InvalidInput("involution does not preserve the root system: sigma" + format_vec(alpha.coords) + " = " +
                         format_vec(image.coords));
    if (image == alpha) continue;
    if (image.is_positive())
      throw InvalidInput("Borel compatibility fails at " + format_vec(alpha.coords) + ": sigma sends it to the positive root " +
                         format_vec(image.coords));
    restricted.insert(alpha.coords - image.coords);
  }
  for (const auto& alpha : sd.rs.positive_roots()) {
    if (apply_involution(sd, alpha) == alpha) {
      sd.fixed_levi_roots.push_back(alpha);
      sd.fixed_levi_roots.push_back(-alpha);
    }
  }
  std::sort(sd.fixed_levi_roots.begin(), sd.fixed_levi_roots.end());
  for (const auto& g : restricted) sd.restricted_roots.push_back(Root{g});
  sd.t1_rank = n - integer_rank(sd.sigma - id);
  sd.t2_rank = n - integer_rank(sd.sigma + id);
  if (sd.t1_rank + sd.t2_rank != n) throw ConsistencyFailure("eigenspace dimensions do not add up to the rank");
  return sd;
}

IntMat involution_from_shortcut(const RootSystem& rs, std::string_view shortcut) {
  const int n = rs.rank();
  if (shortcut == "identity") return IntMat::Identity(n, n);
  if (shortcut == "minus-identity") return -IntMat::Identity(n, n);
  std::vector<int> perm;
  if (shortcut == "swap") {
    const auto& comps = rs.components();
    if (comps.size() != 2 || !(comps[0].component == comps[1].component))
      throw InvalidInput("swap involution needs a type of the form XxX, got " + to_string(rs.type()));
    const int half = n / 2;
    for (int i = 0; i < n; ++i) perm.push_back(i < half ? i + half : i - half);
  } else if (shortcut.starts_with("diagram:")) {
    perm = parse_permutation(shortcut.substr(8), n);
  } else {
    throw InvalidInput("unknown involution shortcut '" + std::string(shortcut) + "'");
  }
  IntMat sigma = IntMat::Zero(n, n);
  for (int i = 0; i < n; ++i) sigma(perm[static_cast<std::size_t>(i)], i) = -1;
  return sigma;
}

MinimalRankReport minimal_rank_report(const SymmetricSpaceData& sd) {
  MinimalRankReport r;
  r.rank_g = sd.rs.rank();
  r.rank_g_mod_h = sd.t2_rank;
  r.candidate_rank_h = sd.t1_rank;
  const auto levi = sd.positive_levi_roots();
  if (!levi.empty()) {
    IntMat span(sd.rs.rank(), static_cast<Eigen::Index>(levi.size()));
    for (std::size_t k = 0; k < levi.size(); ++k) span.col(static_cast<Eigen::Index>(k)) = levi[k].coords;
    r.levi_span_rank = integer_rank(span);
  }
  r.levi_span_matches_t1 = r.levi_span_rank == sd.t1_rank;
  r.degenerate = sd.degenerate();
  return r;
}

std::string WonderfulCurveClass::id() const {
  return std::string(kind == Kind::kSchubert ? "S:" : "R:") + key_coords(root.coords);
}

std::string WonderfulCurveClass::label() const {
  if (translate.is_identity()) return id();
  std::string w = "[";
  for (std::size_t k = 0; k < translate.word().size(); ++k) {
    if (k) w += ',';
    w += std::to_string(translate.word()[k] + 1);
  }
  return id() + "@" + w + "]";
}

std::vector<WonderfulCurveClass> curve_classes(const SymmetricSpaceData& sd) {
  const auto e = WeylElement::identity(sd.rs);
  std::vector<WonderfulCurveClass> out;
  for (const auto& alpha : sd.rs.positive_roots())
    if (!(apply_involution(sd, alpha) == alpha)) out.push_back({WonderfulCurveClass::Kind::kSchubert, alpha, e});
  for (const auto& gamma : sd.restricted_roots) out.push_back({WonderfulCurveClass::Kind::kRestricted, gamma, e});
  return out;
}

std::vector<WonderfulCurveClass> curves_through(const SymmetricSpaceData& sd, const WeylElement& w) {
  auto out = curve_classes(sd);
  for (auto& c : out) c.translate = w;
  return out;
}

void validate_table(const SymmetricSpaceData& sd, const BundleExpr& e) {
  for_each_line(e, [](const PicClass&) {
    throw InvalidInput("line classes are not available on wonderful compactifications; supply restriction tables");
  });
  std::set<std::string, std::less<>> ids;
  for (const auto& c : curve_classes(sd)) ids.insert(c.id());
  bool has_table = false;
  for_each_table(e, [&](const BundleExpr::Table& t) {
    has_table = true;
    for (const auto& [id, split] : t.entries)
      if (!ids.contains(id)) throw InvalidInput("table names unknown curve class '" + id + "'");
    for (const auto& id : ids)
      if (!t.entries.contains(id)) throw InvalidInput("table has no entry for curve class '" + id + "'");
  });
  if (!has_table) throw InvalidInput("wonderful bundle data must contain a restriction table");
  if (rank(e) < 1) throw InvalidInput("bundle expression has rank 0");
}

SplitType restrict(const SymmetricSpaceData&, const BundleExpr& e, const WonderfulCurveClass& c) {
  return restrict(e, c.id(), [](const PicClass&) -> std::int64_t {
    throw InvalidInput("line classes are not available on wonderful compactifications");
  });
}

namespace {

Verdict positivity_w(const SymmetricSpaceData& sd, const BundleExpr& e, std::int64_t threshold) {
  validate_table(sd, e);
  Verdict v;
  v.holds = true;
  for (const auto& c : curve_classes(sd)) {
    const auto split = restrict(sd, e, c);
    if (split.min() < threshold) {
      v.holds = false;
      v.witness = Witness{c.id(), split.min()};
      break;
    }
  }
  return v;
}

}  // namespace

Verdict nef_test_w(const SymmetricSpaceData& sd, const BundleExpr& e) { return positivity_w(sd, e, 0); }
Verdict ample_test_w(const SymmetricSpaceData& sd, const BundleExpr& e) { return positivity_w(sd, e, 1); }

SeshadriValue seshadri_w(const SymmetricSpaceData& sd, const BundleExpr& e, const WeylElement& w) {
  const auto nef = nef_test_w(sd, e);
  if (!nef.holds)
    throw NotNefError("restriction data is not nef (degree " + std::to_string(nef.witness->degree) + " on " +
                      nef.witness->curve + "); Seshadri constant undefined");
  const auto curves = curves_through(sd, w);
  std::vector<SplitType> splits;
  for (const auto& c : curves) splits.push_back(restrict(sd, e, c));
  SeshadriValue out;
  out.value = seshadri_engine(splits);
  for (std::size_t k = 0; k < curves.size(); ++k)
    if (splits[k].min() == out.value) {
      out.attained_on = curves[k].label();
      break;
    }
  return out;
}

}  // namespace eqpos
