#include "eqpos/bsdh.hpp"

#include <algorithm>
#include <set>

#include "eqpos/errors.hpp"
#include "eqpos/integer.hpp"

namespace eqpos {
namespace {

void check_enumeration_guard(const BsdhVariety& z) {
  if (z.length() > kMaxEnumerationLength)
    throw GuardExceeded("word length " + std::to_string(z.length()) + " exceeds the enumeration limit " +
                        std::to_string(kMaxEnumerationLength));
}

void check_point(const BsdhVariety& z, const GalleryPoint& x) {
  if (static_cast<int>(x.bits.size()) != z.length())
    throw InvalidInput("point '" + x.to_string() + "' has length " + std::to_string(x.bits.size()) +
                       ", expected " + std::to_string(z.length()));
}

GalleryPoint point_from_mask(int r, std::uint64_t mask) {
  GalleryPoint x;
  x.bits.resize(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) x.bits[static_cast<std::size_t>(j)] = (mask >> (r - 1 - j)) & 1U;
  return x;
}

/// s_{i_1}^{b_1} ... s_{i_last}^{b_last} as an element of W.
WeylElement prefix_element(const BsdhVariety& z, const GalleryPoint& x, int last) {
  Word w;
  for (int k = 0; k <= last; ++k)
    if (x.bits[static_cast<std::size_t>(k)]) w.push_back(z.word()[static_cast<std::size_t>(k)]);
  return WeylElement::from_word(z.roots(), w);
}

bool proportional(const IntVec& a, const IntVec& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k)
    for (Eigen::Index l = k + 1; l < a.size(); ++l)
      if (static_cast<__int128>(a[k]) * b[l] != static_cast<__int128>(a[l]) * b[k]) return false;
  return true;
}

}  // namespace

BsdhVariety BsdhVariety::build(RootSystem rs, Word word) {
  if (const auto pos = first_non_reduced_position(rs, word)) {
    std::string prefix = "[";
    for (std::size_t k = 0; k <= *pos; ++k) {
      if (k) prefix += ',';
      prefix += std::to_string(word[k] + 1);
    }
    prefix += ']';
    throw InvalidInput("word not reduced at position " + std::to_string(*pos + 1) + " (prefix " + prefix + ")");
  }
  return BsdhVariety(std::move(rs), std::move(word));
}

std::string GalleryPoint::to_string() const {
  std::string out;
  for (auto b : bits) out += b ? '1' : '0';
  return out;
}

GalleryPoint GalleryPoint::parse(std::string_view text) {
  GalleryPoint x;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw InvalidInput("point '" + std::string(text) + "' must consist of 0 and 1");
    x.bits.push_back(ch == '1');
  }
  return x;
}

GalleryPoint ModelCurve::endpoint(bool bit) const {
  GalleryPoint x = base;
  x.bits[static_cast<std::size_t>(slot)] = bit;
  return x;
}

std::string ModelCurve::id() const {
  std::string s = base.to_string();
  s[static_cast<std::size_t>(slot)] = '*';
  return s;
}

std::vector<GalleryPoint> fixed_points(const BsdhVariety& z) {
  check_enumeration_guard(z);
  const int r = z.length();
  std::vector<GalleryPoint> out;
  out.reserve(std::size_t{1} << r);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) out.push_back(point_from_mask(r, mask));
  return out;
}

std::vector<ModelCurve> model_curves(const BsdhVariety& z) {
  check_enumeration_guard(z);
  const int r = z.length();
  std::vector<ModelCurve> out;
  if (r == 0) return out;
  out.reserve(static_cast<std::size_t>(r) << (r - 1));
  for (int j = 0; j < r; ++j) {
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (r - 1)); ++rest) {
      GalleryPoint others = point_from_mask(r - 1, rest);
      others.bits.insert(others.bits.begin() + j, 0);
      out.push_back({j, std::move(others)});
    }
  }
  return out;
}

std::vector<ModelCurve> curves_through(const BsdhVariety& z, const GalleryPoint& x) {
  check_point(z, x);
  std::vector<ModelCurve> out;
  for (int j = 0; j < z.length(); ++j) {
    GalleryPoint base = x;
    base.bits[static_cast<std::size_t>(j)] = 0;
    out.push_back({j, std::move(base)});
  }
  return out;
}

ModelCurve parse_curve_id(const BsdhVariety& z, std::string_view id) {
  if (static_cast<int>(id.size()) != z.length() || std::count(id.begin(), id.end(), '*') != 1)
    throw InvalidInput("malformed curve id '" + std::string(id) + "'");
  const auto star = id.find('*');
  std::string bits(id);
  bits[star] = '0';
  return {static_cast<int>(star), GalleryPoint::parse(bits)};
}

Weight fixed_point_weight(const BsdhVariety& z, const GalleryPoint& x, int m) {
  check_point(z, x);
  if (m < 0 || m >= z.length()) throw InvalidInput("basis index out of range");
  Weight nu = z.roots().fundamental_weight(z.word()[static_cast<std::size_t>(m)]);
  for (int k = m; k >= 0; --k)
    if (x.bits[static_cast<std::size_t>(k)]) nu = reflect(z.roots(), z.word()[static_cast<std::size_t>(k)], nu);
  return nu;
}

Root tangent_weight(const BsdhVariety& z, const ModelCurve& c) {
  check_point(z, c.base);
  Root t = z.roots().simple_root(z.word()[static_cast<std::size_t>(c.slot)]);
  for (int k = c.slot - 1; k >= 0; --k)
    if (c.base.bits[static_cast<std::size_t>(k)]) t = reflect(z.roots(), z.word()[static_cast<std::size_t>(k)], t);
  return t;
}

std::int64_t degree_by_localization(const BsdhVariety& z, int m, const ModelCurve& c) {
  const IntVec diff = fixed_point_weight(z, c.endpoint(false), m).coords - fixed_point_weight(z, c.endpoint(true), m).coords;
  const IntVec t = z.roots().to_weight(tangent_weight(z, c)).coords;
  std::optional<std::int64_t> quotient;
  for (Eigen::Index k = 0; k < t.size(); ++k) {
    if (t[k] == 0) {
      if (diff[k] != 0) throw ConsistencyFailure("weight difference not parallel to tangent weight on curve " + c.id());
      continue;
    }
    if (diff[k] % t[k] != 0)
      throw ConsistencyFailure("non-integral localization degree on curve " + c.id());
    const auto q = diff[k] / t[k];
    if (quotient && *quotient != q)
      throw ConsistencyFailure("weight difference not parallel to tangent weight on curve " + c.id());
    quotient = q;
  }
  if (!quotient) throw ConsistencyFailure("zero tangent weight on curve " + c.id());
  return *quotient < 0 ? -*quotient : *quotient;
}

std::int64_t degree_closed_form(const BsdhVariety& z, int m, const ModelCurve& c) {
  check_point(z, c.base);
  if (m < 0 || m >= z.length()) throw InvalidInput("basis index out of range");
  if (m < c.slot) return 0;
  // u^{-1}(alpha_{i_j}) with u = s_{i_{j+1}}^{b} ... s_{i_m}^{b}.
  Root x = z.roots().simple_root(z.word()[static_cast<std::size_t>(c.slot)]);
  for (int k = c.slot + 1; k <= m; ++k)
    if (c.base.bits[static_cast<std::size_t>(k)]) x = reflect(z.roots(), z.word()[static_cast<std::size_t>(k)], x);
  const auto value = coroot(z.roots(), x).coords[z.word()[static_cast<std::size_t>(m)]];
  return value < 0 ? -value : value;
}

std::vector<std::int64_t> basis_degrees(const BsdhVariety& z, const ModelCurve& c) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(z.length()));
  for (int m = 0; m < z.length(); ++m) {
    const auto a = degree_by_localization(z, m, c);
    const auto b = degree_closed_form(z, m, c);
    if (a != b)
      throw ConsistencyFailure("degree methods disagree on curve " + c.id() + " for L" + std::to_string(m + 1) +
                               ": localization " + std::to_string(a) + ", closed form " + std::to_string(b));
    out[static_cast<std::size_t>(m)] = a;
  }
  return out;
}

namespace {

std::int64_t dot(const PicClass& l, const std::vector<std::int64_t>& degrees) {
  if (l.coeffs.size() != degrees.size())
    throw InvalidInput("line class has " + std::to_string(l.coeffs.size()) + " coefficients, expected " +
                       std::to_string(degrees.size()));
  std::int64_t total = 0;
  for (std::size_t m = 0; m < degrees.size(); ++m) total = checked_add(total, checked_mul(l.coeffs[m], degrees[m]));
  return total;
}

}  // namespace

std::int64_t degree(const BsdhVariety& z, const PicClass& l, const ModelCurve& c) {
  return dot(l, basis_degrees(z, c));
}

void validate_y_curve(const BsdhVariety& z, const YCurveData& yc) {
  const auto& rs = z.roots();
  if (!rs.is_positive_root(yc.beta.coords)) throw InvalidInput("y-curve: beta is not a positive root");
  if (static_cast<int>(yc.v.size()) != z.length()) throw InvalidInput("y-curve: wrong number of coset representatives");
  for (int j = 0; j < z.length(); ++j)
    if (!is_min_coset_rep(rs, yc.v[static_cast<std::size_t>(j)], z.word()[static_cast<std::size_t>(j)]))
      throw InvalidInput("y-curve: v_" + std::to_string(j + 1) + " is not a minimal coset representative");
  if (yc.moving.empty()) throw InvalidInput("y-curve: empty moving set");
  for (std::size_t k = 0; k < yc.moving.size(); ++k) {
    const int j = yc.moving[k];
    if (j < 0 || j >= z.length() || (k > 0 && yc.moving[k - 1] >= j))
      throw InvalidInput("y-curve: moving set must be sorted distinct slots");
    if (apply(inverse(rs, yc.v[static_cast<std::size_t>(j)]), yc.beta).is_positive())
      throw InvalidInput("y-curve: beta not inverted by v_" + std::to_string(j + 1) + "^{-1}");
  }
}

std::int64_t y_degree(const BsdhVariety& z, const PicClass& l, const YCurveData& yc) {
  validate_y_curve(z, yc);
  if (static_cast<int>(l.coeffs.size()) != z.length()) throw InvalidInput("line class has the wrong length");
  const auto& rs = z.roots();
  const Coroot beta_vee = coroot(rs, yc.beta);
  std::int64_t total = 0;
  for (int j : yc.moving) {
    const auto& v = yc.v[static_cast<std::size_t>(j)];
    const int i = z.word()[static_cast<std::size_t>(j)];
    const auto root_side = -coroot(rs, apply(inverse(rs, v), yc.beta)).coords[i];
    const auto weight_side = -pairing(rs, apply(v, rs.fundamental_weight(i)), beta_vee);
    if (root_side != weight_side || root_side < 0)
      throw ConsistencyFailure("y-curve degree routes disagree in factor " + std::to_string(j + 1));
    total = checked_add(total, checked_mul(l.coeffs[static_cast<std::size_t>(j)], root_side));
  }
  return total;
}

YCurveData y_curve_of(const BsdhVariety& z, const ModelCurve& c) {
  const auto& rs = z.roots();
  const Root t = tangent_weight(z, c);
  YCurveData out{t.is_positive() ? t : -t, {}, {}};
  const auto x0 = c.endpoint(false);
  const auto x1 = c.endpoint(true);
  for (int m = 0; m < z.length(); ++m) {
    const int i = z.word()[static_cast<std::size_t>(m)];
    const auto rep0 = min_coset_rep(rs, prefix_element(z, x0, m), i);
    const auto rep1 = min_coset_rep(rs, prefix_element(z, x1, m), i);
    if (rep0 == rep1) {
      out.v.push_back(rep0);
      continue;
    }
    const bool inv0 = !apply(inverse(rs, rep0), out.beta).is_positive();
    const bool inv1 = !apply(inverse(rs, rep1), out.beta).is_positive();
    if (inv0 == inv1) throw ConsistencyFailure("y-curve image of " + c.id() + " is ill-defined in factor " + std::to_string(m + 1));
    out.v.push_back(inv0 ? rep0 : rep1);
    out.moving.push_back(m);
  }
  return out;
}

std::int64_t count_y_curves(const BsdhVariety& z) {
  const auto& rs = z.roots();
  const int r = z.length();
  if (r == 0) return 0;
  check_enumeration_guard(z);
  std::vector<std::vector<WeylElement>> reps;
  for (int j = 0; j < r; ++j) reps.push_back(min_coset_reps(rs, z.word()[static_cast<std::size_t>(j)]));
  __int128 total = 0;
  for (const auto& beta : rs.positive_roots()) {
    std::vector<std::int64_t> inverted(static_cast<std::size_t>(r), 0);
    for (int j = 0; j < r; ++j)
      for (const auto& v : reps[static_cast<std::size_t>(j)])
        if (!apply(inverse(rs, v), beta).is_positive()) ++inverted[static_cast<std::size_t>(j)];
    // sum over nonempty A of prod_{j in A} inv_j prod_{j not in A} |W^J_j|
    //   = prod_j (|W^J_j| + inv_j) - prod_j |W^J_j|
    __int128 with_moving = 1, all_fixed = 1;
    for (int j = 0; j < r; ++j) {
      const auto n = static_cast<__int128>(reps[static_cast<std::size_t>(j)].size());
      with_moving *= n + inverted[static_cast<std::size_t>(j)];
      all_fixed *= n;
      if (with_moving > (static_cast<__int128>(1) << 80)) throw GuardExceeded("y-curve count too large");
    }
    total += with_moving - all_fixed;
    if (total > (static_cast<__int128>(1) << 80)) throw GuardExceeded("y-curve count too large");
  }
  if (total > INT64_MAX) throw GuardExceeded("y-curve count too large");
  return static_cast<std::int64_t>(total);
}

void for_each_y_curve(const BsdhVariety& z, const std::function<void(const YCurveData&)>& fn) {
  const auto count = count_y_curves(z);
  if (count > kMaxYCurves)
    throw GuardExceeded("y-curve enumeration would produce " + std::to_string(count) + " triples, limit " +
                        std::to_string(kMaxYCurves));
  const auto& rs = z.roots();
  const int r = z.length();
  std::vector<std::vector<WeylElement>> reps;
  std::vector<std::vector<WeylElement>> reps_inv;
  for (int j = 0; j < r; ++j) {
    reps.push_back(min_coset_reps(rs, z.word()[static_cast<std::size_t>(j)]));
    std::vector<WeylElement> inv;
    for (const auto& v : reps.back()) inv.push_back(inverse(rs, v));
    reps_inv.push_back(std::move(inv));
  }
  for (const auto& beta : rs.positive_roots()) {
    std::vector<std::vector<std::size_t>> inverted(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      for (std::size_t k = 0; k < reps[static_cast<std::size_t>(j)].size(); ++k)
        if (!apply(reps_inv[static_cast<std::size_t>(j)][k], beta).is_positive())
          inverted[static_cast<std::size_t>(j)].push_back(k);
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << r); ++a) {
      std::vector<int> moving;
      std::vector<std::vector<std::size_t>> choices(static_cast<std::size_t>(r));
      bool empty = false;
      for (int j = 0; j < r; ++j) {
        auto& ch = choices[static_cast<std::size_t>(j)];
        if ((a >> j) & 1U) {
          moving.push_back(j);
          ch = inverted[static_cast<std::size_t>(j)];
        } else {
          for (std::size_t k = 0; k < reps[static_cast<std::size_t>(j)].size(); ++k) ch.push_back(k);
        }
        if (ch.empty()) empty = true;
      }
      if (empty) continue;
      std::vector<std::size_t> odo(static_cast<std::size_t>(r), 0);
      for (;;) {
        YCurveData yc{beta, {}, moving};
        for (int j = 0; j < r; ++j)
          yc.v.push_back(reps[static_cast<std::size_t>(j)][choices[static_cast<std::size_t>(j)][odo[static_cast<std::size_t>(j)]]]);
        fn(yc);
        int pos = r - 1;
        while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == choices[static_cast<std::size_t>(pos)].size()) {
          odo[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
}

std::vector<YCurveData> y_curves(const BsdhVariety& z) {
  std::vector<YCurveData> out;
  for_each_y_curve(z, [&](const YCurveData& yc) { out.push_back(yc); });
  return out;
}

GkmReport gkm_check(const BsdhVariety& z) {
  GkmReport report;
  const auto& rs = z.roots();
  for (const auto& x : fixed_points(z)) {
    std::vector<IntVec> weights;
    Word prefix;
    for (int j = 0; j < z.length(); ++j) {
      const auto g = WeylElement::from_word(rs, prefix);
      weights.push_back(apply(g, rs.simple_root(z.word()[static_cast<std::size_t>(j)])).coords);
      if (x.bits[static_cast<std::size_t>(j)]) prefix.push_back(z.word()[static_cast<std::size_t>(j)]);
    }
    for (int a = 0; a < z.length(); ++a)
      for (int b = a + 1; b < z.length(); ++b)
        if (proportional(weights[static_cast<std::size_t>(a)], weights[static_cast<std::size_t>(b)])) {
          report.ok = false;
          report.collisions.push_back({x, a, b});
        }
  }
  return report;
}

void validate_bundle(const BsdhVariety& z, const BundleExpr& e) {
  for_each_line(e, [&](const PicClass& l) {
    if (static_cast<int>(l.coeffs.size()) != z.length())
      throw InvalidInput("line class has " + std::to_string(l.coeffs.size()) + " coefficients, expected " +
                         std::to_string(z.length()));
  });
  bool has_table = false;
  for_each_table(e, [&](const BundleExpr::Table&) { has_table = true; });
  if (has_table) {
    std::set<std::string, std::less<>> ids;
    for (const auto& c : model_curves(z)) ids.insert(c.id());
    for_each_table(e, [&](const BundleExpr::Table& t) {
      for (const auto& [id, split] : t.entries)
        if (!ids.contains(id)) throw InvalidInput("table names unknown curve '" + id + "'");
      for (const auto& id : ids)
        if (!t.entries.contains(id)) throw InvalidInput("table has no entry for curve '" + id + "'");
    });
  }
  if (rank(e) < 1) throw InvalidInput("bundle expression has rank 0");
}

namespace {

SplitType restrict_with_degrees(const BundleExpr& e, const ModelCurve& c, const std::vector<std::int64_t>& degrees) {
  return restrict(e, c.id(), [&](const PicClass& l) { return dot(l, degrees); });
}

Verdict positivity(const BsdhVariety& z, const BundleExpr& e, const GkmReport& gkm, std::int64_t threshold) {
  validate_bundle(z, e);
  Verdict v;
  v.holds = true;
  v.gkm_ok = gkm.ok;
  for (const auto& c : model_curves(z)) {
    const auto split = restrict_with_degrees(e, c, basis_degrees(z, c));
    if (split.min() < threshold) {
      v.holds = false;
      v.witness = Witness{c.id(), split.min()};
      break;
    }
  }
  return v;
}

}  // namespace

SplitType restrict(const BsdhVariety& z, const BundleExpr& e, const ModelCurve& c) {
  return restrict_with_degrees(e, c, basis_degrees(z, c));
}

Verdict nef_test(const BsdhVariety& z, const BundleExpr& e, const GkmReport& gkm) { return positivity(z, e, gkm, 0); }
Verdict ample_test(const BsdhVariety& z, const BundleExpr& e, const GkmReport& gkm) { return positivity(z, e, gkm, 1); }
Verdict nef_test(const BsdhVariety& z, const BundleExpr& e) { return nef_test(z, e, gkm_check(z)); }
Verdict ample_test(const BsdhVariety& z, const BundleExpr& e) { return ample_test(z, e, gkm_check(z)); }

SeshadriValue seshadri(const BsdhVariety& z, const BundleExpr& e, const GalleryPoint& x, const GkmReport& gkm) {
  check_point(z, x);
  if (z.length() == 0) throw InvalidInput("Seshadri constant undefined on a point: the empty word has no curves");
  const auto nef = nef_test(z, e, gkm);
  if (!nef.holds)
    throw NotNefError("bundle is not nef (degree " + std::to_string(nef.witness->degree) + " on curve " +
                      nef.witness->curve + "); Seshadri constant undefined");
  std::vector<SplitType> splits;
  const auto curves = curves_through(z, x);
  for (const auto& c : curves) splits.push_back(restrict(z, e, c));
  SeshadriValue out;
  out.value = seshadri_engine(splits);
  out.gkm_ok = gkm.ok;
  for (std::size_t k = 0; k < curves.size(); ++k)
    if (splits[k].min() == out.value) {
      out.attained_on = curves[k].id();
      break;
    }
  return out;
}

SeshadriValue seshadri(const BsdhVariety& z, const BundleExpr& e, const GalleryPoint& x) {
  return seshadri(z, e, x, gkm_check(z));
}

std::vector<std::vector<std::int64_t>> nef_cone_inequalities(const BsdhVariety& z) {
  std::set<std::vector<std::int64_t>> rows;
  for (const auto& c : model_curves(z)) rows.insert(basis_degrees(z, c));
  return {rows.begin(), rows.end()};
}

}  // namespace eqpos
