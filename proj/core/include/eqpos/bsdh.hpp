#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqpos/bundle_algebra.hpp"
#include "eqpos/rootsys.hpp"
#include "eqpos/verdict.hpp"
#include "eqpos/weyl.hpp"

namespace eqpos {

/// Upper bound on the word length for enumerations over fixed points and curves.
inline constexpr int kMaxEnumerationLength = 20;

/// Combinatorial model of the BSDH variety Z(w, i) for a reduced word i.
/// Slots are 0-based; the j-th slot carries the simple reflection s_{word[j]}.
class BsdhVariety {
 public:
  /// Throws InvalidInput naming the failing prefix if the word is not reduced.
  static BsdhVariety build(RootSystem rs, Word word);

  const RootSystem& roots() const { return rs_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

 private:
  BsdhVariety(RootSystem rs, Word word) : rs_(std::move(rs)), word_(std::move(word)) {}

  RootSystem rs_;
  Word word_;
};

/// Torus-fixed point: bit j set means the reflection at slot j is used.
struct GalleryPoint {
  std::vector<std::uint8_t> bits;

  /// "0110"
  std::string to_string() const;
  /// Parses a 0/1 string; throws InvalidInput on other characters.
  static GalleryPoint parse(std::string_view text);

  friend bool operator==(const GalleryPoint&, const GalleryPoint&) = default;
  friend auto operator<=>(const GalleryPoint&, const GalleryPoint&) = default;
};

/// Torus-invariant curve moving in slot `slot` with every other slot fixed
/// by `base`. base.bits[slot] is always 0.
struct ModelCurve {
  int slot;
  GalleryPoint base;

  GalleryPoint endpoint(bool bit) const;
  /// Bit string with '*' at the moving slot, e.g. "1*0".
  std::string id() const;

  friend bool operator==(const ModelCurve&, const ModelCurve&) = default;
};

std::vector<GalleryPoint> fixed_points(const BsdhVariety& z);
/// Ordered by moving slot, then by the fixed bits.
std::vector<ModelCurve> model_curves(const BsdhVariety& z);
/// One curve per slot, in slot order.
std::vector<ModelCurve> curves_through(const BsdhVariety& z, const GalleryPoint& x);
/// Looks up a curve by id(); throws InvalidInput if malformed.
ModelCurve parse_curve_id(const BsdhVariety& z, std::string_view id);

/// Localization weight of the basis class L_m at x: w_{m,x}(omega_{i_m}) with
/// w_{m,x} = s_{i_1}^{b_1} ... s_{i_m}^{b_m}.
Weight fixed_point_weight(const BsdhVariety& z, const GalleryPoint& x, int m);

/// g(alpha_{i_j}) with g the product of the reflections selected before slot j.
Root tangent_weight(const BsdhVariety& z, const ModelCurve& c);

/// deg(L_m|C) from the endpoint weight difference divided by the tangent
/// weight. Throws ConsistencyFailure if the quotient is not integral.
std::int64_t degree_by_localization(const BsdhVariety& z, int m, const ModelCurve& c);
/// deg(L_m|C) = |<omega_{i_m}, (u^{-1} alpha_{i_j})^vee>| for m >= j, else 0.
std::int64_t degree_closed_form(const BsdhVariety& z, int m, const ModelCurve& c);

/// (deg L_1|C, ..., deg L_r|C), with both methods cross-checked.
std::vector<std::int64_t> basis_degrees(const BsdhVariety& z, const ModelCurve& c);
/// sum_m a_m deg(L_m|C).
std::int64_t degree(const BsdhVariety& z, const PicClass& l, const ModelCurve& c);

/// Curve data in the ambient product of partial flag varieties: beta, one
/// minimal coset representative per factor, and the factors where the curve
/// projects to a curve.
struct YCurveData {
  Root beta;
  std::vector<WeylElement> v;
  std::vector<int> moving;  // A, sorted 0-based slots
};

/// All valid (beta, v, A); ordered by beta, then by A as a bitmask, then by v.
void for_each_y_curve(const BsdhVariety& z, const std::function<void(const YCurveData&)>& fn);
std::vector<YCurveData> y_curves(const BsdhVariety& z);
std::int64_t count_y_curves(const BsdhVariety& z);
inline constexpr std::int64_t kMaxYCurves = 2'000'000;

/// Throws InvalidInput unless the triple satisfies the defining conditions.
void validate_y_curve(const BsdhVariety& z, const YCurveData& yc);
/// sum_{j in A} a_j * (-<omega_{i_j}, (v_j^{-1} beta)^vee>), cross-checked
/// against the weight-side pairing -<v_j(omega_{i_j}), beta^vee>.
std::int64_t y_degree(const BsdhVariety& z, const PicClass& l, const YCurveData& yc);
/// Image of a model curve in the ambient product.
YCurveData y_curve_of(const BsdhVariety& z, const ModelCurve& c);

struct GkmCollision {
  GalleryPoint point;
  int slot_a;
  int slot_b;
};

struct GkmReport {
  bool ok = true;
  std::vector<GkmCollision> collisions;
};

/// Checks that at every fixed point the tangent weights of the incident model
/// curves are pairwise non-proportional.
GkmReport gkm_check(const BsdhVariety& z);

/// Checks that Line leaves have r coefficients and Table leaves name exactly
/// the model curves of z.
void validate_bundle(const BsdhVariety& z, const BundleExpr& e);

SplitType restrict(const BsdhVariety& z, const BundleExpr& e, const ModelCurve& c);

Verdict nef_test(const BsdhVariety& z, const BundleExpr& e);
Verdict ample_test(const BsdhVariety& z, const BundleExpr& e);
/// Variants reusing a precomputed GKM report.
Verdict nef_test(const BsdhVariety& z, const BundleExpr& e, const GkmReport& gkm);
Verdict ample_test(const BsdhVariety& z, const BundleExpr& e, const GkmReport& gkm);

/// Minimum split-type entry over the curves through x. Throws NotNefError if
/// E is not nef and InvalidInput for the empty word.
SeshadriValue seshadri(const BsdhVariety& z, const BundleExpr& e, const GalleryPoint& x);
SeshadriValue seshadri(const BsdhVariety& z, const BundleExpr& e, const GalleryPoint& x, const GkmReport& gkm);

/// The distinct basis-degree vectors over all model curves: the nef cone is
/// { a : <a, d> >= 0 for every returned d }. Sorted, without duplicates.
std::vector<std::vector<std::int64_t>> nef_cone_inequalities(const BsdhVariety& z);

}  // namespace eqpos
