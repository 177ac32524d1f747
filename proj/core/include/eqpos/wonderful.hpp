#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqpos/bundle_algebra.hpp"
#include "eqpos/rootsys.hpp"
#include "eqpos/verdict.hpp"
#include "eqpos/weyl.hpp"

namespace eqpos {

/// A validated lattice involution and the root data it determines.
struct SymmetricSpaceData {
  RootSystem rs;
  /// Column j is sigma(alpha_j) in simple-root coordinates.
  IntMat sigma;
  /// Every root fixed by sigma, positive and negative, sorted.
  std::vector<Root> fixed_levi_roots;
  /// Distinct alpha - sigma(alpha) for positive alpha not fixed by sigma, sorted.
  std::vector<Root> restricted_roots;
  /// Multiplicities of the eigenvalues +1 and -1 of sigma.
  int t1_rank = 0;
  int t2_rank = 0;

  /// sigma = identity: no symmetric space of positive rank.
  bool degenerate() const { return t2_rank == 0; }
  std::vector<Root> positive_levi_roots() const;
};

Root apply_involution(const SymmetricSpaceData& sd, const Root& x);

/// Checks sigma^2 = 1, sigma(R) = R and that every positive root is either
/// fixed or sent to a negative root. Throws InvalidInput naming the violation.
SymmetricSpaceData validate_involution(RootSystem rs, IntMat sigma);

/// "identity", "minus-identity", "swap" (two identical components,
/// alpha_i -> -alpha_i'), or "diagram:p1,...,pn" meaning alpha_i -> -alpha_{p_i}
/// with 1-based p.
IntMat involution_from_shortcut(const RootSystem& rs, std::string_view shortcut);

struct MinimalRankReport {
  int rank_g = 0;
  int rank_g_mod_h = 0;       // t2_rank
  int candidate_rank_h = 0;   // t1_rank
  int levi_span_rank = 0;     // rank of the span of the fixed roots
  bool levi_span_matches_t1 = false;
  bool degenerate = false;
};

/// Reports the torus splitting; it never certifies minimal rank by itself.
MinimalRankReport minimal_rank_report(const SymmetricSpaceData& sd);

struct WonderfulCurveClass {
  enum class Kind { kSchubert, kRestricted };

  Kind kind;
  Root root;  // alpha for Schubert classes, gamma for restricted ones
  WeylElement translate;

  /// Translation-independent key: "S:1,0" or "R:2".
  std::string id() const;
  /// id() followed by "@[word]" (1-based) when the translate is nontrivial.
  std::string label() const;
};

/// One Schubert class per positive root not fixed by sigma, then one
/// restricted class per restricted root, all with trivial translate.
std::vector<WonderfulCurveClass> curve_classes(const SymmetricSpaceData& sd);
/// The w-translates of the canonical classes: the curves through w.z.
std::vector<WonderfulCurveClass> curves_through(const SymmetricSpaceData& sd, const WeylElement& w);

/// Rejects Line leaves and tables that do not name exactly the curve classes.
void validate_table(const SymmetricSpaceData& sd, const BundleExpr& e);

SplitType restrict(const SymmetricSpaceData& sd, const BundleExpr& e, const WonderfulCurveClass& c);

Verdict nef_test_w(const SymmetricSpaceData& sd, const BundleExpr& e);
Verdict ample_test_w(const SymmetricSpaceData& sd, const BundleExpr& e);
/// Throws NotNefError unless the restriction data is nef.
SeshadriValue seshadri_w(const SymmetricSpaceData& sd, const BundleExpr& e, const WeylElement& w);

}  // namespace eqpos
