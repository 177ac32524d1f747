#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eqpos/bsdh.hpp"
#include "eqpos/bundle_algebra.hpp"

// Independent reference implementations used by the self-test and the test
// suites. They favour directness over speed.
namespace eqpos::app::oracle {

/// degree -> multiplicity
using Histogram = std::map<std::int64_t, std::uint64_t>;

/// Expands an expression into a degree histogram. Sym^n is computed by a
/// dynamic program over distinct degrees, not by enumerating index tuples.
Histogram flatten(const BundleExpr& e, std::string_view curve_id, const LineDegreeFn& line_degree);
SplitType to_split(const Histogram& h);

/// C(n + s - 1, n) by Pascal's rule.
std::uint64_t multiset_count_pascal(int s, int n);

/// Keys "beta|v_1 action;...;v_r action|A" of every (beta, v, A), found by
/// scanning the whole Weyl group and testing coset minimality by length.
std::set<std::string> brute_force_y_curves(const BsdhVariety& z);
std::string y_curve_key(const YCurveData& yc);

/// Closed-form degree with u in place of u^{-1}; a deliberate fault.
std::int64_t mutated_closed_form(const BsdhVariety& z, int m, const ModelCurve& c);

/// Every reduced word of length 1..max_length, grown letter by letter.
std::vector<Word> reduced_words(const RootSystem& rs, int max_length);

struct RandomExprOptions {
  int max_depth = 4;
  std::int64_t max_rank = 20;
  std::int64_t min_degree = -5;
  std::int64_t max_degree = 5;
};

/// Random expression of bounded depth and rank over tables keyed by curve_ids
/// and lines with num_classes coefficients (no lines if num_classes == 0).
BundleExpr random_expr(std::mt19937_64& rng, const std::vector<std::string>& curve_ids, int num_classes,
                       const RandomExprOptions& options);

}  // namespace eqpos::app::oracle
