#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eqpos {

/// A Picard class as integer coefficients in a fixed basis of line bundles.
struct PicClass {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// Degrees (a_1, ..., a_n) of a bundle restricted to a projective line,
/// kept sorted ascending. Never empty.
class SplitType {
 public:
  explicit SplitType(std::vector<std::int64_t> degrees);

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::size_t rank() const { return degrees_.size(); }
  std::int64_t min() const { return degrees_.front(); }
  std::int64_t max() const { return degrees_.back(); }

  friend bool operator==(const SplitType&, const SplitType&) = default;

 private:
  std::vector<std::int64_t> degrees_;
};

/// Upper bound on the rank of any intermediate split type.
inline constexpr std::int64_t kMaxSplitRank = 1'000'000;

/// Immutable expression tree describing an equivariant bundle through its
/// restrictions to invariant curves.
class BundleExpr {
 public:
  struct Line {
    PicClass cls;
  };
  struct DirectSum {
    std::vector<BundleExpr> terms;
  };
  struct Tensor {
    std::vector<BundleExpr> factors;  // exactly two
  };
  struct Sym {
    int power;
    std::vector<BundleExpr> of;  // exactly one
  };
  struct Dual {
    std::vector<BundleExpr> of;  // exactly one
  };
  struct Table {
    std::map<std::string, SplitType, std::less<>> entries;
  };
  using Node = std::variant<Line, DirectSum, Tensor, Sym, Dual, Table>;

  static BundleExpr line(PicClass cls);
  static BundleExpr direct_sum(std::vector<BundleExpr> terms);
  static BundleExpr tensor(BundleExpr a, BundleExpr b);
  static BundleExpr sym(int power, BundleExpr of);
  static BundleExpr dual(BundleExpr of);
  static BundleExpr table(std::map<std::string, SplitType, std::less<>> entries);

  const Node& node() const { return *node_; }

  /// Depth of the tree; leaves have depth 1.
  int depth() const;

 private:
  explicit BundleExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

  std::shared_ptr<const Node> node_;
};

/// Degree of a line class on the curve currently being restricted to.
using LineDegreeFn = std::function<std::int64_t(const PicClass&)>;

/// Restriction of E to the curve named curve_id. Line leaves are evaluated
/// with line_degree, Table leaves are looked up by curve_id.
SplitType restrict(const BundleExpr& e, std::string_view curve_id, const LineDegreeFn& line_degree);

/// Rank of E. Throws InvalidInput on inconsistent table sizes or a rank-0 sum.
std::int64_t rank(const BundleExpr& e);

/// Visits every Line leaf.
void for_each_line(const BundleExpr& e, const std::function<void(const PicClass&)>& fn);
/// Visits every Table leaf.
void for_each_table(const BundleExpr& e, const std::function<void(const BundleExpr::Table&)>& fn);

/// Minimum over all given split types of their least entry. Every entry must
/// be nonnegative (callers establish nefness first).
std::int64_t seshadri_engine(const std::vector<SplitType>& split_types);

/// Smallest n in [1, bound] with Sym^n(E) (x) L^{-1} nef on every curve, given
/// E's and L's restrictions curve by curve (parallel vectors).
std::optional<int> twist_threshold(const std::vector<SplitType>& bundle_on_curves,
                                   const std::vector<std::int64_t>& line_on_curves, int bound);

}  // namespace eqpos
