#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqpos/integer.hpp"

namespace eqpos {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanComponent {
  Family family;
  int rank;

  friend bool operator==(const CartanComponent&, const CartanComponent&) = default;
};

/// A semisimple type as a product of simple components, e.g. A1xA1.
using CartanLabel = std::vector<CartanComponent>;

/// Parses "A2", "b3", "A1xA1" ("x" separates components, case-insensitive).
/// D2 is rewritten to A1xA1. Throws InvalidInput on unsupported family/rank pairs.
CartanLabel parse_cartan_label(std::string_view text);
std::string to_string(const CartanLabel& label);

/// Element of the root lattice in simple-root coordinates.
struct Root {
  IntVec coords;

  bool is_positive() const;
  Root operator-() const { return Root{-coords}; }
  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
  friend bool operator<(const Root& a, const Root& b) { return lex_less(a.coords, b.coords); }
};

/// Element of the weight lattice in fundamental-weight coordinates.
struct Weight {
  IntVec coords;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
};

/// Element of the coroot lattice in simple-coroot coordinates.
struct Coroot {
  IntVec coords;

  friend bool operator==(const Coroot& a, const Coroot& b) { return a.coords == b.coords; }
};

/// Cartan data and positive roots of a (possibly reducible) crystallographic
/// root system. Simple indices are 0-based throughout the C++ API.
///
/// cartan()(i, j) = <alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j - cartan()(i, j) alpha_i.
/// Squared lengths are normalized per component with short roots of length^2 = 2.
class RootSystem {
 public:
  struct ComponentSpan {
    CartanComponent component;
    int offset;
  };

  static RootSystem build(const CartanLabel& type);
  static RootSystem build(std::string_view type) { return build(parse_cartan_label(type)); }

  int rank() const { return rank_; }
  const CartanLabel& type() const { return type_; }
  const std::vector<ComponentSpan>& components() const { return components_; }
  const IntMat& cartan() const { return cartan_; }
  /// Gram matrix of the simple roots under the normalized invariant form.
  const IntMat& gram() const { return gram_; }
  /// Sorted lexicographically on coordinates.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  Root simple_root(int i) const;
  Weight fundamental_weight(int i) const;
  Coroot simple_coroot(int i) const;
  Weight zero_weight() const { return Weight{IntVec::Zero(rank_)}; }

  bool is_root(const IntVec& coords) const;
  bool is_positive_root(const IntVec& coords) const;
  std::int64_t squared_length(const Root& root) const;
  /// Expresses a root-lattice vector in fundamental-weight coordinates.
  Weight to_weight(const Root& root) const;

 private:
  int rank_ = 0;
  CartanLabel type_;
  std::vector<ComponentSpan> components_;
  IntMat cartan_;
  IntMat gram_;
  std::vector<Root> positive_roots_;
};

/// beta^vee = 2 beta / (beta, beta), in simple coroots. Throws InvalidInput if
/// beta is not a root.
Coroot coroot(const RootSystem& rs, const Root& beta);

/// <nu, c>: the perfect pairing between weights and coroots.
std::int64_t pairing(const RootSystem& rs, const Weight& nu, const Coroot& c);
/// <x, c> for a root-lattice vector x.
std::int64_t pairing(const RootSystem& rs, const Root& x, const Coroot& c);

Root reflect(const RootSystem& rs, int simple_index, const Root& x);
Weight reflect(const RootSystem& rs, int simple_index, const Weight& x);
/// Same as above, with the reflecting root given explicitly. Throws InvalidInput
/// unless alpha is a simple root.
Root reflect(const RootSystem& rs, const Root& alpha, const Root& x);
Weight reflect(const RootSystem& rs, const Root& alpha, const Weight& x);

/// Index of alpha among the simple roots, or -1.
int simple_index_of(const RootSystem& rs, const Root& alpha);

}  // namespace eqpos
