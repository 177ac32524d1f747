#pragma once

#include <optional>
#include <vector>

#include "eqpos/rootsys.hpp"

namespace eqpos {

/// A word in the simple reflections, letters are 0-based simple indices.
/// The product of a word (i1, ..., ir) is s_{i1} s_{i2} ... s_{ir}.
using Word = std::vector<int>;

/// Weyl group element, identified by its action on the root lattice.
///
/// Two elements compare equal iff their actions agree; word() is a canonical
/// reduced word recomputed from the action, independent of how the element
/// was constructed.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple(const RootSystem& rs, int i);
  static WeylElement from_word(const RootSystem& rs, const Word& word);

  /// Column j is w(alpha_j) in simple-root coordinates.
  const IntMat& root_action() const { return root_action_; }
  /// Column j is w(omega_j) in fundamental-weight coordinates.
  const IntMat& weight_action() const { return weight_action_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.root_action_ == b.root_action_;
  }

 private:
  WeylElement(const RootSystem& rs, IntMat root_action, IntMat weight_action);

  IntMat root_action_;
  IntMat weight_action_;
  Word word_;
};

Root apply(const WeylElement& w, const Root& x);
Weight apply(const WeylElement& w, const Weight& x);

/// a * b, acting as a(b(x)).
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// True iff the word is reduced.
bool is_reduced(const RootSystem& rs, const Word& word);
/// 0-based position of the first letter that makes the prefix non-reduced.
std::optional<std::size_t> first_non_reduced_position(const RootSystem& rs, const Word& word);

/// R+(v^{-1}) = { beta in R+ : v^{-1}(beta) < 0 }, sorted.
std::vector<Root> inversion_set(const RootSystem& rs, const WeylElement& v);

/// Whether v(alpha_j) > 0 for every j != omit.
bool is_min_coset_rep(const RootSystem& rs, const WeylElement& v, int omit);
/// The minimal-length element of w W_{S \ {alpha_omit}}.
WeylElement min_coset_rep(const RootSystem& rs, const WeylElement& w, int omit);
/// All minimal coset representatives of W / W_{S \ {alpha_omit}}, ordered by
/// (length, canonical word).
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, int omit);

/// Upper bound on total rank for exhaustive enumeration of W.
inline constexpr int kMaxEnumerationRank = 4;

/// Every element of W exactly once, ordered by (length, canonical word).
/// Throws GuardExceeded above kMaxEnumerationRank.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs);

/// The reflection s_beta for a root beta.
WeylElement reflection(const RootSystem& rs, const Root& beta);

}  // namespace eqpos
