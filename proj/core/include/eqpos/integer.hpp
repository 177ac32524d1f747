#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

#include "eqpos/errors.hpp"

namespace eqpos {

using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw GuardExceeded("integer overflow in addition");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw GuardExceeded("integer overflow in multiplication");
  return out;
}

inline std::int64_t checked_neg(std::int64_t a) {
  std::int64_t out;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &out)) throw GuardExceeded("integer overflow in negation");
  return out;
}

/// C(n + k - 1, k): number of size-k multisets drawn from n kinds. Throws on overflow.
std::int64_t multiset_count(std::int64_t n, std::int64_t k);

bool lex_less(const IntVec& a, const IntVec& b);

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

/// "(a,b,c)"
std::string format_vec(const IntVec& v);

IntVec to_intvec(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> to_std(const IntVec& v);

/// Rank over the rationals, computed by fraction-free (Bareiss) elimination.
int integer_rank(const IntMat& m);

}  // namespace eqpos
