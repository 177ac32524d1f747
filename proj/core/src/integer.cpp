#include "eqpos/integer.hpp"

#include <algorithm>
#include <utility>

namespace eqpos {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "schema";
    case ErrorKind::kGuard: return "guard";
    case ErrorKind::kConsistency: return "math-consistency";
    case ErrorKind::kNotNef: return "non-nef";
  }
  return "unknown";
}

std::int64_t multiset_count(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw InvalidInput("multiset_count: negative argument");
  if (k == 0) return 1;
  if (n == 0) return 0;
  // C(n+k-1, k) built as a running product of exact binomials C(n-1+i, i).
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (n - 1 + i) / i;
    if (acc > INT64_MAX) throw GuardExceeded("multiset count overflows 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_vec(const IntVec& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

IntVec to_intvec(const std::vector<std::int64_t>& v) {
  IntVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

std::vector<std::int64_t> to_std(const IntVec& v) { return {v.begin(), v.end()}; }

int integer_rank(const IntMat& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = m(i, j);

  constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
  int rank = 0;
  __int128 prev_pivot = 1;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev_pivot;
        if (a[r][c] > kLimit || a[r][c] < -kLimit) throw GuardExceeded("integer_rank: entries too large");
      }
      a[r][col] = 0;
    }
    prev_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace eqpos
