#include "eqpos/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace eqpos {
namespace {

IntMat simple_root_matrix(const RootSystem& rs, int i) {
  IntMat m = IntMat::Identity(rs.rank(), rs.rank());
  m.row(i) -= rs.cartan().row(i);
  return m;
}

IntMat simple_weight_matrix(const RootSystem& rs, int i) {
  IntMat m = IntMat::Identity(rs.rank(), rs.rank());
  m.col(i) -= rs.cartan().col(i);
  return m;
}

bool column_negative(const IntMat& m, int j) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    if (m(r, j) < 0) return true;
  return false;
}

std::vector<std::int64_t> flat_key(const IntMat& m) { return {m.data(), m.data() + m.size()}; }

void sort_by_length_then_word(std::vector<WeylElement>& v) {
  std::sort(v.begin(), v.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
}

void check_index(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank())
    throw InvalidInput("simple index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(rs.rank()));
}

}  // namespace

WeylElement::WeylElement(const RootSystem& rs, IntMat root_action, IntMat weight_action)
    : root_action_(std::move(root_action)), weight_action_(std::move(weight_action)) {
  // Peel right descents: w(alpha_i) < 0 iff l(w s_i) < l(w).
  IntMat m = root_action_;
  Word reversed;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (column_negative(m, i)) { descent = i; break; }
    if (descent < 0) break;
    reversed.push_back(descent);
    m = m * simple_root_matrix(rs, descent);
    if (reversed.size() > rs.positive_roots().size())
      throw ConsistencyFailure("Weyl element descent did not terminate");
  }
  word_.assign(reversed.rbegin(), reversed.rend());
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  return WeylElement(rs, IntMat::Identity(rs.rank(), rs.rank()), IntMat::Identity(rs.rank(), rs.rank()));
}

WeylElement WeylElement::simple(const RootSystem& rs, int i) {
  check_index(rs, i);
  return WeylElement(rs, simple_root_matrix(rs, i), simple_weight_matrix(rs, i));
}

WeylElement WeylElement::from_word(const RootSystem& rs, const Word& word) {
  IntMat roots = IntMat::Identity(rs.rank(), rs.rank());
  IntMat weights = roots;
  for (int i : word) {
    check_index(rs, i);
    roots = roots * simple_root_matrix(rs, i);
    weights = weights * simple_weight_matrix(rs, i);
  }
  return WeylElement(rs, std::move(roots), std::move(weights));
}

Root apply(const WeylElement& w, const Root& x) {
  if (x.coords.size() != w.root_action().cols()) throw InvalidInput("apply: dimension mismatch");
  return Root{w.root_action() * x.coords};
}

Weight apply(const WeylElement& w, const Weight& x) {
  if (x.coords.size() != w.weight_action().cols()) throw InvalidInput("apply: dimension mismatch");
  return Weight{w.weight_action() * x.coords};
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return WeylElement::from_word(rs, w);
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  Word rev(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(rs, rev);
}

std::optional<std::size_t> first_non_reduced_position(const RootSystem& rs, const Word& word) {
  WeylElement prefix = WeylElement::identity(rs);
  for (std::size_t k = 0; k < word.size(); ++k) {
    check_index(rs, word[k]);
    if (!apply(prefix, rs.simple_root(word[k])).is_positive()) return k;
    Word w = prefix.word();
    w.push_back(word[k]);
    prefix = WeylElement::from_word(rs, w);
  }
  return std::nullopt;
}

bool is_reduced(const RootSystem& rs, const Word& word) {
  return !first_non_reduced_position(rs, word).has_value();
}

std::vector<Root> inversion_set(const RootSystem& rs, const WeylElement& v) {
  const WeylElement vinv = inverse(rs, v);
  std::vector<Root> out;
  for (const auto& beta : rs.positive_roots())
    if (!apply(vinv, beta).is_positive()) out.push_back(beta);
  return out;
}

bool is_min_coset_rep(const RootSystem& rs, const WeylElement& v, int omit) {
  check_index(rs, omit);
  for (int j = 0; j < rs.rank(); ++j)
    if (j != omit && column_negative(v.root_action(), j)) return false;
  return true;
}

WeylElement min_coset_rep(const RootSystem& rs, const WeylElement& w, int omit) {
  check_index(rs, omit);
  WeylElement cur = w;
  for (;;) {
    int descent = -1;
    for (int j = 0; j < rs.rank(); ++j)
      if (j != omit && column_negative(cur.root_action(), j)) { descent = j; break; }
    if (descent < 0) return cur;
    Word next = cur.word();
    next.push_back(descent);
    cur = WeylElement::from_word(rs, next);
  }
}

std::vector<WeylElement> min_coset_reps(const RootSystem& rs, int omit) {
  check_index(rs, omit);
  // W^J is closed under removing left descents, so it is reachable from the
  // identity by length-increasing left multiplications that stay in W^J.
  std::map<std::vector<std::int64_t>, WeylElement> found;
  std::deque<WeylElement> queue;
  const auto e = WeylElement::identity(rs);
  found.emplace(flat_key(e.root_action()), e);
  queue.push_back(e);
  while (!queue.empty()) {
    const WeylElement v = queue.front();
    queue.pop_front();
    for (int k = 0; k < rs.rank(); ++k) {
      Word w{k};
      w.insert(w.end(), v.word().begin(), v.word().end());
      auto next = WeylElement::from_word(rs, w);
      if (next.length() != v.length() + 1 || !is_min_coset_rep(rs, next, omit)) continue;
      if (found.emplace(flat_key(next.root_action()), next).second) queue.push_back(next);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(found.size());
  for (auto& [key, v] : found) out.push_back(v);
  sort_by_length_then_word(out);
  return out;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs) {
  if (rs.rank() > kMaxEnumerationRank)
    throw GuardExceeded("enumerate_weyl: total rank " + std::to_string(rs.rank()) + " exceeds " +
                        std::to_string(kMaxEnumerationRank));
  std::map<std::vector<std::int64_t>, WeylElement> found;
  std::deque<WeylElement> queue;
  const auto e = WeylElement::identity(rs);
  found.emplace(flat_key(e.root_action()), e);
  queue.push_back(e);
  while (!queue.empty()) {
    const WeylElement v = queue.front();
    queue.pop_front();
    for (int k = 0; k < rs.rank(); ++k) {
      Word w = v.word();
      w.push_back(k);
      auto next = WeylElement::from_word(rs, w);
      if (found.emplace(flat_key(next.root_action()), next).second) queue.push_back(next);
    }
  }
  std::vector<WeylElement> out;
  out.reserve(found.size());
  for (auto& [key, v] : found) out.push_back(v);
  sort_by_length_then_word(out);
  return out;
}

WeylElement reflection(const RootSystem& rs, const Root& beta) {
  if (!rs.is_root(beta.coords)) throw InvalidInput("reflection: not a root " + format_vec(beta.coords));
  Root cur = beta.is_positive() ? beta : -beta;
  // Walk down to a simple root: cur = s_{k1} ... s_{kt}(alpha_i).
  Word path;
  for (;;) {
    const int simple = simple_index_of(rs, cur);
    if (simple >= 0) {
      Word w(path.begin(), path.end());
      w.push_back(simple);
      w.insert(w.end(), path.rbegin(), path.rend());
      return WeylElement::from_word(rs, w);
    }
    int step = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.cartan().row(i).dot(cur.coords) > 0) { step = i; break; }
    if (step < 0) throw ConsistencyFailure("reflection: no descent for " + format_vec(cur.coords));
    cur = reflect(rs, step, cur);
    path.push_back(step);
  }
}

}  // namespace eqpos
