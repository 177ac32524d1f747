#include "eqpos_app/oracles.hpp"

#include <algorithm>
#include <sstream>

#include "eqpos/errors.hpp"
#include "eqpos/weyl.hpp"

namespace eqpos::app::oracle {
namespace {

Histogram shift(const Histogram& h, std::int64_t by, std::uint64_t times) {
  Histogram out;
  for (const auto& [d, k] : h) out[d + by] += k * times;
  return out;
}

void accumulate(Histogram& into, const Histogram& h) {
  for (const auto& [d, k] : h) into[d] += k;
}

Histogram convolve(const Histogram& a, const Histogram& b) {
  Histogram out;
  for (const auto& [da, ka] : a)
    for (const auto& [db, kb] : b) out[da + db] += ka * kb;
  return out;
}

Histogram sym_power(const Histogram& h, int n) {
  // dp[k]: histogram of Sym^k of the degree groups processed so far.
  std::vector<Histogram> dp(static_cast<std::size_t>(n) + 1);
  dp[0][0] = 1;
  for (const auto& [d, m] : h) {
    std::vector<Histogram> next(dp.size());
    for (int k = 0; k <= n; ++k)
      for (int t = 0; t <= k; ++t) {
        const auto& prev = dp[static_cast<std::size_t>(k - t)];
        if (prev.empty()) continue;
        accumulate(next[static_cast<std::size_t>(k)], shift(prev, d * t, multiset_count_pascal(static_cast<int>(m), t)));
      }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(n)];
}

IntMat simple_matrix(const RootSystem& rs, int i) {
  IntMat s = IntMat::Identity(rs.rank(), rs.rank());
  for (int j = 0; j < rs.rank(); ++j) s(i, j) -= rs.cartan()(i, j);
  return s;
}

int length_of(const RootSystem& rs, const IntMat& m) {
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    const IntVec image = m * beta.coords;
    if ((image.array() < 0).any()) ++count;
  }
  return count;
}

std::string matrix_key(const IntMat& m) {
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out << m(r, c) << ",";
  return out.str();
}

}  // namespace

std::uint64_t multiset_count_pascal(int s, int n) {
  // C(n + s - 1, n) from the rows of Pascal's triangle.
  const int top = n + s - 1;
  if (top < 0) return n == 0 ? 1 : 0;
  std::vector<std::uint64_t> row{1};
  for (int k = 1; k <= top; ++k) {
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t c = 1; c < row.size(); ++c) next[c] = row[c - 1] + row[c];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(n)];
}

Histogram flatten(const BundleExpr& e, std::string_view curve_id, const LineDegreeFn& line_degree) {
  using E = BundleExpr;
  const auto& node = e.node();
  if (const auto* l = std::get_if<E::Line>(&node)) return Histogram{{line_degree(l->cls), 1}};
  if (const auto* s = std::get_if<E::DirectSum>(&node)) {
    Histogram out;
    for (const auto& t : s->terms) accumulate(out, flatten(t, curve_id, line_degree));
    return out;
  }
  if (const auto* t = std::get_if<E::Tensor>(&node))
    return convolve(flatten(t->factors[0], curve_id, line_degree), flatten(t->factors[1], curve_id, line_degree));
  if (const auto* s = std::get_if<E::Sym>(&node)) return sym_power(flatten(s->of[0], curve_id, line_degree), s->power);
  if (const auto* d = std::get_if<E::Dual>(&node)) {
    Histogram out;
    for (const auto& [deg, k] : flatten(d->of[0], curve_id, line_degree)) out[-deg] += k;
    return out;
  }
  const auto& table = std::get<E::Table>(node);
  const auto it = table.entries.find(curve_id);
  if (it == table.entries.end()) throw InvalidInput("oracle: missing table entry");
  Histogram out;
  for (auto deg : it->second.degrees()) out[deg] += 1;
  return out;
}

SplitType to_split(const Histogram& h) {
  std::vector<std::int64_t> degrees;
  for (const auto& [d, k] : h) degrees.insert(degrees.end(), k, d);
  return SplitType(std::move(degrees));
}

std::string y_curve_key(const YCurveData& yc) {
  std::ostringstream out;
  out << format_vec(yc.beta.coords) << "|";
  for (const auto& v : yc.v) out << matrix_key(v.root_action()) << ";";
  out << "|";
  for (int j : yc.moving) out << j << ",";
  return out.str();
}

std::set<std::string> brute_force_y_curves(const BsdhVariety& z) {
  const auto& rs = z.roots();
  const auto group = enumerate_weyl(rs);
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < group.size(); ++k) index.emplace(matrix_key(group[k].root_action()), k);
  const IntMat id = IntMat::Identity(rs.rank(), rs.rank());
  std::vector<std::size_t> inverse_of(group.size());
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t b = 0; b < group.size(); ++b)
      if (group[a].root_action() * group[b].root_action() == id) inverse_of[a] = b;

  // Minimal-length coset representatives, tested by comparing lengths across the coset.
  auto reps_for = [&](int omit) {
    std::vector<std::size_t> parabolic;
    for (std::size_t k = 0; k < group.size(); ++k) {
      const auto& w = group[k].word();
      if (std::find(w.begin(), w.end(), omit) == w.end()) parabolic.push_back(k);
    }
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < group.size(); ++k) {
      const int len = length_of(rs, group[k].root_action());
      bool minimal = true;
      for (auto u : parabolic) {
        const auto& other = group[index.at(matrix_key(group[k].root_action() * group[u].root_action()))];
        if (other.root_action() != group[k].root_action() && length_of(rs, other.root_action()) <= len) minimal = false;
      }
      if (minimal) reps.push_back(k);
    }
    return reps;
  };

  const int r = z.length();
  std::vector<std::vector<std::size_t>> reps;
  for (int j = 0; j < r; ++j) reps.push_back(reps_for(z.word()[static_cast<std::size_t>(j)]));

  std::set<std::string> out;
  for (const auto& beta : rs.positive_roots()) {
    std::vector<std::size_t> choice(static_cast<std::size_t>(r), 0);
    while (true) {
      std::vector<int> allowed;
      for (int j = 0; j < r; ++j) {
        const auto& vinv = group[inverse_of[reps[static_cast<std::size_t>(j)][choice[static_cast<std::size_t>(j)]]]];
        const IntVec image = vinv.root_action() * beta.coords;
        if ((image.array() < 0).any()) allowed.push_back(j);
      }
      for (std::uint32_t mask = 1; mask < (1U << allowed.size()); ++mask) {
        YCurveData yc{beta, {}, {}};
        for (int j = 0; j < r; ++j) yc.v.push_back(group[reps[static_cast<std::size_t>(j)][choice[static_cast<std::size_t>(j)]]]);
        for (std::size_t a = 0; a < allowed.size(); ++a)
          if (mask & (1U << a)) yc.moving.push_back(allowed[a]);
        out.insert(y_curve_key(yc));
      }
      int pos = r - 1;
      while (pos >= 0 && ++choice[static_cast<std::size_t>(pos)] == reps[static_cast<std::size_t>(pos)].size()) {
        choice[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

std::int64_t mutated_closed_form(const BsdhVariety& z, int m, const ModelCurve& c) {
  if (m < c.slot) return 0;
  Root x = z.roots().simple_root(z.word()[static_cast<std::size_t>(c.slot)]);
  for (int k = m; k > c.slot; --k)
    if (c.base.bits[static_cast<std::size_t>(k)]) x = reflect(z.roots(), z.word()[static_cast<std::size_t>(k)], x);
  if (!z.roots().is_root(x.coords)) return -1;
  const auto value = coroot(z.roots(), x).coords[z.word()[static_cast<std::size_t>(m)]];
  return value < 0 ? -value : value;
}

std::vector<Word> reduced_words(const RootSystem& rs, int max_length) {
  std::vector<Word> out;
  std::vector<std::pair<Word, IntMat>> frontier{{Word{}, IntMat::Identity(rs.rank(), rs.rank())}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::pair<Word, IntMat>> next;
    for (const auto& [word, m] : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        IntMat product = m * simple_matrix(rs, i);
        if (length_of(rs, product) != len) continue;
        Word w = word;
        w.push_back(i);
        out.push_back(w);
        next.emplace_back(std::move(w), std::move(product));
      }
    frontier = std::move(next);
  }
  return out;
}

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

BundleExpr random_leaf(std::mt19937_64& rng, const std::vector<std::string>& ids, int num_classes,
                       const RandomExprOptions& o, std::int64_t budget) {
  if (num_classes > 0 && uniform(rng, 0, 1) == 0) {
    std::vector<std::int64_t> coeffs;
    for (int k = 0; k < num_classes; ++k) coeffs.push_back(uniform(rng, -2, 2));
    return BundleExpr::line(PicClass{std::move(coeffs)});
  }
  const auto rank = uniform(rng, 1, std::min<std::int64_t>(3, budget));
  std::map<std::string, SplitType, std::less<>> entries;
  for (const auto& id : ids) {
    std::vector<std::int64_t> degrees;
    for (std::int64_t k = 0; k < rank; ++k) degrees.push_back(uniform(rng, o.min_degree, o.max_degree));
    entries.emplace(id, SplitType(std::move(degrees)));
  }
  return BundleExpr::table(std::move(entries));
}

BundleExpr random_node(std::mt19937_64& rng, const std::vector<std::string>& ids, int num_classes,
                       const RandomExprOptions& o, int depth, std::int64_t budget) {
  if (depth <= 1 || uniform(rng, 0, 3) == 0) return random_leaf(rng, ids, num_classes, o, budget);
  switch (uniform(rng, 0, 3)) {
    case 0: {
      if (budget < 2) return random_leaf(rng, ids, num_classes, o, budget);
      auto a = random_node(rng, ids, num_classes, o, depth - 1, budget - 1);
      auto b = random_node(rng, ids, num_classes, o, depth - 1, budget - rank(a));
      return BundleExpr::direct_sum({a, b});
    }
    case 1: {
      auto a = random_node(rng, ids, num_classes, o, depth - 1, budget);
      auto b = random_node(rng, ids, num_classes, o, depth - 1, budget / rank(a));
      return BundleExpr::tensor(a, b);
    }
    case 2: {
      auto a = random_node(rng, ids, num_classes, o, depth - 1, std::min<std::int64_t>(budget, 4));
      const auto s = static_cast<int>(rank(a));
      int n = 1;
      while (n < 3 && static_cast<std::int64_t>(multiset_count_pascal(s, n + 1)) <= budget) ++n;
      return BundleExpr::sym(static_cast<int>(uniform(rng, 1, n)), a);
    }
    default:
      return BundleExpr::dual(random_node(rng, ids, num_classes, o, depth - 1, budget));
  }
}

}  // namespace

BundleExpr random_expr(std::mt19937_64& rng, const std::vector<std::string>& curve_ids, int num_classes,
                       const RandomExprOptions& options) {
  return random_node(rng, curve_ids, num_classes, options, options.max_depth, options.max_rank);
}

}  // namespace eqpos::app::oracle
