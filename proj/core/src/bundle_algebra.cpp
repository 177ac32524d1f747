#include "eqpos/bundle_algebra.hpp"

#include <algorithm>

#include "eqpos/errors.hpp"
#include "eqpos/integer.hpp"

namespace eqpos {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_size(std::int64_t n, const char* what) {
  if (n > kMaxSplitRank)
    throw GuardExceeded(std::string(what) + " would produce rank " + std::to_string(n) + " above the limit " +
                        std::to_string(kMaxSplitRank));
}

std::vector<std::int64_t> sym_power(const std::vector<std::int64_t>& d, int n) {
  check_size(multiset_count(static_cast<std::int64_t>(d.size()), n), "Sym");
  std::vector<std::int64_t> out;
  // Nondecreasing index tuples i_1 <= ... <= i_n.
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::int64_t sum = 0;
    for (auto i : idx) sum = checked_add(sum, d[i]);
    out.push_back(sum);
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == d.size()) --pos;
    if (pos < 0) break;
    const auto next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < n; ++k) idx[static_cast<std::size_t>(k)] = next;
  }
  return out;
}

}  // namespace

SplitType::SplitType(std::vector<std::int64_t> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw InvalidInput("split type must have at least one entry");
  std::sort(degrees_.begin(), degrees_.end());
}

BundleExpr BundleExpr::line(PicClass cls) { return BundleExpr(Line{std::move(cls)}); }

BundleExpr BundleExpr::direct_sum(std::vector<BundleExpr> terms) {
  if (terms.empty()) throw InvalidInput("direct sum of zero bundles has rank 0");
  return BundleExpr(DirectSum{std::move(terms)});
}

BundleExpr BundleExpr::tensor(BundleExpr a, BundleExpr b) {
  return BundleExpr(Tensor{{std::move(a), std::move(b)}});
}

BundleExpr BundleExpr::sym(int power, BundleExpr of) {
  if (power < 1) throw InvalidInput("Sym exponent must be >= 1, got " + std::to_string(power));
  return BundleExpr(Sym{power, {std::move(of)}});
}

BundleExpr BundleExpr::dual(BundleExpr of) { return BundleExpr(Dual{{std::move(of)}}); }

BundleExpr BundleExpr::table(std::map<std::string, SplitType, std::less<>> entries) {
  if (entries.empty()) throw InvalidInput("table must have at least one curve entry");
  const auto size = entries.begin()->second.rank();
  for (const auto& [id, split] : entries)
    if (split.rank() != size)
      throw InvalidInput("table entry '" + id + "' has rank " + std::to_string(split.rank()) + ", expected " +
                         std::to_string(size));
  return BundleExpr(Table{std::move(entries)});
}

int BundleExpr::depth() const {
  return std::visit(Overloaded{
                        [](const Line&) { return 1; },
                        [](const Table&) { return 1; },
                        [](const DirectSum& s) {
                          int d = 0;
                          for (const auto& t : s.terms) d = std::max(d, t.depth());
                          return d + 1;
                        },
                        [](const Tensor& t) { return std::max(t.factors[0].depth(), t.factors[1].depth()) + 1; },
                        [](const Sym& s) { return s.of[0].depth() + 1; },
                        [](const Dual& d) { return d.of[0].depth() + 1; },
                    },
                    node());
}

SplitType restrict(const BundleExpr& e, std::string_view curve_id, const LineDegreeFn& line_degree) {
  using E = BundleExpr;
  return std::visit(
      Overloaded{
          [&](const E::Line& l) { return SplitType({line_degree(l.cls)}); },
          [&](const E::Table& t) {
            const auto it = t.entries.find(curve_id);
            if (it == t.entries.end())
              throw InvalidInput("table has no entry for curve '" + std::string(curve_id) + "'");
            return it->second;
          },
          [&](const E::DirectSum& s) {
            std::vector<std::int64_t> out;
            for (const auto& term : s.terms) {
              const auto part = restrict(term, curve_id, line_degree);
              check_size(static_cast<std::int64_t>(out.size() + part.rank()), "direct sum");
              out.insert(out.end(), part.degrees().begin(), part.degrees().end());
            }
            return SplitType(std::move(out));
          },
          [&](const E::Tensor& t) {
            const auto a = restrict(t.factors[0], curve_id, line_degree);
            const auto b = restrict(t.factors[1], curve_id, line_degree);
            check_size(checked_mul(static_cast<std::int64_t>(a.rank()), static_cast<std::int64_t>(b.rank())),
                       "tensor product");
            std::vector<std::int64_t> out;
            out.reserve(a.rank() * b.rank());
            for (auto x : a.degrees())
              for (auto y : b.degrees()) out.push_back(checked_add(x, y));
            return SplitType(std::move(out));
          },
          [&](const E::Sym& s) {
            const auto base = restrict(s.of[0], curve_id, line_degree);
            return SplitType(sym_power(base.degrees(), s.power));
          },
          [&](const E::Dual& d) {
            auto base = restrict(d.of[0], curve_id, line_degree).degrees();
            for (auto& x : base) x = checked_neg(x);
            return SplitType(std::move(base));
          },
      },
      e.node());
}

std::int64_t rank(const BundleExpr& e) {
  using E = BundleExpr;
  return std::visit(Overloaded{
                        [](const E::Line&) -> std::int64_t { return 1; },
                        [](const E::Table& t) -> std::int64_t {
                          return static_cast<std::int64_t>(t.entries.begin()->second.rank());
                        },
                        [](const E::DirectSum& s) {
                          std::int64_t r = 0;
                          for (const auto& term : s.terms) r = checked_add(r, rank(term));
                          return r;
                        },
                        [](const E::Tensor& t) { return checked_mul(rank(t.factors[0]), rank(t.factors[1])); },
                        [](const E::Sym& s) { return multiset_count(rank(s.of[0]), s.power); },
                        [](const E::Dual& d) { return rank(d.of[0]); },
                    },
                    e.node());
}

void for_each_line(const BundleExpr& e, const std::function<void(const PicClass&)>& fn) {
  using E = BundleExpr;
  std::visit(Overloaded{
                 [&](const E::Line& l) { fn(l.cls); },
                 [&](const E::Table&) {},
                 [&](const E::DirectSum& s) {
                   for (const auto& t : s.terms) for_each_line(t, fn);
                 },
                 [&](const E::Tensor& t) {
                   for (const auto& f : t.factors) for_each_line(f, fn);
                 },
                 [&](const E::Sym& s) { for_each_line(s.of[0], fn); },
                 [&](const E::Dual& d) { for_each_line(d.of[0], fn); },
             },
             e.node());
}

void for_each_table(const BundleExpr& e, const std::function<void(const BundleExpr::Table&)>& fn) {
  using E = BundleExpr;
  std::visit(Overloaded{
                 [&](const E::Line&) {},
                 [&](const E::Table& t) { fn(t); },
                 [&](const E::DirectSum& s) {
                   for (const auto& t : s.terms) for_each_table(t, fn);
                 },
                 [&](const E::Tensor& t) {
                   for (const auto& f : t.factors) for_each_table(f, fn);
                 },
                 [&](const E::Sym& s) { for_each_table(s.of[0], fn); },
                 [&](const E::Dual& d) { for_each_table(d.of[0], fn); },
             },
             e.node());
}

std::int64_t seshadri_engine(const std::vector<SplitType>& split_types) {
  if (split_types.empty()) throw InvalidInput("seshadri_engine: no curves through the point");
  std::int64_t best = split_types.front().min();
  for (const auto& s : split_types) best = std::min(best, s.min());
  if (best < 0) throw NotNefError("seshadri_engine: negative split-type entry " + std::to_string(best));
  return best;
}

std::optional<int> twist_threshold(const std::vector<SplitType>& bundle_on_curves,
                                   const std::vector<std::int64_t>& line_on_curves, int bound) {
  if (bundle_on_curves.size() != line_on_curves.size())
    throw InvalidInput("twist_threshold: curve lists differ in length");
  // The least entry of Sym^n(E)|_C is n * min(E|_C).
  for (int n = 1; n <= bound; ++n) {
    bool nef = true;
    for (std::size_t c = 0; c < bundle_on_curves.size() && nef; ++c)
      nef = checked_mul(n, bundle_on_curves[c].min()) >= line_on_curves[c];
    if (nef) return n;
  }
  return std::nullopt;
}

}  // namespace eqpos
