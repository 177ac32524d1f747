#include "eqpos_app/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "eqpos/errors.hpp"
#include "eqpos/wonderful.hpp"
#include "eqpos_app/oracles.hpp"
#include "eqpos_app/run.hpp"

namespace eqpos::app {
namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
CriterionResult timed(int id, std::string name, double limit_seconds, Fn&& body) {
  CriterionResult out{id, std::move(name), false, "", 0.0};
  const auto start = Clock::now();
  try {
    std::ostringstream detail;
    out.pass = body(detail);
    out.detail = detail.str();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && out.seconds > limit_seconds) {
    out.pass = false;
    out.detail += "; time limit exceeded";
  }
  return out;
}

PicClass ones(int r) { return PicClass{std::vector<std::int64_t>(static_cast<std::size_t>(r), 1)}; }

PicClass unit(int r, int m) {
  PicClass p{std::vector<std::int64_t>(static_cast<std::size_t>(r), 0)};
  p.coeffs[static_cast<std::size_t>(m)] = 1;
  return p;
}

std::vector<std::string> curve_ids(const BsdhVariety& z) {
  std::vector<std::string> ids;
  for (const auto& c : model_curves(z)) ids.push_back(c.id());
  return ids;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Nef by construction: nonnegative lines and tables under sum, tensor and Sym.
BundleExpr random_nef(std::mt19937_64& rng, const BsdhVariety& z, const std::vector<std::string>& ids, int depth) {
  if (depth <= 1 || uniform(rng, 0, 2) == 0) {
    if (uniform(rng, 0, 1) == 0) {
      PicClass p;
      for (int m = 0; m < z.length(); ++m) p.coeffs.push_back(uniform(rng, 0, 3));
      return BundleExpr::line(p);
    }
    const auto rank = uniform(rng, 1, 2);
    std::map<std::string, SplitType, std::less<>> entries;
    for (const auto& id : ids) {
      std::vector<std::int64_t> d;
      for (std::int64_t k = 0; k < rank; ++k) d.push_back(uniform(rng, 0, 4));
      entries.emplace(id, SplitType(std::move(d)));
    }
    return BundleExpr::table(std::move(entries));
  }
  switch (uniform(rng, 0, 2)) {
    case 0:
      return BundleExpr::direct_sum({random_nef(rng, z, ids, depth - 1), random_nef(rng, z, ids, depth - 1)});
    case 1:
      return BundleExpr::tensor(random_nef(rng, z, ids, depth - 1), random_nef(rng, z, ids, depth - 1));
    default:
      return BundleExpr::sym(static_cast<int>(uniform(rng, 1, 2)), random_nef(rng, z, ids, depth - 1));
  }
}

}  // namespace

Budget budget_for(Depth depth) {
  if (depth == Depth::kFull) return Budget{6, 1000, 200};
  return Budget{4, 200, 50};
}

Corpus build_corpus(int max_length) {
  Corpus corpus;
  for (const char* family : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto rs = RootSystem::build(family);
    FamilyCount count{family, 0, 0};
    for (const auto& w : oracle::reduced_words(rs, max_length)) {
      corpus.varieties.push_back(BsdhVariety::build(rs, w));
      const auto r = static_cast<std::int64_t>(w.size());
      ++count.words;
      count.curves += r << (r - 1);
    }
    corpus.families.push_back(count);
  }
  return corpus;
}

CriterionResult check_counting(const Corpus& corpus) {
  return timed(1, "counting", 30.0, [&](std::ostringstream& detail) {
    std::int64_t points = 0, curves = 0;
    for (const auto& z : corpus.varieties) {
      const int r = z.length();
      const auto xs = fixed_points(z);
      const auto cs = model_curves(z);
      if (xs.size() != (std::size_t{1} << r) || cs.size() != static_cast<std::size_t>(r) << (r - 1)) {
        detail << "count mismatch on word of length " << r;
        return false;
      }
      std::size_t incidences = 0;
      for (const auto& x : xs) {
        const auto through = curves_through(z, x);
        if (static_cast<int>(through.size()) != r) {
          detail << "point " << x.to_string() << " lies on " << through.size() << " curves";
          return false;
        }
        for (const auto& c : through)
          if (c.endpoint(false) != x && c.endpoint(true) != x) {
            detail << "curve " << c.id() << " does not pass through " << x.to_string();
            return false;
          }
        incidences += through.size();
      }
      if (incidences != 2 * cs.size()) {
        detail << "incidence double count fails";
        return false;
      }
      points += static_cast<std::int64_t>(xs.size());
      curves += static_cast<std::int64_t>(cs.size());
    }
    detail << corpus.varieties.size() << " varieties, " << points << " fixed points, " << curves << " curves";
    return true;
  });
}

CriterionResult check_degree_consistency(const Corpus& corpus) {
  return timed(2, "degree consistency", 60.0, [&](std::ostringstream& detail) {
    std::int64_t pairs = 0, mutant_misses = 0;
    for (const auto& z : corpus.varieties)
      for (const auto& c : model_curves(z))
        for (int m = 0; m < z.length(); ++m) {
          const auto gkm = degree_by_localization(z, m, c);
          const auto closed = degree_closed_form(z, m, c);
          if (gkm < 0 || gkm != closed) {
            detail << "curve " << c.id() << " L" << (m + 1) << ": localization " << gkm << ", closed form " << closed;
            return false;
          }
          if (oracle::mutated_closed_form(z, m, c) != gkm) ++mutant_misses;
          ++pairs;
        }
    detail << pairs << " degree pairs agree; injected fault caught on " << mutant_misses;
    if (mutant_misses == 0) {
      detail << " (fault injection went undetected)";
      return false;
    }
    return true;
  });
}

CriterionResult check_ample_seshadri(const Corpus& corpus) {
  return timed(3, "ample class has seshadri >= 1", 0.0, [&](std::ostringstream& detail) {
    std::int64_t points = 0;
    for (const auto& z : corpus.varieties) {
      const auto e = BundleExpr::line(ones(z.length()));
      const auto gkm = gkm_check(z);
      if (!ample_test(z, e, gkm).holds) {
        detail << "(1,...,1) not ample";
        return false;
      }
      for (const auto& x : fixed_points(z)) {
        if (seshadri(z, e, x, gkm).value < 1) {
          detail << "seshadri < 1 at " << x.to_string();
          return false;
        }
        ++points;
      }
    }
    detail << points << " fixed points checked";
    return true;
  });
}

CriterionResult check_worked_instance() {
  return timed(4, "worked instance A2 (1,2)", 0.0, [&](std::ostringstream& detail) {
    const auto z = BsdhVariety::build(RootSystem::build("A2"), {0, 1});
    std::multiset<std::vector<std::int64_t>> degrees;
    for (const auto& c : model_curves(z)) degrees.insert(basis_degrees(z, c));
    const std::multiset<std::vector<std::int64_t>> expected{{0, 1}, {0, 1}, {1, 0}, {1, 1}};
    if (degrees != expected) {
      detail << "curve degrees differ from a2, a2, a1, a1+a2";
      return false;
    }
    for (std::int64_t a1 = -3; a1 <= 3; ++a1)
      for (std::int64_t a2 = -3; a2 <= 3; ++a2) {
        const bool nef = nef_test(z, BundleExpr::line(PicClass{{a1, a2}})).holds;
        if (nef != (a1 >= 0 && a2 >= 0)) {
          detail << "nef verdict wrong at (" << a1 << "," << a2 << ")";
          return false;
        }
      }
    const auto e = BundleExpr::line(PicClass{{1, 1}});
    for (const auto& x : fixed_points(z))
      if (seshadri(z, e, x).value != 1) {
        detail << "seshadri != 1 at " << x.to_string();
        return false;
      }
    detail << "nef cone {a1 >= 0, a2 >= 0}; seshadri 1 at 4 points";
    return true;
  });
}

CriterionResult check_split_algebra(int trees) {
  return timed(5, "split-type algebra oracle", 10.0, [&](std::ostringstream& detail) {
    std::mt19937_64 rng(20240501);
    const std::vector<std::string> ids{"c0", "c1", "c2", "c3", "c4"};
    constexpr int kClasses = 3;
    std::map<std::string, std::vector<std::int64_t>> functionals;
    for (const auto& id : ids)
      for (int k = 0; k < kClasses; ++k) functionals[id].push_back(uniform(rng, -1, 1));
    std::int64_t max_rank = 0;
    for (int t = 0; t < trees; ++t) {
      const auto e = oracle::random_expr(rng, ids, kClasses, {});
      const auto r = rank(e);
      max_rank = std::max(max_rank, r);
      if (r > 20) {
        detail << "generator exceeded rank 20";
        return false;
      }
      for (const auto& id : ids) {
        const LineDegreeFn deg = [&](const PicClass& p) {
          std::int64_t total = 0;
          for (int k = 0; k < kClasses; ++k) total += p.coeffs[static_cast<std::size_t>(k)] * functionals[id][static_cast<std::size_t>(k)];
          return total;
        };
        const auto rule = restrict(e, id, deg);
        const auto brute = oracle::to_split(oracle::flatten(e, id, deg));
        if (!(rule == brute) || static_cast<std::int64_t>(rule.rank()) != r) {
          detail << "tree " << t << " differs on " << id;
          return false;
        }
      }
    }
    int sym_checks = 0;
    for (int s = 1; s <= 6; ++s)
      for (int n = 1; n <= 6; ++n) {
        std::vector<std::int64_t> d;
        for (int k = 0; k < s; ++k) d.push_back(k);
        const auto e = BundleExpr::sym(n, BundleExpr::table({{"c", SplitType(d)}}));
        const auto want = static_cast<std::int64_t>(oracle::multiset_count_pascal(s, n));
        if (rank(e) != want || static_cast<std::int64_t>(restrict(e, "c", nullptr).rank()) != want) {
          detail << "Sym^" << n << " of rank " << s << " has the wrong rank";
          return false;
        }
        ++sym_checks;
      }
    detail << trees << " random trees (max rank " << max_rank << ") agree; " << sym_checks << " Sym rank counts match";
    return true;
  });
}

CriterionResult check_seshadri_structure(const Corpus& corpus, int instances) {
  return timed(6, "seshadri structure", 0.0, [&](std::ostringstream& detail) {
    std::vector<const BsdhVariety*> pool;
    for (const auto& z : corpus.varieties)
      if (z.length() <= 4) pool.push_back(&z);
    std::mt19937_64 rng(7);
    for (int t = 0; t < instances; ++t) {
      const auto& z = *pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
      const auto ids = curve_ids(z);
      const auto e = random_nef(rng, z, ids, 3);
      const auto f = random_nef(rng, z, ids, 3);
      const auto points = fixed_points(z);
      const auto& x = points[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(points.size()) - 1))];
      if (!nef_test(z, e).holds || !nef_test(z, f).holds) {
        detail << "instance " << t << " is not nef";
        return false;
      }
      const auto sum = seshadri(z, BundleExpr::direct_sum({e, f}), x).value;
      if (sum != std::min(seshadri(z, e, x).value, seshadri(z, f, x).value)) {
        detail << "direct-sum rule fails on instance " << t;
        return false;
      }
      PicClass l;
      for (int m = 0; m < z.length(); ++m) l.coeffs.push_back(uniform(rng, 0, 3));
      const auto k = uniform(rng, 0, 4);
      PicClass kl = l;
      for (auto& a : kl.coeffs) a *= k;
      if (seshadri(z, BundleExpr::line(kl), x).value != k * seshadri(z, BundleExpr::line(l), x).value) {
        detail << "scaling rule fails on instance " << t;
        return false;
      }
    }
    detail << instances << " instances";
    return true;
  });
}

CriterionResult check_y_curves() {
  return timed(7, "y-curve cross-check", 0.0, [&](std::ostringstream& detail) {
    int varieties = 0;
    std::int64_t triples = 0, images = 0;
    for (const char* family : {"A1", "A2"}) {
      const auto rs = RootSystem::build(family);
      for (const auto& w : oracle::reduced_words(rs, 3)) {
        const auto z = BsdhVariety::build(rs, w);
        std::set<std::string> mine;
        for (const auto& yc : y_curves(z)) mine.insert(oracle::y_curve_key(yc));
        const auto brute = oracle::brute_force_y_curves(z);
        if (mine != brute || count_y_curves(z) != static_cast<std::int64_t>(brute.size())) {
          detail << family << " word of length " << w.size() << ": enumeration differs from brute force";
          return false;
        }
        triples += static_cast<std::int64_t>(brute.size());
        for (const auto& c : model_curves(z)) {
          const auto yc = y_curve_of(z, c);
          validate_y_curve(z, yc);
          if (!brute.contains(oracle::y_curve_key(yc))) {
            detail << "image of " << c.id() << " is not enumerated";
            return false;
          }
          for (int m = 0; m < z.length(); ++m)
            if (y_degree(z, unit(z.length(), m), yc) != degree(z, unit(z.length(), m), c)) {
              detail << "y_degree differs on " << c.id() << " for L" << (m + 1);
              return false;
            }
          const auto s_beta = reflection(rs, yc.beta);
          for (int m = 0; m < z.length(); ++m) {
            const int i = w[static_cast<std::size_t>(m)];
            auto prefix = [&](const GalleryPoint& x) {
              Word letters;
              for (int k = 0; k <= m; ++k)
                if (x.bits[static_cast<std::size_t>(k)]) letters.push_back(w[static_cast<std::size_t>(k)]);
              return min_coset_rep(rs, WeylElement::from_word(rs, letters), i);
            };
            const auto e0 = prefix(c.endpoint(false));
            const auto e1 = prefix(c.endpoint(true));
            const auto& v = yc.v[static_cast<std::size_t>(m)];
            const bool moving = std::find(yc.moving.begin(), yc.moving.end(), m) != yc.moving.end();
            bool ok = false;
            if (moving) {
              const auto other = min_coset_rep(rs, compose(rs, s_beta, v), i);
              ok = (e0 == v && e1 == other) || (e0 == other && e1 == v);
            } else {
              ok = e0 == v && e1 == v;
            }
            if (!ok) {
              detail << "endpoints of " << c.id() << " disagree in factor " << (m + 1);
              return false;
            }
          }
          ++images;
        }
        ++varieties;
      }
    }
    detail << varieties << " varieties, " << triples << " triples, " << images << " curve images";
    return true;
  });
}

namespace {

bool is_involution_candidate(const IntMat& m) {
  return m * m == IntMat::Identity(m.rows(), m.cols());
}

std::vector<SymmetricSpaceData> valid_involutions(const RootSystem& rs) {
  const int n = rs.rank();
  const int cells = n * n;
  std::vector<SymmetricSpaceData> out;
  std::vector<int> digits(static_cast<std::size_t>(cells), 0);
  while (true) {
    IntMat m(n, n);
    for (int k = 0; k < cells; ++k) m(k / n, k % n) = digits[static_cast<std::size_t>(k)] - 1;
    if (is_involution_candidate(m)) {
      try {
        out.push_back(validate_involution(rs, m));
      } catch (const InvalidInput&) {
      }
    }
    int pos = 0;
    while (pos < cells && ++digits[static_cast<std::size_t>(pos)] == 3) digits[static_cast<std::size_t>(pos++)] = 0;
    if (pos == cells) break;
  }
  return out;
}

BundleExpr random_table(std::mt19937_64& rng, const std::vector<WonderfulCurveClass>& classes, std::int64_t lo,
                        std::int64_t hi) {
  const auto rank = uniform(rng, 1, 2);
  std::map<std::string, SplitType, std::less<>> entries;
  for (const auto& c : classes) {
    std::vector<std::int64_t> d;
    for (std::int64_t k = 0; k < rank; ++k) d.push_back(uniform(rng, lo, hi));
    entries.emplace(c.id(), SplitType(std::move(d)));
  }
  return BundleExpr::table(std::move(entries));
}

std::int64_t table_min(const BundleExpr& e) {
  std::int64_t least = std::numeric_limits<std::int64_t>::max();
  for (const auto& [id, split] : std::get<BundleExpr::Table>(e.node()).entries)
    for (auto d : split.degrees()) least = std::min(least, d);
  return least;
}

}  // namespace

CriterionResult check_wonderful() {
  return timed(8, "wonderful suite", 0.0, [&](std::ostringstream& detail) {
    {
      const auto rs = RootSystem::build("A1");
      const auto sd = validate_involution(rs, involution_from_shortcut(rs, "minus-identity"));
      if (sd.restricted_roots.size() != 1 || sd.restricted_roots[0].coords(0) != 2 || curve_classes(sd).size() != 2) {
        detail << "A1 minus-identity: wrong restricted roots or class count";
        return false;
      }
    }
    {
      const auto rs = RootSystem::build("A1xA1");
      const auto sd = validate_involution(rs, involution_from_shortcut(rs, "swap"));
      if (curve_classes(sd).size() != 3 || sd.t1_rank != 1 || sd.t2_rank != 1) {
        detail << "A1xA1 swap: wrong class count or torus ranks";
        return false;
      }
      std::map<std::string, SplitType, std::less<>> entries{
          {"S:1,0", SplitType({2})}, {"S:0,1", SplitType({3})}, {"R:1,1", SplitType({1})}};
      if (seshadri_w(sd, BundleExpr::table(entries), WeylElement::identity(rs)).value != 1) {
        detail << "A1xA1 swap: hand table seshadri != 1";
        return false;
      }
    }
    std::mt19937_64 rng(11);
    int involutions = 0, tables = 0;
    for (const char* type : {"A1", "A1xA1", "A2", "A3"}) {
      const auto rs = RootSystem::build(type);
      const auto group = enumerate_weyl(rs);
      for (const auto& sd : valid_involutions(rs)) {
        ++involutions;
        if (sd.t1_rank + sd.t2_rank != rs.rank()) {
          detail << type << ": eigenvalue multiplicities do not sum to the rank";
          return false;
        }
        for (const auto& g : sd.restricted_roots)
          if (!(apply_involution(sd, g) == -g)) {
            detail << type << ": sigma(gamma) != -gamma";
            return false;
          }
        for (const auto& a : sd.fixed_levi_roots)
          if (!(apply_involution(sd, a) == a)) {
            detail << type << ": sigma moves a Levi root";
            return false;
          }
        for (const auto& a : rs.positive_roots())
          if (!rs.is_root(apply_involution(sd, a).coords)) {
            detail << type << ": sigma leaves the root set";
            return false;
          }
        const auto classes = curve_classes(sd);
        const auto want = rs.positive_roots().size() - sd.positive_levi_roots().size() + sd.restricted_roots.size();
        if (classes.size() != want) {
          detail << type << ": class count " << classes.size() << " != " << want;
          return false;
        }
        if (classes.empty()) continue;
        for (int t = 0; t < 4; ++t) {
          const auto e = random_table(rng, classes, -1, 3);
          const auto least = table_min(e);
          const auto nef = nef_test_w(sd, e);
          const auto ample = ample_test_w(sd, e);
          if (nef.holds != (least >= 0) || ample.holds != (least > 0) || nef.holds == nef.witness.has_value()) {
            detail << type << ": verdict differs from the direct minimum";
            return false;
          }
          if (nef.holds) {
            const auto& w = group[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(group.size()) - 1))];
            if (seshadri_w(sd, e, w).value != least) {
              detail << type << ": seshadri differs from the direct minimum";
              return false;
            }
            const auto f = random_table(rng, classes, 0, 3);
            std::map<std::string, SplitType, std::less<>> merged;
            const auto& te = std::get<BundleExpr::Table>(e.node()).entries;
            const auto& tf = std::get<BundleExpr::Table>(f.node()).entries;
            for (const auto& [id, split] : te) {
              auto d = split.degrees();
              const auto& other = tf.at(id).degrees();
              d.insert(d.end(), other.begin(), other.end());
              merged.emplace(id, SplitType(std::move(d)));
            }
            if (seshadri_w(sd, BundleExpr::table(merged), w).value !=
                std::min(seshadri_w(sd, e, w).value, seshadri_w(sd, f, w).value)) {
              detail << type << ": direct-sum rule fails";
              return false;
            }
          }
          ++tables;
        }
      }
    }
    detail << involutions << " valid involutions, " << tables << " tables";
    return true;
  });
}

CriterionResult check_gkm_guard(const Corpus& corpus) {
  return timed(9, "gkm guard", 0.0, [&](std::ostringstream& detail) {
    int verified = 0, tagged = 0;
    for (const auto& z : corpus.varieties) {
      const auto gkm = gkm_check(z);
      ProblemFile p;
      p.root_system = to_string(z.roots().type());
      p.mode = Mode::kBsdh;
      p.word = z.word();
      p.bundle = BundleExpr::line(ones(z.length()));
      p.queries = {{"nef", std::nullopt}, {"ample", std::nullopt}, {"seshadri", std::nullopt}};
      const auto doc = run(p);
      const std::string want = gkm.ok ? kGkmVerifiedTag : kModelCurveTag;
      for (const auto& r : doc["results"])
        if (r["tag"].get<std::string>() != want) {
          detail << "result tagged '" << r["tag"].get<std::string>() << "', expected '" << want << "'";
          return false;
        }
      (gkm.ok ? verified : tagged) += 1;
    }
    detail << verified << " gkm-verified, " << tagged << " tagged model-curve verdict";
    return true;
  });
}

bool SelftestReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

std::string SelftestReport::render() const {
  std::ostringstream out;
  out << "selftest (" << depth << ")\n";
  for (const auto& f : families) out << "  " << f.family << ": " << f.words << " words, " << f.curves << " curves\n";
  for (const auto& c : criteria)
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.detail << "\n";
  out << (all_pass() ? "all criteria passed" : "FAILED") << "\n";
  return out.str();
}

SelftestReport run_selftest(Depth depth) {
  const auto budget = budget_for(depth);
  const auto corpus = build_corpus(budget.corpus_length);
  SelftestReport report;
  report.depth = depth == Depth::kFull ? "full" : "small";
  report.families = corpus.families;
  report.criteria.push_back(check_counting(corpus));
  report.criteria.push_back(check_degree_consistency(corpus));
  report.criteria.push_back(check_ample_seshadri(corpus));
  report.criteria.push_back(check_worked_instance());
  report.criteria.push_back(check_split_algebra(budget.random_trees));
  report.criteria.push_back(check_seshadri_structure(corpus, budget.seshadri_instances));
  report.criteria.push_back(check_y_curves());
  report.criteria.push_back(check_wonderful());
  report.criteria.push_back(check_gkm_guard(corpus));
  return report;
}

}  // namespace eqpos::app
