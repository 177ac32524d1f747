#include <doctest.h>

#include <map>
#include <set>

#include "eqpos/errors.hpp"
#include "eqpos/weyl.hpp"

using namespace eqpos;

namespace {

IntVec v(std::initializer_list<std::int64_t> xs) { return to_intvec(std::vector<std::int64_t>(xs)); }

std::string key(const IntMat& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out += std::to_string(m(r, c)) + ",";
  return out;
}

IntMat simple_matrix(const RootSystem& rs, int i) {
  IntMat s = IntMat::Identity(rs.rank(), rs.rank());
  for (int j = 0; j < rs.rank(); ++j) s(i, j) -= rs.cartan()(i, j);
  return s;
}

// Word-length function on W by breadth-first search over the Cayley graph.
std::map<std::string, int> cayley_distances(const RootSystem& rs) {
  std::map<std::string, int> dist;
  std::vector<IntMat> frontier{IntMat::Identity(rs.rank(), rs.rank())};
  dist[key(frontier[0])] = 0;
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<IntMat> next;
    for (const auto& m : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        IntMat p = m * simple_matrix(rs, i);
        if (dist.emplace(key(p), d).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return dist;
}

void for_each_word(int rank, int max_length, const std::function<void(const Word&)>& fn) {
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int i = 0; i < rank; ++i) {
        Word x = w;
        x.push_back(i);
        fn(x);
        next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
}

}  // namespace

TEST_CASE("apply") {
  const auto rs = RootSystem::build("A2");
  const auto id = WeylElement::identity(rs);
  for (const auto& b : rs.positive_roots()) CHECK(apply(id, b) == b);
  CHECK(apply(WeylElement::from_word(rs, {0, 1}), rs.simple_root(0)).coords == v({0, 1}));
  for (int i = 0; i < 2; ++i)
    for (const auto& b : rs.positive_roots()) {
      CHECK(apply(WeylElement::simple(rs, i), b) == reflect(rs, i, b));
      const Weight w{v({2, -1})};
      CHECK(apply(WeylElement::simple(rs, i), w) == reflect(rs, i, w));
    }
}

TEST_CASE("canonical words are reduced and reproduce the element") {
  for (const char* t : {"A3", "B3", "G2"}) {
    const auto rs = RootSystem::build(t);
    for (const auto& w : enumerate_weyl(rs)) {
      CHECK(is_reduced(rs, w.word()));
      CHECK(WeylElement::from_word(rs, w.word()) == w);
      CHECK(static_cast<int>(inversion_set(rs, inverse(rs, w)).size()) == w.length());
    }
  }
}

TEST_CASE("is_reduced") {
  const auto rs = RootSystem::build("A2");
  CHECK(is_reduced(rs, {}));
  CHECK_FALSE(is_reduced(rs, {0, 0}));
  CHECK(is_reduced(rs, {0, 1, 0}));
  CHECK_FALSE(is_reduced(rs, {0, 1, 0, 1}));
  CHECK(first_non_reduced_position(rs, {0, 1, 0, 1}) == std::optional<std::size_t>(3));
  CHECK(first_non_reduced_position(rs, {0, 0}) == std::optional<std::size_t>(1));
}

TEST_CASE("is_reduced agrees with Cayley-graph distance and inversion counts") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"}) {
    CAPTURE(t);
    const auto rs = RootSystem::build(t);
    const auto dist = cayley_distances(rs);
    const int max_length = rs.rank() == 3 ? 6 : 7;
    int mismatches = 0;
    for_each_word(rs.rank(), max_length, [&](const Word& w) {
      IntMat m = IntMat::Identity(rs.rank(), rs.rank());
      for (int i : w) m = m * simple_matrix(rs, i);
      const bool by_distance = dist.at(key(m)) == static_cast<int>(w.size());
      const auto product = WeylElement::from_word(rs, w);
      const bool by_inversions = inversion_set(rs, product).size() == w.size();
      if (is_reduced(rs, w) != by_distance || by_inversions != by_distance) ++mismatches;
    });
    CHECK(mismatches == 0);
  }
}

TEST_CASE("inversion sets") {
  const auto rs = RootSystem::build("A2");
  CHECK(inversion_set(rs, WeylElement::identity(rs)).empty());
  for (int i = 0; i < 2; ++i) {
    const auto inv = inversion_set(rs, WeylElement::simple(rs, i));
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == rs.simple_root(i));
  }
  // v = s1 s2: scan R+ for roots sent negative by v^{-1} = s2 s1.
  const auto vel = WeylElement::from_word(rs, {0, 1});
  const auto vinv = WeylElement::from_word(rs, {1, 0});
  std::vector<Root> expected;
  for (const auto& b : rs.positive_roots())
    if (!apply(vinv, b).is_positive()) expected.push_back(b);
  CHECK(expected.size() == 2);
  CHECK(inversion_set(rs, vel) == expected);
  CHECK(expected[0].coords == v({1, 0}));
  CHECK(expected[1].coords == v({1, 1}));
}

TEST_CASE("Weyl group orders") {
  const std::pair<const char*, std::size_t> table[] = {{"A1", 2},  {"A2", 6},    {"B2", 8},    {"G2", 12},
                                                       {"A3", 24}, {"B3", 48},   {"C3", 48},   {"A1xA1", 4},
                                                       {"D4", 192}, {"F4", 1152}, {"A4", 120}};
  for (const auto& [t, order] : table) {
    CAPTURE(t);
    const auto rs = RootSystem::build(t);
    const auto all = enumerate_weyl(rs);
    CHECK(all.size() == order);
    std::set<std::string> distinct;
    for (const auto& w : all) distinct.insert(key(w.root_action()));
    CHECK(distinct.size() == order);
  }
  CHECK_THROWS_AS(enumerate_weyl(RootSystem::build("A5")), GuardExceeded);
}

TEST_CASE("minimal coset representatives") {
  const auto a1 = RootSystem::build("A1");
  const auto r1 = min_coset_reps(a1, 0);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].is_identity());
  CHECK(r1[1] == WeylElement::simple(a1, 0));

  CHECK(min_coset_reps(RootSystem::build("A2"), 0).size() == 3);

  for (const char* t : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    CAPTURE(t);
    const auto rs = RootSystem::build(t);
    const auto all = enumerate_weyl(rs);
    for (int i = 0; i < rs.rank(); ++i) {
      std::size_t parabolic = 0;
      for (const auto& w : all)
        if (std::find(w.word().begin(), w.word().end(), i) == w.word().end()) ++parabolic;
      const auto reps = min_coset_reps(rs, i);
      CHECK(reps.size() * parabolic == all.size());
      CHECK(reps.front().is_identity());
      for (const auto& r : reps) {
        CHECK(is_min_coset_rep(rs, r, i));
        for (int j = 0; j < rs.rank(); ++j)
          if (j != i) CHECK(apply(r, rs.simple_root(j)).is_positive());
      }
      for (const auto& w : all) {
        const auto m = min_coset_rep(rs, w, i);
        CHECK(std::find(reps.begin(), reps.end(), m) != reps.end());
        CHECK(m.length() <= w.length());
      }
    }
  }
}

TEST_CASE("length is subadditive, additive on coset factorizations") {
  const auto rs = RootSystem::build("A3");
  const auto all = enumerate_weyl(rs);
  for (std::size_t a = 0; a < all.size(); a += 5)
    for (std::size_t b = 0; b < all.size(); b += 3)
      CHECK(compose(rs, all[a], all[b]).length() <= all[a].length() + all[b].length());
  for (int i = 0; i < rs.rank(); ++i)
    for (const auto& w : all) {
      const auto m = min_coset_rep(rs, w, i);
      const auto u = compose(rs, inverse(rs, m), w);  // w = m u with u in the parabolic
      CHECK(w.length() == m.length() + u.length());
    }
}

TEST_CASE("reflections in arbitrary roots") {
  for (const char* t : {"A3", "B3", "G2"}) {
    const auto rs = RootSystem::build(t);
    for (const auto& beta : rs.positive_roots()) {
      const auto s = reflection(rs, beta);
      const auto c = coroot(rs, beta);
      CHECK(apply(s, beta) == -beta);
      for (const auto& x : rs.positive_roots())
        CHECK(apply(s, x).coords == x.coords - pairing(rs, x, c) * beta.coords);
    }
  }
}
