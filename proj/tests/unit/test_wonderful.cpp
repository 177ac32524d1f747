#include <doctest.h>

#include "eqpos/errors.hpp"
#include "eqpos/wonderful.hpp"

using namespace eqpos;

namespace {

IntVec v(std::initializer_list<std::int64_t> xs) { return to_intvec(std::vector<std::int64_t>(xs)); }

using Entries = std::map<std::string, SplitType, std::less<>>;

SymmetricSpaceData from_shortcut(const char* type, const char* shortcut) {
  const auto rs = RootSystem::build(type);
  return validate_involution(rs, involution_from_shortcut(rs, shortcut));
}

BundleExpr constant_table(const SymmetricSpaceData& sd, std::vector<std::int64_t> d) {
  Entries e;
  for (const auto& c : curve_classes(sd)) e.emplace(c.id(), SplitType(d));
  return BundleExpr::table(std::move(e));
}

}  // namespace

TEST_CASE("identity involution is degenerate") {
  const auto sd = from_shortcut("A2", "identity");
  CHECK(sd.t2_rank == 0);
  CHECK(sd.t1_rank == 2);
  CHECK(sd.restricted_roots.empty());
  CHECK(sd.degenerate());
  CHECK(curve_classes(sd).empty());
  CHECK(minimal_rank_report(sd).rank_g_mod_h == 0);
}

TEST_CASE("minus identity on A1") {
  const auto sd = from_shortcut("A1", "minus-identity");
  REQUIRE(sd.restricted_roots.size() == 1);
  CHECK(sd.restricted_roots[0].coords == v({2}));
  CHECK(sd.t2_rank == 1);
  CHECK(sd.fixed_levi_roots.empty());
  const auto classes = curve_classes(sd);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].id() == "S:1");
  CHECK(classes[1].id() == "R:2");
  CHECK(minimal_rank_report(sd).rank_g_mod_h == 1);
}

TEST_CASE("swap on A1xA1") {
  const auto rs = RootSystem::build("A1xA1");
  IntMat sigma(2, 2);
  sigma << 0, -1, -1, 0;
  CHECK(involution_from_shortcut(rs, "swap") == sigma);
  const auto sd = validate_involution(rs, sigma);
  CHECK(sd.fixed_levi_roots.empty());
  REQUIRE(sd.restricted_roots.size() == 1);
  CHECK(sd.restricted_roots[0].coords == v({1, 1}));
  CHECK(sd.t1_rank == 1);
  CHECK(sd.t2_rank == 1);
  CHECK(curve_classes(sd).size() == 3);
  const auto report = minimal_rank_report(sd);
  CHECK(report.rank_g == 2);
  CHECK(report.rank_g_mod_h == 1);
  CHECK(report.candidate_rank_h == 1);
}

TEST_CASE("diagram shortcut") {
  // alpha_i -> -alpha_{4-i} on A3, that is -w0.
  const auto sd = from_shortcut("A3", "diagram:3,2,1");
  CHECK(sd.t2_rank == 2);
  CHECK(sd.t1_rank == 1);
  for (const auto& g : sd.restricted_roots) CHECK(apply_involution(sd, g) == -g);
  CHECK_THROWS_AS(involution_from_shortcut(RootSystem::build("A3"), "diagram:1,1,2"), InvalidInput);
  CHECK_THROWS_AS(involution_from_shortcut(RootSystem::build("A2"), "swap"), InvalidInput);
  CHECK_THROWS_AS(involution_from_shortcut(RootSystem::build("A2"), "twist"), InvalidInput);
}

TEST_CASE("invalid involutions are rejected") {
  const auto rs = RootSystem::build("A2");
  IntMat not_involutive(2, 2);
  not_involutive << 0, -1, 1, -1;  // order 3
  CHECK_THROWS_AS(validate_involution(rs, not_involutive), InvalidInput);
  IntMat swap_positive(2, 2);
  swap_positive << 0, 1, 1, 0;  // alpha1 <-> alpha2 keeps positivity but fixes nothing
  CHECK_THROWS_AS(validate_involution(rs, swap_positive), InvalidInput);
  IntMat off_lattice(2, 2);
  off_lattice << -1, 0, 2, 1;
  CHECK_THROWS_AS(validate_involution(rs, off_lattice), InvalidInput);
  CHECK_THROWS_AS(validate_involution(rs, IntMat::Identity(3, 3)), InvalidInput);
}

TEST_CASE("translates") {
  const auto sd = from_shortcut("A1xA1", "swap");
  const auto base = curve_classes(sd);
  CHECK(curves_through(sd, WeylElement::identity(sd.rs)).size() == base.size());
  for (const auto& w : enumerate_weyl(sd.rs)) {
    const auto through = curves_through(sd, w);
    REQUIRE(through.size() == 3);
    for (std::size_t k = 0; k < through.size(); ++k) {
      CHECK(through[k].id() == base[k].id());
      CHECK(through[k].translate == w);
    }
  }
  const auto w = WeylElement::from_word(sd.rs, {0});
  CHECK(curves_through(sd, w)[0].label() == curves_through(sd, w)[0].id() + "@[1]");
}

TEST_CASE("verdicts on hand tables") {
  const auto sd = from_shortcut("A1xA1", "swap");
  const auto zero = constant_table(sd, {0});
  CHECK(nef_test_w(sd, zero).holds);
  CHECK_FALSE(ample_test_w(sd, zero).holds);
  CHECK(ample_test_w(sd, constant_table(sd, {1, 2})).holds);

  Entries one_negative{{"S:1,0", SplitType({2})}, {"S:0,1", SplitType({-1})}, {"R:1,1", SplitType({1})}};
  const auto bad = nef_test_w(sd, BundleExpr::table(one_negative));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness);
  CHECK(bad.witness->curve == "S:0,1");
  CHECK(bad.witness->degree == -1);
  CHECK_THROWS_AS(seshadri_w(sd, BundleExpr::table(one_negative), WeylElement::identity(sd.rs)), NotNefError);

  for (std::int64_t k = 0; k <= 3; ++k)
    CHECK(seshadri_w(sd, constant_table(sd, {k, k}), WeylElement::identity(sd.rs)).value == k);

  Entries mixed{{"S:1,0", SplitType({2})}, {"S:0,1", SplitType({3})}, {"R:1,1", SplitType({1})}};
  for (const auto& w : enumerate_weyl(sd.rs)) {
    const auto s = seshadri_w(sd, BundleExpr::table(mixed), w);
    CHECK(s.value == 1);
    CHECK(s.attained_on.rfind("R:1,1", 0) == 0);
  }
}

TEST_CASE("table validation") {
  const auto sd = from_shortcut("A1", "minus-identity");
  CHECK_THROWS_AS(validate_table(sd, BundleExpr::line(PicClass{{1}})), InvalidInput);
  CHECK_THROWS_AS(validate_table(sd, BundleExpr::table(Entries{{"S:1", SplitType({1})}})), InvalidInput);
  const auto t = BundleExpr::table(Entries{{"S:1", SplitType({1})}, {"R:2", SplitType({0})}});
  CHECK_NOTHROW(validate_table(sd, t));
  CHECK_NOTHROW(validate_table(sd, BundleExpr::sym(2, BundleExpr::direct_sum({t, t}))));
  CHECK(seshadri_w(sd, BundleExpr::sym(2, t), WeylElement::identity(sd.rs)).value == 0);
}

TEST_CASE("class count formula and eigenspace property on A3 shortcuts") {
  for (const char* s : {"minus-identity", "diagram:3,2,1", "identity"}) {
    const auto sd = from_shortcut("A3", s);
    CHECK(curve_classes(sd).size() ==
          sd.rs.positive_roots().size() - sd.positive_levi_roots().size() + sd.restricted_roots.size());
    for (const auto& g : sd.restricted_roots) CHECK(apply_involution(sd, g) == -g);
    for (const auto& a : sd.fixed_levi_roots) CHECK(apply_involution(sd, a) == a);
    CHECK(sd.t1_rank + sd.t2_rank == 3);
  }
}
