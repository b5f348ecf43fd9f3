#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etheta/enumerate.hpp"
#include "etheta/error.hpp"
#include "etheta/operators.hpp"
#include "oracles.hpp"

using namespace etheta;

namespace {

SetFamily family_from_masks(int n, std::initializer_list<Mask> masks) {
  std::vector<PointSet> members;
  for (Mask m : masks) members.push_back(PointSet(m));
  return SetFamily(n, std::move(members));
}

PointSet L(const FiniteSpace& s, const std::vector<std::string>& labels) {
  return oracle::set_of(s, labels);
}

}  // namespace

TEST_CASE("worked space {1,2,3}: theta-closed singletons, open union escape") {
  const FiniteSpace s = oracle::space_123();
  const OperatorTable t(s);
  const PointSet one = L(s, {"1"}), two = L(s, {"2"}), both = L(s, {"1", "2"});
  CHECK(t.in_family(FamilyKind::EstarThetaClosed, one));
  CHECK(t.in_family(FamilyKind::EstarThetaClosed, two));
  CHECK(!t.in_family(FamilyKind::EstarThetaClosed, both));
  CHECK(t.apply(OperatorKind::EstarClTheta, one) == one);
  CHECK(t.apply(OperatorKind::EstarClTheta, two) == two);
  CHECK(t.apply(OperatorKind::EstarClTheta, both) == s.full_set());
}

TEST_CASE("worked seven-open space: families") {
  const FiniteSpace s = oracle::space_abcd_7();
  const OperatorTable t(s);
  SUBCASE("regular opens") {
    CHECK(t.family(FamilyKind::RegularOpen) ==
          family_from_masks(4, {0b0000, 0b0001, 0b1100, 0b1111}));
  }
  SUBCASE("theta-open family misses exactly {b}") {
    for (Mask m = 0; m < 16; ++m)
      CHECK(t.family_raw(FamilyKind::EstarThetaOpen, m) == (m != 0b0010));
  }
  SUBCASE("d-sets miss exactly X") {
    for (Mask m = 0; m < 16; ++m)
      CHECK(t.in_family(FamilyKind::DSet, PointSet(m)) == (m != 0b1111));
  }
  SUBCASE("delta closure of {b} is {b}") {
    CHECK(t.apply(OperatorKind::DeltaCl, L(s, {"b"})) == L(s, {"b"}));
  }
  SUBCASE("{a,b} is theta-closed") {
    CHECK(t.apply(OperatorKind::EstarClTheta, L(s, {"a", "b"})) == L(s, {"a", "b"}));
  }
}

TEST_CASE("worked five-open space: e* side trivializes, beta side does not") {
  const FiniteSpace s = oracle::space_abcd_5();
  const OperatorTable t(s);
  SUBCASE("e*-regular = theta-open = e*-open = full powerset") {
    CHECK(t.family(FamilyKind::EstarRegular).size() == 16);
    CHECK(t.family(FamilyKind::EstarThetaOpen).size() == 16);
    CHECK(t.family(FamilyKind::EstarOpen).size() == 16);
  }
  SUBCASE("beta-theta-open collapses to {empty, X}") {
    CHECK(t.family(FamilyKind::BetaThetaOpen) == family_from_masks(4, {0b0000, 0b1111}));
  }
  SUBCASE("beta-open family is the worked nine-member list") {
    CHECK(t.family(FamilyKind::BetaOpen) ==
          family_from_masks(4, {0b0000, 0b0001, 0b0011, 0b0101, 0b1001, 0b0111, 0b1011, 0b1101,
                                0b1111}));
  }
  SUBCASE("kernels split between the e* and beta sides") {
    const PointSet ab = L(s, {"a", "b"});
    CHECK(t.apply(OperatorKind::EstarKerTheta, ab) == ab);
    CHECK(t.apply(OperatorKind::BetaKerTheta, ab) == s.full_set());
  }
}

TEST_CASE("discrete space: every family is the powerset except d-sets") {
  const OperatorTable t(FiniteSpace::discrete({"x", "y", "z"}));
  for (FamilyKind kind : all_family_kinds()) {
    if (kind == FamilyKind::DSet) continue;
    CHECK(t.family(kind).size() == 8);
  }
  for (Mask m = 0; m < 8; ++m)
    CHECK(t.in_family(FamilyKind::DSet, PointSet(m)) == (m != 0b111));
}

TEST_CASE("extremal operator values") {
  for (const FiniteSpace& s : enumerate_topologies(3)) {
    const OperatorTable t(s);
    for (OperatorKind cl : {OperatorKind::Cl, OperatorKind::DeltaCl, OperatorKind::EstarCl,
                            OperatorKind::EstarClTheta, OperatorKind::BetaCl,
                            OperatorKind::BetaClTheta}) {
      CHECK(t.apply(cl, PointSet::empty()) == PointSet::empty());
      CHECK(t.apply(cl, s.full_set()) == s.full_set());
    }
    // the empty set is theta-open, so its kernel is empty
    CHECK(t.apply(OperatorKind::EstarKerTheta, PointSet::empty()) == PointSet::empty());
    CHECK(t.apply(OperatorKind::EstarKerTheta, s.full_set()) == s.full_set());
  }
}

TEST_CASE("operator tables agree with the literal-definition oracle on all 3-point spaces") {
  for (const FiniteSpace& s : enumerate_topologies(3)) {
    const OperatorTable t(s);
    CHECK(t.family(FamilyKind::RegularOpen) == oracle::regular_open_family(s));
    CHECK(t.family(FamilyKind::DeltaOpen) == oracle::delta_open_family(s));
    CHECK(t.family(FamilyKind::EstarOpen) == oracle::estar_open_family(s));
    CHECK(t.family(FamilyKind::EstarThetaOpen) == oracle::estar_theta_open_family(s));
    CHECK(t.family(FamilyKind::BetaOpen) == oracle::beta_open_family(s));
    CHECK(t.family(FamilyKind::BetaThetaOpen) == oracle::beta_theta_open_family(s));
    CHECK(t.family(FamilyKind::DSet) == oracle::dset_family(s));
    for (Mask m = 0; m < 8; ++m) {
      const PointSet a(m);
      CHECK(t.apply(OperatorKind::DeltaCl, a) == oracle::delta_cl_all_opens(s, a));
      CHECK(t.apply(OperatorKind::EstarCl, a) == oracle::estar_cl(s, a));
      CHECK(t.apply(OperatorKind::EstarInt, a) == oracle::estar_int(s, a));
      CHECK(t.apply(OperatorKind::EstarClTheta, a) == oracle::estar_cl_theta(s, a));
      CHECK(t.apply(OperatorKind::EstarKerTheta, a) == oracle::estar_ker_theta(s, a));
      CHECK(t.apply(OperatorKind::BetaCl, a) == oracle::beta_cl(s, a));
      CHECK(t.apply(OperatorKind::BetaClTheta, a) == oracle::beta_cl_theta(s, a));
      CHECK(t.apply(OperatorKind::BetaKerTheta, a) == oracle::beta_ker_theta(s, a));
    }
  }
}

TEST_CASE("worked spaces agree with the oracle at four points") {
  for (const FiniteSpace& s : {oracle::space_abcd_7(), oracle::space_abcd_5()}) {
    const OperatorTable t(s);
    CHECK(t.family(FamilyKind::EstarThetaOpen) == oracle::estar_theta_open_family(s));
    CHECK(t.family(FamilyKind::BetaThetaOpen) == oracle::beta_theta_open_family(s));
    CHECK(t.family(FamilyKind::DSet) == oracle::dset_family(s));
    for (Mask m = 0; m < 16; ++m) {
      const PointSet a(m);
      CHECK(t.apply(OperatorKind::EstarClTheta, a) == oracle::estar_cl_theta(s, a));
      CHECK(t.apply(OperatorKind::EstarKerTheta, a) == oracle::estar_ker_theta(s, a));
      CHECK(t.apply(OperatorKind::BetaClTheta, a) == oracle::beta_cl_theta(s, a));
    }
  }
}

TEST_CASE("closure/interior duality for every operator pair") {
  const std::pair<OperatorKind, OperatorKind> duals[] = {
      {OperatorKind::Cl, OperatorKind::Int},
      {OperatorKind::DeltaCl, OperatorKind::DeltaInt},
      {OperatorKind::EstarCl, OperatorKind::EstarInt},
      {OperatorKind::EstarClTheta, OperatorKind::EstarIntTheta},
      {OperatorKind::BetaCl, OperatorKind::BetaInt},
  };
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const OperatorTable t(s);
      for (Mask m = 0; m < (Mask(1) << n); ++m)
        for (const auto& [cl, in] : duals)
          CHECK(t.apply(in, PointSet(m)) ==
                t.apply(cl, PointSet(m).complement(n)).complement(n));
    }
}

TEST_CASE("alternative cluster formula for e*-cl") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const OperatorTable t(s);
      for (Mask m = 0; m < (Mask(1) << n); ++m)
        CHECK(t.apply(OperatorKind::EstarCl, PointSet(m)) ==
              oracle::estar_cl_by_cluster(s, PointSet(m)));
    }
}

TEST_CASE("union and intersection closure of the generalized families") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const OperatorTable t(s);
      for (FamilyKind kind : {FamilyKind::EstarOpen, FamilyKind::BetaOpen,
                              FamilyKind::EstarThetaOpen, FamilyKind::BetaThetaOpen}) {
        const auto& members = t.family(kind).members();
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j)
            CHECK(t.in_family(kind, members[i] | members[j]));
      }
      const auto& thetac = t.family(FamilyKind::EstarThetaClosed).members();
      for (std::size_t i = 0; i < thetac.size(); ++i)
        for (std::size_t j = i + 1; j < thetac.size(); ++j)
          CHECK(t.in_family(FamilyKind::EstarThetaClosed, thetac[i] & thetac[j]));
    }
}

TEST_CASE("cross-check passes on every space with up to 4 points") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const OperatorTable t(s);
      const CrossCheckReport r = t.cross_check();
      CHECK(r.ok);
      if (!r.ok) MESSAGE(r.first_failure);
      CHECK(r.subsets_checked == (std::uint64_t(1) << n));
    }
}

TEST_CASE("kind names round-trip") {
  for (FamilyKind kind : all_family_kinds()) {
    auto parsed = parse_family_kind(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  for (OperatorKind kind : all_operator_kinds()) {
    auto parsed = parse_operator_kind(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK(!parse_family_kind("nonsense").has_value());
}

TEST_CASE("carrier cap") {
  std::vector<std::string> names;
  for (int i = 0; i < 17; ++i) names.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(FiniteSpace::discrete(names), Error);
}
