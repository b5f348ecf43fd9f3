#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etheta/enumerate.hpp"
#include "etheta/error.hpp"
#include "etheta/maps.hpp"
#include "oracles.hpp"

using namespace etheta;

namespace {

SpaceMap identity_map(const FiniteSpace& s) {
  std::vector<int> images(s.size());
  for (int i = 0; i < s.size(); ++i) images[i] = i;
  return SpaceMap(s, s, images);
}

std::vector<SpaceMap> all_maps(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<SpaceMap> maps;
  std::uint64_t count = 1;
  for (int i = 0; i < x.size(); ++i) count *= y.size();
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<int> images(x.size());
    std::uint64_t v = k;
    for (int i = x.size() - 1; i >= 0; --i) {
      images[i] = int(v % y.size());
      v /= y.size();
    }
    maps.emplace_back(x, y, images);
  }
  return maps;
}

}  // namespace

TEST_CASE("image and preimage structure") {
  std::mt19937 rng(5);
  const auto spaces2 = enumerate_topologies(2);
  const auto spaces3 = enumerate_topologies(3);
  for (const FiniteSpace& x : spaces3)
    for (const FiniteSpace& y : spaces2)
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> images(3);
        for (auto& v : images) v = int(rng() % 2);
        const SpaceMap f(x, y, images);
        for (Mask ma = 0; ma < 8; ++ma) {
          const PointSet a(ma);
          CHECK(a.subset_of(f.preimage(f.image(a))));
        }
        for (Mask mb = 0; mb < 4; ++mb)
          for (Mask mc = 0; mc < 4; ++mc) {
            const PointSet b(mb), c(mc);
            CHECK(f.preimage(b | c) == (f.preimage(b) | f.preimage(c)));
            CHECK(f.preimage(b & c) == (f.preimage(b) & f.preimage(c)));
            CHECK(f.preimage(b.complement(2)) == f.preimage(b).complement(3));
          }
      }
}

TEST_CASE("composition and restriction") {
  const FiniteSpace s = oracle::space_abcd_7();
  const SpaceMap id = identity_map(s);
  const SpaceMap constant(s, s, {2, 2, 2, 2});
  SUBCASE("identity is neutral") {
    const SpaceMap c1 = compose(id, constant);
    const SpaceMap c2 = compose(constant, id);
    CHECK(c1.images() == constant.images());
    CHECK(c2.images() == constant.images());
  }
  SUBCASE("restriction to the full carrier keeps the space") {
    const SpaceMap r = restrict(constant, s.full_set());
    CHECK(r.domain() == s);
    CHECK(r.images() == constant.images());
  }
  SUBCASE("restriction of the constant map to {a,b}") {
    const SpaceMap r = restrict(constant, oracle::set_of(s, {"a", "b"}));
    CHECK(r.domain().size() == 2);
    CHECK(r.domain().opens().size() == 3);
    CHECK(r.images() == std::vector<int>{2, 2});
    CHECK(map_property(r, MapPropertyKind::SEstarContinuous).holds);
  }
  SUBCASE("mismatched carriers are rejected") {
    const FiniteSpace two = FiniteSpace::discrete({"x", "y"});
    CHECK_THROWS_AS(compose(identity_map(two), constant), Error);
    CHECK_THROWS_AS(restrict(constant, PointSet::empty()), Error);
    CHECK_THROWS_AS(SpaceMap(two, two, {0, 5}), Error);
    CHECK_THROWS_AS(SpaceMap(two, two, {0}), Error);
  }
}

TEST_CASE("worked constant map: S-e*-continuous but not S-continuous") {
  const FiniteSpace s = oracle::space_abcd_7();
  const SpaceMap f(s, s, {2, 2, 2, 2});
  const OperatorTable t(s);
  const auto se = map_property(f, MapPropertyKind::SEstarContinuous, t, t);
  const auto sc = map_property(f, MapPropertyKind::SContinuous, t, t);
  CHECK(se.holds);
  CHECK(!sc.holds);
  CHECK(sc.witness == "x=a, V={c}");
  CHECK(oracle::s_estar_continuous(f));
  CHECK(!oracle::s_continuous(f));
}

TEST_CASE("identity maps are continuous and irresolute") {
  for (const FiniteSpace& s : enumerate_topologies(3)) {
    const SpaceMap id = identity_map(s);
    const OperatorTable t(s);
    CHECK(map_property(id, MapPropertyKind::Continuous, t, t).holds);
    CHECK(map_property(id, MapPropertyKind::EstarIrresolute, t, t).holds);
    CHECK(map_property(id, MapPropertyKind::WeaklyEstarIrresolute, t, t).holds);
  }
}

TEST_CASE("identity on the worked five-open space: theta-S-e* equals the brute-force sweep") {
  const FiniteSpace s = oracle::space_abcd_5();
  const SpaceMap id = identity_map(s);
  const bool expected = oracle::theta_s_estar_continuous(id);
  CHECK(map_property(id, MapPropertyKind::ThetaSEstarContinuous).holds == expected);
  // e*O there is the full powerset while only five sets are open, so no
  // open U squeezes into V = {x} for non-open {x}; the sweep says false.
  CHECK(!expected);
}

TEST_CASE("map properties agree with the quantifier oracle over 2-point ensembles") {
  const auto spaces = enumerate_topologies(2);
  for (const FiniteSpace& x : spaces)
    for (const FiniteSpace& y : spaces) {
      const OperatorTable tx(x), ty(y);
      for (const SpaceMap& f : all_maps(x, y)) {
        CHECK(map_property(f, MapPropertyKind::SContinuous, tx, ty).holds ==
              oracle::s_continuous(f));
        CHECK(map_property(f, MapPropertyKind::SEstarContinuous, tx, ty).holds ==
              oracle::s_estar_continuous(f));
        CHECK(map_property(f, MapPropertyKind::ThetaSEstarContinuous, tx, ty).holds ==
              oracle::theta_s_estar_continuous(f));
        CHECK(map_property(f, MapPropertyKind::WeaklyEstarIrresolute, tx, ty).holds ==
              oracle::weakly_estar_irresolute_pointwise(f));
        CHECK(map_property(f, MapPropertyKind::StronglyEstarThetaClosedGraph, tx, ty).holds ==
              oracle::graph_strongly_theta_closed_rectangles(f));
      }
    }
}

TEST_CASE("spot-check the oracle agreement on a 3-point ensemble") {
  const FiniteSpace x = oracle::space_123();
  for (const FiniteSpace& y : enumerate_topologies(2)) {
    const OperatorTable tx(x), ty(y);
    for (const SpaceMap& f : all_maps(x, y)) {
      CHECK(map_property(f, MapPropertyKind::ThetaSEstarContinuous, tx, ty).holds ==
            oracle::theta_s_estar_continuous(f));
      CHECK(map_property(f, MapPropertyKind::WeaklyEstarIrresolute, tx, ty).holds ==
            oracle::weakly_estar_irresolute_pointwise(f));
      CHECK(map_property(f, MapPropertyKind::StronglyEstarThetaClosedGraph, tx, ty).holds ==
            oracle::graph_strongly_theta_closed_rectangles(f));
    }
  }
}

TEST_CASE("d-set preimages under weakly irresolute surjections") {
  const FiniteSpace s = oracle::space_abcd_7();
  const OperatorTable t(s);
  const SpaceMap id = identity_map(s);
  SUBCASE("worked d-set {b}") {
    const PointSet b = oracle::set_of(s, {"b"});
    const DsetDecomposition d = preimage_dset(id, b, t, t);
    CHECK(t.in_family(FamilyKind::EstarThetaOpen, d.pre_u));
    CHECK(d.pre_u != s.full_set());
    CHECK(t.in_family(FamilyKind::EstarThetaOpen, d.pre_v));
    CHECK((d.pre_u - d.pre_v) == b);
  }
  SUBCASE("a proper theta-open set decomposes with an empty subtrahend") {
    const PointSet a = oracle::set_of(s, {"a"});
    const DsetDecomposition d = preimage_dset(id, a, t, t);
    CHECK(d.pre_u == a);
    CHECK(d.pre_v == PointSet::empty());
  }
  SUBCASE("preconditions are enforced") {
    const SpaceMap constant(s, s, {2, 2, 2, 2});
    const OperatorTable t5(oracle::space_abcd_5());
    CHECK_THROWS_AS(preimage_dset(constant, oracle::set_of(s, {"b"}), t, t), Error);
    CHECK_THROWS_AS(preimage_dset(id, s.full_set(), t, t), Error);
  }
  SUBCASE("every d-set decomposes across 2-point weakly irresolute surjections") {
    const auto spaces = enumerate_topologies(2);
    for (const FiniteSpace& x : spaces)
      for (const FiniteSpace& y : spaces) {
        const OperatorTable tx(x), ty(y);
        for (const SpaceMap& f : all_maps(x, y)) {
          if (!f.surjective()) continue;
          if (!map_property(f, MapPropertyKind::WeaklyEstarIrresolute, tx, ty).holds) continue;
          for (PointSet a : ty.family(FamilyKind::DSet)) {
            const DsetDecomposition d = preimage_dset(f, a, tx, ty);
            CHECK((d.pre_u - d.pre_v) == f.preimage(a));
          }
        }
      }
  }
}

TEST_CASE("product projections are continuous and the product does not lose opens") {
  const auto spaces = enumerate_topologies(2);
  for (const FiniteSpace& x : spaces)
    for (const FiniteSpace& y : spaces) {
      const FiniteSpace p = product(x, y);
      CHECK(p.opens().size() >= x.opens().size());
      std::vector<int> to_x(p.size()), to_y(p.size());
      for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j) {
          to_x[i * y.size() + j] = i;
          to_y[i * y.size() + j] = j;
        }
      CHECK(map_property(SpaceMap(p, x, to_x), MapPropertyKind::Continuous).holds);
      CHECK(map_property(SpaceMap(p, y, to_y), MapPropertyKind::Continuous).holds);
    }
}

TEST_CASE("map property names round-trip") {
  for (MapPropertyKind kind : all_map_property_kinds()) {
    auto parsed = parse_map_property_kind(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
}
