#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etheta/enumerate.hpp"
#include "etheta/error.hpp"
#include "etheta/preorder.hpp"
#include "etheta/space.hpp"
#include "oracles.hpp"

using namespace etheta;

namespace {

SetFamily family_from_masks(int n, std::initializer_list<Mask> masks) {
  std::vector<PointSet> members;
  for (Mask m : masks) members.push_back(PointSet(m));
  return SetFamily(n, std::move(members));
}

}  // namespace

TEST_CASE("point set algebra laws") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + int(rng() % kMaxPoints);
    const Mask limit = PointSet::full(n).bits;
    const PointSet a(rng() & limit), b(rng() & limit);
    CHECK(a.complement(n).complement(n) == a);
    CHECK((a | a.complement(n)) == PointSet::full(n));
    CHECK((a & a.complement(n)) == PointSet::empty());
    CHECK((a - b) == (a & b.complement(n)));
    CHECK(a.subset_of(a | b));
    CHECK((a & b).subset_of(a));
  }
}

TEST_CASE("set family canonical order and dedup") {
  SetFamily fam(3, {PointSet(0b111), PointSet(0b001), PointSet(0b011), PointSet(0b001),
                    PointSet(0b000), PointSet(0b100)});
  REQUIRE(fam.size() == 5);
  // ascending cardinality, ties by numeric value
  CHECK(fam.members()[0] == PointSet(0b000));
  CHECK(fam.members()[1] == PointSet(0b001));
  CHECK(fam.members()[2] == PointSet(0b100));
  CHECK(fam.members()[3] == PointSet(0b011));
  CHECK(fam.members()[4] == PointSet(0b111));
  CHECK(fam.contains(PointSet(0b100)));
  CHECK(!fam.contains(PointSet(0b010)));
}

TEST_CASE("validate accepts the worked seven-open family") {
  const FiniteSpace s = oracle::space_abcd_7();
  CHECK(s.size() == 4);
  CHECK(s.opens().size() == 7);
  CHECK(s.is_open(oracle::set_of(s, {"a", "c", "d"})));
}

TEST_CASE("validate reports the first violated law") {
  SUBCASE("missing full set") {
    CHECK_THROWS_WITH_AS(
        FiniteSpace::validate({"a", "b"}, family_from_masks(2, {0b00, 0b01})),
        doctest::Contains("MissingFull"), Error);
  }
  SUBCASE("missing empty set") {
    CHECK_THROWS_WITH_AS(
        FiniteSpace::validate({"a", "b"}, family_from_masks(2, {0b01, 0b11})),
        doctest::Contains("MissingEmpty"), Error);
  }
  SUBCASE("union escapes the family") {
    try {
      FiniteSpace::validate({"a", "b", "c"}, family_from_masks(3, {0b000, 0b111, 0b001, 0b010}));
      FAIL("expected a NotClosedUnderUnion error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotClosedUnderUnion);
      CHECK(std::string(e.what()) == "NotClosedUnderUnion: {a} and {b}");
    }
  }
  SUBCASE("intersection escapes the family") {
    try {
      FiniteSpace::validate({"a", "b", "c"},
                            family_from_masks(3, {0b000, 0b111, 0b011, 0b110, 0b111}));
      FAIL("expected a NotClosedUnderIntersection error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotClosedUnderIntersection);
    }
  }
  SUBCASE("duplicate label") {
    CHECK_THROWS_WITH_AS(
        FiniteSpace::validate({"a", "a"}, family_from_masks(2, {0b00, 0b11})),
        doctest::Contains("DuplicateLabel"), Error);
  }
}

TEST_CASE("generate closes a subbasis") {
  SUBCASE("worked subbasis {a},{c,d}") {
    const FiniteSpace got = FiniteSpace::generate(
        {"a", "b", "c", "d"}, family_from_masks(4, {0b0001, 0b1100}));
    const SetFamily expected = oracle::generate_by_fixpoint(
        4, family_from_masks(4, {0b0001, 0b1100}));
    CHECK(got.opens() == expected);
    CHECK(got.opens() == family_from_masks(4, {0b0000, 0b0001, 0b1100, 0b1101, 0b1111}));
  }
  SUBCASE("empty subbasis gives the indiscrete topology") {
    const FiniteSpace got = FiniteSpace::generate({"a", "b", "c"}, SetFamily(3, {}));
    CHECK(got.opens() == family_from_masks(3, {0b000, 0b111}));
  }
  SUBCASE("singletons generate the discrete topology") {
    const FiniteSpace got = FiniteSpace::generate(
        {"a", "b", "c"}, family_from_masks(3, {0b001, 0b010, 0b100}));
    CHECK(got.opens().size() == 8);
  }
  SUBCASE("random subbases agree with the fixpoint oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + int(rng() % 4);
      std::vector<PointSet> sets;
      const int count = int(rng() % 4);
      for (int i = 0; i < count; ++i) sets.push_back(PointSet(rng() & PointSet::full(n).bits));
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
      const SetFamily sub(n, sets);
      CHECK(FiniteSpace::generate(names, sub).opens() == oracle::generate_by_fixpoint(n, sub));
    }
  }
}

TEST_CASE("closure and interior against the family-scan oracle") {
  const FiniteSpace s4 = oracle::space_abcd_7();
  SUBCASE("worked values") {
    CHECK(s4.closure(oracle::set_of(s4, {"a"})) == oracle::set_of(s4, {"a", "b"}));
    CHECK(s4.interior(oracle::set_of(s4, {"a", "b"})) == oracle::set_of(s4, {"a"}));
  }
  SUBCASE("discrete and indiscrete extremes") {
    const FiniteSpace d = FiniteSpace::discrete({"x", "y", "z"});
    const FiniteSpace i = FiniteSpace::indiscrete({"x", "y", "z"});
    for (Mask m = 0; m < 8; ++m) {
      CHECK(d.closure(PointSet(m)) == PointSet(m));
      CHECK(d.interior(PointSet(m)) == PointSet(m));
      if (m != 0 && m != 7) {
        CHECK(i.closure(PointSet(m)) == i.full_set());
        CHECK(i.interior(PointSet(m)) == PointSet::empty());
      }
    }
  }
  SUBCASE("duality and oracle agreement on every space with up to 4 points") {
    for (int n = 1; n <= 4; ++n)
      for (const FiniteSpace& s : enumerate_topologies(n)) {
        for (Mask m = 0; m < (Mask(1) << n); ++m) {
          const PointSet a(m);
          CHECK(s.closure(a) == oracle::closure_by_intersection(s, a));
          CHECK(s.interior(a) == oracle::interior_by_union(s, a));
          CHECK(s.closure(a) == s.interior(a.complement(n)).complement(n));
        }
      }
  }
}

TEST_CASE("subspace traces") {
  const FiniteSpace s4 = oracle::space_abcd_7();
  SUBCASE("worked trace on {a,b}") {
    const FiniteSpace sub = subspace(s4, oracle::set_of(s4, {"a", "b"}));
    CHECK(sub.point_names() == std::vector<std::string>{"a", "b"});
    CHECK(sub.opens() == family_from_masks(2, {0b00, 0b01, 0b11}));
  }
  SUBCASE("full-carrier subspace is the identity") {
    const FiniteSpace sub = subspace(s4, s4.full_set());
    CHECK(sub == s4);
  }
  SUBCASE("subspaces of a discrete space stay discrete") {
    const FiniteSpace d = FiniteSpace::discrete({"x", "y", "z"});
    const FiniteSpace sub = subspace(d, PointSet(0b101));
    CHECK(sub.opens().size() == 4);
  }
  SUBCASE("empty carrier is rejected") {
    CHECK_THROWS_AS(subspace(s4, PointSet::empty()), Error);
  }
}

TEST_CASE("product topology") {
  SUBCASE("discrete times discrete is discrete") {
    const FiniteSpace d2 = FiniteSpace::discrete({"x", "y"});
    const FiniteSpace p = product(d2, d2);
    CHECK(p.size() == 4);
    CHECK(p.opens().size() == 16);
    CHECK(p.point_names()[0] == "x.x");
  }
  SUBCASE("indiscrete times indiscrete has two opens") {
    const FiniteSpace i2 = FiniteSpace::indiscrete({"x", "y"});
    CHECK(product(i2, i2).opens().size() == 2);
  }
  SUBCASE("rectangle-union oracle agreement, including the Sierpinski square") {
    const FiniteSpace sp = oracle::sierpinski();
    const FiniteSpace p = product(sp, sp);
    const SetFamily expected = oracle::product_opens_by_rectangle_unions(sp, sp);
    CHECK(p.opens() == expected);
    CHECK(p.opens().size() == 6);
    for (const FiniteSpace& x : enumerate_topologies(2))
      for (const FiniteSpace& y : enumerate_topologies(2))
        CHECK(product(x, y).opens() == oracle::product_opens_by_rectangle_unions(x, y));
  }
  SUBCASE("carrier limit") {
    const FiniteSpace d5 = FiniteSpace::discrete({"1", "2", "3", "4", "5"});
    CHECK_THROWS_AS(product(d5, d5), Error);
  }
}

TEST_CASE("preorder round trip") {
  for (int n = 1; n <= 4; ++n)
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const Preorder rel = Preorder::specialization(s);
      CHECK(rel.to_space(s.point_names()) == s);
    }
}

TEST_CASE("enumeration counts") {
  CHECK(count_topologies(1) == 1);
  CHECK(count_topologies(2) == 4);
  CHECK(count_topologies(3) == 29);
  CHECK(count_topologies(4) == 355);
  SUBCASE("family-filter oracle cross-check") {
    for (int n = 1; n <= 4; ++n)
      CHECK(count_topologies(n) == oracle::count_topologies_by_family_filter(n));
  }
  SUBCASE("partial orders") {
    CHECK(count_topologies(1, true) == 1);
    CHECK(count_topologies(2, true) == 3);
    CHECK(count_topologies(3, true) == 19);
    CHECK(count_topologies(4, true) == 219);
  }
  SUBCASE("bounds") { CHECK_THROWS_AS(count_topologies(6), Error); }
}

TEST_CASE("enumerated spaces validate and stream deterministically") {
  const auto spaces = enumerate_topologies(3);
  REQUIRE(spaces.size() == 29);
  for (const FiniteSpace& s : spaces)
    CHECK_NOTHROW(FiniteSpace::validate(s.point_names(), s.opens()));

  // window partition reproduces the full stream
  TopologyEnumerator e(3);
  std::vector<FiniteSpace> windowed;
  const std::uint64_t half = e.candidate_count() / 2;
  e.for_each(0, half, [&](const FiniteSpace& s) { windowed.push_back(s); });
  e.for_each(half, e.candidate_count(), [&](const FiniteSpace& s) { windowed.push_back(s); });
  REQUIRE(windowed.size() == spaces.size());
  for (std::size_t i = 0; i < spaces.size(); ++i) CHECK(windowed[i] == spaces[i]);
}
